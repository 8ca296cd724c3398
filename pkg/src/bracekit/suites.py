"""Corpus-wide verification suites producing one ResultRecord per (subject, check)."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
import hashlib
import os
import time
import warnings

import numpy as np

from .commutators import (
    ALL_VARIETIES,
    Variety,
    commutator_generators,
    derived_ideal,
    huq_commutator,
    naive_star_set,
    radicalator,
    reflector_kernel,
    rel_commutator,
    star_ideal,
)
from .core import validate
from .enumeration import (
    BACKTRACK_BOUND,
    all_skew_braces,
    backtrack_skew_braces_on,
    skew_braces_on,
)
from .errors import BoundExceeded, OracleDisagreement
from .extensions import is_central_algebraic, is_central_categorical, pullback, quotient_extension
from .formats import ResultRecord, load_braces
from .groups import groups_of_order, max_order as enumeration_bound
from .homology import HopfSurrogateWarning, five_term_tail, h1, hopf_quotient, lower_central_series, series_step_extensions
from .morphisms import all_homs, are_isomorphic, canonical_form, element_invariants
from .quotients import factors_through, in_variety, induced_map, quotient, reflect
from .subobjects import (
    ElementSet,
    additive_center,
    additive_closure,
    all_ideals,
    ideal_closure,
    is_circle_subgroup,
    is_ideal,
    is_strong_left_ideal,
    is_subbrace,
    z_r,
)

SUITES = ("axioms", "commutators", "centrality", "huq", "homology", "series", "paper", "all")
FULL_SUITES = ("paper", "all")
UNIVERSALITY_MAX_ORDER = 8
OBSERVATION = "observe."


def subject_id(A):
    return f"o{A.n}-{hashlib.sha1(canonical_form(A)).hexdigest()[:12]}"


def workers():
    return max(1, int(os.environ.get("BRACEKIT_WORKERS", "1")))


class _Checks:
    """Collects the first failure witness per check name for one subject."""

    def __init__(self):
        self.results = {}
        self.times = {}

    def record(self, name, witness=None):
        # keep the first witness seen for each check
        if self.results.get(name) is None:
            self.results[name] = witness

    def expect(self, name, ok, witness):
        self.record(name, None if ok else witness)

    def timed(self, name, started):
        self.times[name] = self.times.get(name, 0.0) + (time.perf_counter() - started) * 1000

    def to_records(self, subject):
        out = []
        for name in sorted(self.results):
            w = self.results[name]
            if name.startswith(OBSERVATION):
                verdict = "SAME" if w is None else "DIFFERS"
            else:
                verdict = "PASS" if w is None else "FAIL"
            out.append(ResultRecord(subject, name, verdict, w, self.times.get(name, 0.0)))
        return out


def _members(S):
    return sorted(S.members)


# -- per-brace checks ----------------------------------------------------------

def check_axioms(A, varieties, ck):
    n = A.n
    idx = np.arange(n)
    try:
        validate(A.tables)
        ck.record("axioms.validate")
    except Exception as exc:  # report, do not abort the corpus
        ck.record("axioms.validate", repr(exc))
    st = A.star_table
    rhs = A.add[A.add[idx[:, None], st], idx[None, :]]
    bad = np.argwhere(rhs != A.circ)
    ck.expect("axioms.circle_is_a_plus_star_plus_b", not bad.size, bad[:1].tolist())
    for label, act in (("lambda", A.lam), ("rho", A.rho)):
        witness = None
        for a in range(n):
            perm = act[a]
            if len(set(perm.tolist())) != n:
                witness = (a, "not bijective")
                break
            if not np.array_equal(perm[A.add], A.add[perm[:, None], perm[None, :]]):
                witness = (a, "not additive")
                break
        ck.expect(f"axioms.{label}_is_additive_automorphism", witness is None, witness)
        # act_{a∘b} = act_a · act_b
        composed = act[:, act]                       # [a, b, c] = act_a(act_b(c))
        direct = act[A.circ]                         # [a, b, c] = act_{a∘b}(c)
        bad = np.argwhere(composed.transpose(0, 1, 2) != direct)
        ck.expect(f"axioms.{label}_is_circle_homomorphism", not bad.size, bad[:1].tolist())
    D = A.distributor_tensor
    ok = not (D[:, :, 0].any() or D[:, 0, :].any() or D[0, :, :].any())
    ck.expect("axioms.distributor_vanishes_with_zero_slot", ok, "nonzero")
    ck.expect("axioms.corpus_labelling_is_canonical",
              canonical_form(A)[1:] == A.add.astype(np.uint8).tobytes() + A.circ.astype(np.uint8).tobytes(),
              "labelling differs from canonical form")


def check_subobjects(A, varieties, ck):
    ideals = all_ideals(A)
    sets = {I.members for I in ideals}
    for I in ideals:
        ck.expect("subobjects.ideal_lattice_members_are_ideals", is_ideal(A, I), _members(I))
        ck.expect("subobjects.ideal_closure_fixes_ideals", ideal_closure(A, I) == I, _members(I))
        ck.expect("subobjects.ideals_are_circle_subgroups", is_circle_subgroup(A, I), _members(I))
        ck.expect("subobjects.additive_closure_idempotent", additive_closure(A, I) == I, _members(I))
    for I in ideals:
        for J in ideals:
            ok = (I.members & J.members) in sets and ideal_closure(A, I | J).members in sets
            ck.expect("subobjects.ideal_lattice_closed", ok, (_members(I), _members(J)))
    for x in range(A.n):
        S = ElementSet(A, [x])
        C = additive_closure(A, S)
        ok = S <= C and additive_closure(A, C) == C
        cl = ideal_closure(A, S)
        ck.expect("subobjects.additive_closure_extensive_idempotent", ok, x)
        ck.expect("subobjects.ideal_closure_is_ideal", is_ideal(A, cl) and C <= cl, x)
    Z = additive_center(A)
    ck.expect("subobjects.center_is_strong_left_ideal", is_strong_left_ideal(A, Z), _members(Z))
    ZR = z_r(A)
    ck.expect("subobjects.z_r_inside_center", ZR <= Z, _members(ZR))
    ck.expect("subobjects.z_r_is_subbrace", is_subbrace(A, ZR), _members(ZR))
    D = A.distributor_tensor
    witness = None
    for z in ZR:
        shift = A.add[z]
        if not (np.array_equal(D[shift], D) and np.array_equal(D[:, shift], D)
                and np.array_equal(D[:, :, shift], D)):
            witness = z
            break
    ck.expect("subobjects.z_r_shift_invariance", witness is None, witness)


def _radic_quotient_checks(A, I, ck):
    J = rel_commutator(A, I, Variety.RADRNG)
    q = quotient(A, J)
    p = q.projection.map
    T = q.target
    img = np.unique(p[I.array])
    ok = (T.add[img, :] == T.add[:, img].T).all()
    ck.expect("commutators.radrng_quotient_image_central", bool(ok), _members(I))
    add, circ, neg = A.add, A.circ, A.neg
    n = A.n
    lhs = circ[add[:, :, None], np.arange(n)[None, None, :]]             # (a+b)∘c
    rhs = add[add[circ[:, None, :], neg[None, None, :]], circ[None, :, :]]  # a∘c - c + b∘c
    m = I.mask
    slot = m[:, None, None] | m[None, :, None] | m[None, None, :]
    bad = np.argwhere((p[lhs] != p[rhs]) & slot)
    ck.expect("commutators.radrng_quotient_right_distributive", not bad.size, bad[:1].tolist())
    # identities for a in I, b, d in A, compared mod J
    a = I.array[:, None, None]
    b = np.arange(n)[None, :, None]
    d = np.arange(n)[None, None, :]
    ba, ab = circ[b, a], circ[a, b]
    pairs = [
        (add[circ[add[ba, neg[b]], d], neg[d]], add[circ[ba, d], neg[circ[b, d]]]),
        (add[circ[add[ab, neg[b]], d], neg[d]], add[circ[ab, d], neg[circ[b, d]]]),
        (add[circ[add[b, neg[ba]], d], neg[d]], add[circ[b, d], neg[circ[ba, d]]]),
        (add[circ[add[b, neg[ab]], d], neg[d]], add[circ[b, d], neg[circ[ab, d]]]),
    ]
    for k, (lhs, rhs) in enumerate(pairs, start=1):
        bad = np.argwhere(p[lhs] != p[rhs])
        ck.expect(f"commutators.radrng_quotient_identity_{k}", not bad.size, bad[:1].tolist())


def check_commutators(A, varieties, ck):
    ideals = all_ideals(A)
    full = ElementSet.full(A)
    comms = {}
    for I in ideals:
        for X in ALL_VARIETIES:
            C = rel_commutator(A, I, X)
            comms[I.members, X] = C
            if X in varieties:
                ck.expect(f"commutators.is_ideal[{X}]", is_ideal(A, C), _members(I))
                if X is Variety.BR:
                    ck.expect("commutators.br_closure_fixed_point", ideal_closure(A, C) == C, _members(I))
                ck.expect(f"commutators.contained_in_ideal[{X}]", C <= I, _members(I))
        ck.expect("commutators.br_inside_ab", comms[I.members, Variety.BR] <= comms[I.members, Variety.AB],
                  _members(I))
        ck.expect("commutators.grp_inside_ab", comms[I.members, Variety.GRP] <= comms[I.members, Variety.AB],
                  _members(I))
        N = naive_star_set(A, I)
        ck.expect("commutators.naive_star_set_is_ideal", is_ideal(A, N), (_members(I), _members(N)))
        _radic_quotient_checks(A, I, ck)
        # symmetric conjugates c + a*b - c in the Grp generators: observed, not assumed
        st = A.star_table
        sym = np.unique(np.concatenate([commutator_generators(A, I, Variety.GRP),
                                        A.conj[:, np.unique(st[I.array, :])].ravel()]))
        S = additive_closure(A, sym)
        ck.expect(OBSERVATION + "grp_symmetric_conjugates_same_ideal",
                  S == comms[I.members, Variety.GRP], (_members(I), _members(S)))
    for X in varieties:
        for I in ideals:
            for J in ideals:
                if I <= J:
                    ck.expect(f"commutators.monotone[{X}]", comms[I.members, X] <= comms[J.members, X],
                              (_members(I), _members(J)))
    SI = star_ideal(A)
    ck.expect("commutators.star_ideal_is_ideal", is_ideal(A, SI), _members(SI))
    ck.expect("commutators.star_ideal_equals_grp_commutator", SI == rel_commutator(A, full, Variety.GRP),
              _members(SI))
    ck.expect("commutators.star_quotient_is_group", in_variety(quotient(A, SI).target, Variety.GRP),
              _members(SI))
    DI = derived_ideal(A)
    ck.expect("commutators.derived_ideal_is_ideal", is_ideal(A, DI), _members(DI))
    ck.expect("commutators.derived_ideal_equals_ab_commutator", DI == rel_commutator(A, full, Variety.AB),
              _members(DI))
    R = radicalator(A)
    ck.expect("commutators.radicalator_quotient_is_radical_ring",
              in_variety(quotient(A, R).target, Variety.RADRNG), _members(R))


def _universality_targets(X, max_n):
    cap = min(UNIVERSALITY_MAX_ORDER, max_n)
    out = []
    for n in range(1, cap + 1):
        out.extend(T for T in all_skew_braces(n, bound=max(n, enumeration_bound())) if in_variety(T, X))
    return out


def check_reflectors(A, varieties, ck, max_n):
    ideals = all_ideals(A)
    for X in varieties:
        q = reflect(A, X)
        R = reflector_kernel(A, X)
        ck.expect(f"reflectors.target_in_variety[{X}]", in_variety(q.target, X), None)
        ck.expect(f"reflectors.kernel_is_commutator[{X}]",
                  q.ideal == R and R == rel_commutator(A, ElementSet.full(A), X), _members(R))
        for I in ideals:
            if in_variety(quotient(A, I).target, X):
                ck.expect(f"reflectors.minimal[{X}]", R <= I, _members(I))
        again = reflect(q.target, X)
        ck.expect(f"reflectors.idempotent[{X}]", again.ideal.is_zero(), _members(again.ideal))
        witness = None
        for T in _universality_targets(X, max_n):
            for f in all_homs(A, T):
                if not factors_through(f, q) or not induced_map(f, q).is_hom:
                    witness = (subject_id(T), f.map.tolist())
                    break
            if witness:
                break
        ck.expect(f"reflectors.universal[{X}]", witness is None, witness)


def check_centrality(A, varieties, ck):
    ideals = all_ideals(A)
    central = {}
    for I in ideals:
        e = quotient_extension(A, I)
        for X in varieties:
            name = f"centrality.algebraic_equals_categorical[{X}]"
            try:
                alg = is_central_algebraic(e, X)
            except OracleDisagreement as exc:
                ck.record(name, str(exc))
                continue
            cat = is_central_categorical(e, X)
            central[I.members, X] = alg
            ck.expect(name, alg == cat, (_members(I), alg, cat))
        if Variety.RADRNG in varieties:
            cat = is_central_categorical(e, Variety.RADRNG)
            zr = I <= z_r(A)
            comm = rel_commutator(A, I, Variety.RADRNG).is_zero()
            ck.expect("centrality.radrng_three_way_agreement", cat == zr == comm, (_members(I), cat, zr, comm))
        P, s, t = pullback(e.hom, e.hom)
        f = e.hom.map
        ok = (s.is_hom and t.is_hom and s.is_surjective and t.is_surjective
              and np.array_equal(f[s.map], f[t.map]))
        ck.expect("centrality.pullback_square", ok, _members(I))
    # A -> A/K central and I ⊆ K  =>  A/I -> A/K central
    for X in varieties:
        for K in ideals:
            if not central.get((K.members, X)):
                continue
            for I in ideals:
                if not I <= K:
                    continue
                q = quotient(A, I)
                image = ElementSet(q.target, q.projection.map[K.array])
                ok = is_central_algebraic(quotient_extension(q.target, image), X)
                ck.expect(f"centrality.inherited_by_quotients[{X}]", ok, (_members(K), _members(I)))


def check_huq(A, varieties, ck):
    for I in all_ideals(A):
        H = huq_commutator(A, I)
        C = rel_commutator(A, I, Variety.AB)
        ck.expect("huq.equals_ab_commutator", H == C, (_members(I), _members(H), _members(C)))


def check_homology(A, varieties, ck):
    ideals = all_ideals(A)
    for X in varieties:
        ck.expect(f"homology.h1_in_variety[{X}]", in_variety(h1(A, X), X), None)
        for I in ideals:
            e = quotient_extension(A, I)
            rep = five_term_tail(e, X)
            ck.expect(f"homology.five_term_tail_exact[{X}]", rep.exact, (_members(I), str(rep)))
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", HopfSurrogateWarning)
                H = hopf_quotient(e, X)
            if rel_commutator(A, I, X).is_zero():
                top = I & reflector_kernel(A, X)
                ck.expect(f"homology.hopf_of_central_is_numerator[{X}]", H.n == len(top), _members(I))


def check_series(A, varieties, ck, max_steps=None):
    max_steps = max_steps or A.n + 1
    for X in varieties:
        series = lower_central_series(A, X, max_steps)
        ok_ideal = all(is_ideal(A, s.term) for s in series)
        ck.expect(f"series.terms_are_ideals[{X}]", ok_ideal, None)
        strict = all(b.term < a.term for a, b in zip(series[:-2], series[1:-1]))
        last_ok = len(series) < 2 or series[-1].term <= series[-2].term
        ck.expect(f"series.strictly_decreasing[{X}]", strict and last_ok,
                  [_members(s.term) for s in series])
        for n, ext in series_step_extensions(A, X, max_steps):
            ck.expect(f"series.steps_are_central[{X}]", is_central_algebraic(ext, X), n)


PER_BRACE = {
    "axioms": [check_axioms],
    "commutators": [check_subobjects, check_commutators, check_reflectors],
    "centrality": [check_centrality],
    "huq": [check_huq],
    "homology": [check_homology],
    "series": [check_series],
}


def _expand(name):
    if name in FULL_SUITES:
        return list(PER_BRACE)
    if name not in PER_BRACE:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    return [name]


def _run_brace(args):
    suites, n, i, max_n, varieties = args
    A = all_skew_braces(n, bound=max(n, enumeration_bound()))[i]
    ck = _Checks()
    for suite in suites:
        for fn in PER_BRACE[suite]:
            started = time.perf_counter()
            before = set(ck.results)
            try:
                if fn is check_reflectors:
                    fn(A, varieties, ck, max_n)
                else:
                    fn(A, varieties, ck)
            except OracleDisagreement as exc:
                ck.record(f"{suite}.oracle_disagreement", str(exc))
            for name in set(ck.results) - before:
                ck.timed(name, started)
    return ck.to_records(subject_id(A))


def corpus_checks(suites, max_n):
    """Checks quantified over whole orders rather than single braces."""
    records = []
    if "axioms" not in suites:
        return records
    for n in range(1, max_n + 1):
        ck = _Checks()
        started = time.perf_counter()
        braces = all_skew_braces(n)
        if n <= 3:
            ck.expect("axioms.exactly_one_class_at_orders_1_to_3", len(braces) == 1, len(braces))
        trivial = [B for B in braces if B.is_trivial()]
        ck.expect("axioms.each_group_once_as_trivial_brace", len(trivial) == len(groups_of_order(n)),
                  (len(trivial), len(groups_of_order(n))))
        codes = [canonical_form(B) for B in braces]
        ck.expect("axioms.canonical_forms_distinct", len(set(codes)) == len(codes), None)
        witness = None
        for x in range(len(braces)):
            for y in range(x + 1, len(braces)):
                A, B = braces[x], braces[y]
                if sorted(element_invariants(A)) == sorted(element_invariants(B)) and are_isomorphic(A, B):
                    witness = (x, y)
        ck.expect("axioms.pairwise_non_isomorphic", witness is None, witness)
        if n <= min(6, BACKTRACK_BOUND):
            for G in groups_of_order(n):
                h = [canonical_form(B) for B in skew_braces_on(G)]
                b = [canonical_form(B) for B in backtrack_skew_braces_on(G)]
                ck.expect("axioms.holomorph_matches_backtracking", h == b, (len(h), len(b)))
        for name in ck.results:
            ck.timed(name, started)
        records.extend(ck.to_records(f"order-{n}"))
    return records


def naive_star_search(order=24, database=None):
    """Look for (A, I) of the given order with the naive star set not an ideal."""
    started = time.perf_counter()
    source = load_braces(database) if database else all_skew_braces(order, bound=max(order, enumeration_bound()))
    found = None
    for A in source:
        if A.n != order:
            continue
        for I in all_ideals(A):
            N = naive_star_set(A, I)
            if not is_ideal(A, N):
                found = (subject_id(A), _members(I), _members(N))
                break
        if found:
            break
    elapsed = (time.perf_counter() - started) * 1000
    verdict = "PASS" if found else "FAIL"
    return ResultRecord(f"order-{order}", "commutators.naive_star_counterexample_found", verdict,
                        found, elapsed)


def run_suite(name, max_order, varieties=ALL_VARIETIES, include_size_24_search=False,
              database=None, n_workers=None):
    """Run a named suite over every skew brace of order <= max_order."""
    if max_order > enumeration_bound():
        raise BoundExceeded(f"max order {max_order} exceeds enumeration bound {enumeration_bound()}")
    suites = _expand(name)
    varieties = tuple(v if isinstance(v, Variety) else Variety.parse(v) for v in varieties)
    records = corpus_checks(suites, max_order)
    jobs = [(tuple(suites), n, i, max_order, varieties)
            for n in range(1, max_order + 1) for i in range(len(all_skew_braces(n)))]
    n_workers = workers() if n_workers is None else n_workers
    if n_workers > 1:
        with ProcessPoolExecutor(n_workers) as pool:
            chunks = list(pool.map(_run_brace, jobs, chunksize=4))
    else:
        chunks = [_run_brace(job) for job in jobs]
    for chunk in chunks:
        records.extend(chunk)
    if include_size_24_search and "commutators" in suites:
        records.append(naive_star_search(24, database))
    return records


def failed(records):
    return [r for r in records if r.verdict == "FAIL"]
