"""Acceptance criteria 1-10, each at its stated tolerance and time budget.

Every criterion logs one ``criterion N: PASS|FAIL`` line; the lines are
collected into the pytest terminal summary and printed directly when the file
is run as a script (``python3 tests/test_acceptance.py``).
"""

import os
import sys
import time
import warnings

import numpy as np
import pytest

from bracekit.cli import main as cli_main
from bracekit.commutators import ALL_VARIETIES, Variety, huq_commutator, naive_star_set, radicalator, rel_commutator
from bracekit.constructions import b4, trivial_cyclic
from bracekit.core import is_homomorphism
from bracekit.enumeration import all_skew_braces, backtrack_skew_braces_on, corpus, skew_braces_on
from bracekit.extensions import extension, is_central_algebraic, is_central_categorical, quotient_extension
from bracekit.formats import load_braces
from bracekit.groups import groups_of_order
from bracekit.homology import HopfSurrogateWarning, five_term_tail, hopf_quotient, series_step_extensions
from bracekit.morphisms import all_homs, canonical_form
from bracekit.quotients import factors_through, in_variety, induced_map, quotient, reflect
from bracekit.subobjects import ElementSet, all_ideals, ideal_closure, is_ideal, is_subbrace, z_r

RESULTS = {}
CORPUS_MAX = 8


def _corpus():
    return corpus(CORPUS_MAX)


def report(n, ok, detail, elapsed, budget=None):
    within = budget is None or elapsed < budget
    verdict = "PASS" if ok and within else "FAIL"
    limit = f" (budget {budget:.0f}s)" if budget else ""
    line = f"criterion {n}: {verdict}  {detail}  [{elapsed:.1f}s{limit}]"
    RESULTS[n] = line
    print(line)
    assert ok, line
    assert within, line


def test_criterion_01_axioms(tmp_path, capsys):
    t0 = time.perf_counter()
    problems = []
    for n in range(1, CORPUS_MAX + 1):
        code = cli_main(["enumerate", f"--order={n}", f"--out={tmp_path}"])
        if code != 0:
            problems.append(f"enumerate exit {code} at n={n}")
            continue
        loaded = load_braces(tmp_path / f"order-{n}.sbrace")   # validates every record
        if [canonical_form(A) for A in loaded] != [canonical_form(A) for A in all_skew_braces(n)]:
            problems.append(f"file content differs at n={n}")
    capsys.readouterr()
    for n in range(1, 7):
        for G in groups_of_order(n):
            a = [canonical_form(B) for B in skew_braces_on(G)]
            b = [canonical_form(B) for B in backtrack_skew_braces_on(G)]
            if a != b:
                problems.append(f"dual enumeration differs at n={n}")
    counts = [len(all_skew_braces(n)) for n in (1, 2, 3)]
    if counts != [1, 1, 1]:
        problems.append(f"orders 1-3 counts {counts}")
    report(1, not problems, "; ".join(problems) or "all validate, dual enumeration agrees, orders 1-3 give 1",
           time.perf_counter() - t0, 10)


def test_criterion_02_commutator_ideality():
    t0 = time.perf_counter()
    bad, checked = [], 0
    for A in _corpus():
        for I in all_ideals(A):
            for X in (Variety.GRP, Variety.RADRNG, Variety.AB):
                checked += 1
                if not is_ideal(A, rel_commutator(A, I, X)):
                    bad.append((A.name, sorted(I.members), str(X)))
            C = rel_commutator(A, I, Variety.BR)
            checked += 1
            if ideal_closure(A, C) != C:
                bad.append((A.name, sorted(I.members), "BR"))
    report(2, not bad, f"{checked} cases, {len(bad)} failures {bad[:3]}", time.perf_counter() - t0, 60)


def test_criterion_03_centrality_equivalence():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for A in _corpus():
        for I in all_ideals(A):
            e = quotient_extension(A, I)
            for X in ALL_VARIETIES:
                cases += 1
                try:
                    alg = is_central_algebraic(e, X)
                except Exception as exc:  # OracleDisagreement counts as a failure
                    bad.append((A.name, sorted(I.members), str(X), repr(exc)))
                    continue
                if alg != is_central_categorical(e, X):
                    bad.append((A.name, sorted(I.members), str(X)))
            three = {is_central_categorical(e, Variety.RADRNG), I <= z_r(A),
                     rel_commutator(A, I, Variety.RADRNG).is_zero()}
            if len(three) != 1:
                bad.append((A.name, sorted(I.members), "three-way"))
    report(3, not bad, f"{cases} extension/variety cases, {len(bad)} disagreements {bad[:3]}",
           time.perf_counter() - t0, 300)


def test_criterion_04_huq():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for A in _corpus():
        for I in all_ideals(A):
            cases += 1
            if huq_commutator(A, I) != rel_commutator(A, I, Variety.AB):
                bad.append((A.name, sorted(I.members)))
    report(4, not bad, f"{cases} cases, {len(bad)} mismatches {bad[:3]}", time.perf_counter() - t0)


def test_criterion_05_z_r():
    t0 = time.perf_counter()
    bad = []
    for A in _corpus():
        Z = z_r(A)
        if not is_subbrace(A, Z):
            bad.append((A.name, "not a subbrace"))
        D = A.distributor_tensor
        for z in Z:
            s = A.add[z]
            # [z+a,b,c] = [a,z+b,c] = [a,b,z+c] = [a,b,c]
            if not (np.array_equal(D[s], D) and np.array_equal(D[:, s], D) and np.array_equal(D[:, :, s], D)):
                bad.append((A.name, int(z)))
    report(5, not bad, f"{len(_corpus())} braces, {len(bad)} failures {bad[:3]}", time.perf_counter() - t0)


def test_criterion_06_reflectors():
    t0 = time.perf_counter()
    bad = []
    members = {X: [T for T in _corpus() if in_variety(T, X)] for X in ALL_VARIETIES}
    homs = 0
    for A in _corpus():
        ideals = all_ideals(A)
        for X in ALL_VARIETIES:
            q = reflect(A, X)
            R = rel_commutator(A, ElementSet.full(A), X)
            if not in_variety(q.target, X):
                bad.append((A.name, str(X), "target"))
            if q.ideal != R:
                bad.append((A.name, str(X), "kernel"))
            for I in ideals:
                if in_variety(quotient(A, I).target, X) and not R <= I:
                    bad.append((A.name, str(X), "minimality", sorted(I.members)))
            for T in members[X]:
                for f in all_homs(A, T):
                    homs += 1
                    if not factors_through(f, q) or not induced_map(f, q).is_hom:
                        bad.append((A.name, str(X), "universality", T.name))
    report(6, not bad, f"{homs} homomorphisms into members of each variety, {len(bad)} failures {bad[:3]}",
           time.perf_counter() - t0)


def test_criterion_07_five_term_tail():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for A in _corpus():
        for I in all_ideals(A):
            e = quotient_extension(A, I)
            for X in ALL_VARIETIES:
                cases += 1
                rep = five_term_tail(e, X)
                if not rep.exact:
                    bad.append((A.name, sorted(I.members), str(X), str(rep)))
    report(7, not bad, f"{cases} cases, {len(bad)} not exact {bad[:2]}", time.perf_counter() - t0)


def test_criterion_08_series_centrality():
    t0 = time.perf_counter()
    bad, steps = [], 0
    for A in _corpus():
        for X in ALL_VARIETIES:
            for n, e in series_step_extensions(A, X, A.n + 1):
                steps += 1
                if not is_central_algebraic(e, X):
                    bad.append((A.name, str(X), n))
    report(8, not bad, f"{steps} series steps, {len(bad)} not central {bad[:3]}", time.perf_counter() - t0)


def test_criterion_09_naive_star_below_24():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for A in corpus(12):
        for I in all_ideals(A):
            cases += 1
            if not is_ideal(A, naive_star_set(A, I)):
                bad.append((A.name, sorted(I.members)))
    report(9, not bad, f"orders <= 12: {cases} (brace, ideal) pairs, {len(bad)} failures", time.perf_counter() - t0)


@pytest.mark.skipif(bool(os.environ.get("BRACEKIT_SKIP_SIZE24")), reason="size-24 search disabled")
def test_criterion_09_optional_size_24_search():
    from bracekit.suites import naive_star_search, subject_id
    from oracles import brute_is_ideal

    t0 = time.perf_counter()
    rec = naive_star_search(24, os.environ.get("BRACEKIT_SIZE24_DATABASE"))
    ok = rec.verdict == "PASS"
    if ok:
        # re-check the witness with the brute-force ideal test
        digest, I, N = rec.witness
        A = next(A for A in all_skew_braces(24) if subject_id(A) == digest)
        tables = (A.add.tolist(), A.circ.tolist())
        ok = brute_is_ideal(tables, I) and not brute_is_ideal(tables, N)
        ok = ok and sorted(naive_star_set(A, ElementSet(A, I)).members) == N
    RESULTS["9b"] = (f"criterion 9 (size-24 search): {'PASS' if ok else 'FAIL'}  witness={rec.witness}"
                     f"  [{time.perf_counter() - t0:.1f}s]")
    print(RESULTS["9b"])
    assert ok


def test_criterion_10_b4_fixtures():
    t0 = time.perf_counter()
    A = b4()
    checks = {
        "star table": A.star_table.tolist() == [[(2 * a * b) % 4 for b in range(4)] for a in range(4)],
        "ideals": [sorted(I.members) for I in all_ideals(A)] == [[0], [0, 2], [0, 1, 2, 3]],
        "radicalator": radicalator(A) == {0},
        "[B4,B4]_Ab": rel_commutator(A, ElementSet.full(A), Variety.AB) == {0, 2},
    }
    e = extension(is_homomorphism(A, trivial_cyclic(2), [a % 2 for a in range(4)]))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HopfSurrogateWarning)
        checks["hopf_quotient order"] = hopf_quotient(e, Variety.AB).n == 2
    failing = [k for k, ok in checks.items() if not ok]
    report(10, not failing, f"failing: {failing}" if failing else "B4 fixture values match",
           time.perf_counter() - t0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
