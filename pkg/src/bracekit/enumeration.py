"""Skew braces of small order from regular subgroups of the holomorph.

For an additive group G, a regular subgroup N of Hol(G) = G ⋊ Aut(G) holds
exactly one map x -> a + σ_a(x) for each a in G, and a∘b := a + σ_a(b) is a
skew brace.  Every skew brace with additive group G arises this way.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .constructions import trivial_brace
from .core import CayleyTablePair, validate
from .errors import BoundExceeded
from .groups import dedup_braces, groups_of_order, max_order
from .morphisms import automorphisms, canonical_form, canonical_relabel


def _semiregular(perm):
    """All cycles of equal length, i.e. every nontrivial power is fixed-point free."""
    n = len(perm)
    seen = [False] * n
    length = None
    for s in range(n):
        if seen[s]:
            continue
        k, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            k += 1
        if length is None:
            length = k
        elif k != length:
            return False
    return True


def _compose(p, q):
    # (p·q)(x) = p(q(x))
    return tuple(p[x] for x in q)


def _closure(gens, n):
    """Group generated by permutation ``gens`` keyed by image of 0, or None if not semiregular."""
    identity = tuple(range(n))
    group = {0: identity}
    queue = [identity]
    for g in queue:
        for s in gens:
            h = _compose(g, s)
            t = h[0]
            old = group.get(t)
            if old is None:
                group[t] = h
                queue.append(h)
            elif old != h:
                return None
    return group


class _HolomorphSearch:
    def __init__(self, table):
        self.table = np.asarray(table)
        self.n = n = self.table.shape[0]
        rows = self.table.tolist()
        self.auts = automorphisms(trivial_brace(self.table))
        self.cand = {}
        for a in range(1, n):
            ra = rows[a]
            perms = (tuple(ra[s[x]] for x in range(n)) for s in self.auts)
            self.cand[a] = [p for p in perms if _semiregular(p)]

    def _first_level(self, a):
        """Candidates for a, one per orbit under conjugation by Stab_Aut(a)."""
        n = self.n
        stab = [s for s in self.auts if s[a] == a]
        inverses = []
        for s in stab:
            inv = [0] * n
            for x, y in enumerate(s):
                inv[y] = x
            inverses.append(inv)
        seen, reps = set(), []
        for p in self.cand[a]:
            if p in seen:
                continue
            reps.append(p)
            for s, si in zip(stab, inverses):
                seen.add(tuple(s[p[si[x]]] for x in range(n)))
        return reps

    def regular_subgroups(self, reduce=True):
        n = self.n
        if n == 1:
            yield {0: (0,)}
            return

        def rec(gens, group):
            if len(group) == n:
                yield group
                return
            free = [a for a in range(n) if a not in group]
            a = min(free, key=lambda x: (len(self.cand[x]), x))
            for p in self.cand[a]:
                g2 = _closure(gens + [p], n)
                if g2 is not None:
                    yield from rec(gens + [p], g2)

        first = self._first_level(1) if reduce else self.cand[1]
        for p in first:
            g = _closure([p], n)
            if g is not None:
                yield from rec([p], g)


def _brace_from_subgroup(table, group):
    n = len(group)
    circ = np.array([group[a] for a in range(n)], dtype=np.intp)
    return validate(CayleyTablePair(table, circ))


def iter_skew_braces_on(table, reduce=True):
    """Skew braces with additive group ``table``; isomorphic repeats are possible."""
    search = _HolomorphSearch(table)
    for group in search.regular_subgroups(reduce=reduce):
        yield _brace_from_subgroup(search.table, group)


def skew_braces_on(table) -> list:
    """All skew braces with the given additive group, up to isomorphism.

    Returned in canonical labelling, sorted by canonical form.
    """
    reps = [canonical_relabel(B) for B in dedup_braces(iter_skew_braces_on(table))]
    reps.sort(key=canonical_form)
    return reps


@lru_cache(maxsize=None)
def _all_skew_braces(n):
    found = {}
    for G in groups_of_order(n, bound=n):
        for B in skew_braces_on(G):
            found.setdefault(canonical_form(B), B)
    out = []
    for i, code in enumerate(sorted(found)):
        B = found[code]
        B.name = f"SB({n},{i})"
        out.append(B)
    return tuple(out)


def all_skew_braces(n, bound=None) -> list:
    """Skew braces of order n up to isomorphism, sorted by canonical form."""
    bound = max_order() if bound is None else bound
    if n < 1 or n > bound:
        raise BoundExceeded(f"order {n} outside 1..{bound}")
    return list(_all_skew_braces(n))


def corpus(max_n, bound=None) -> list:
    out = []
    for n in range(1, max_n + 1):
        out.extend(all_skew_braces(n, bound=bound))
    return out


def iter_all_raw(n, bound=None):
    """Every skew brace of order n produced by the holomorph search, without deduplication."""
    bound = max_order() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"order {n} outside 1..{bound}")
    for G in groups_of_order(n, bound=bound):
        yield from iter_skew_braces_on(G)


BACKTRACK_BOUND = 7


def _additive_automorphisms_brute(table):
    """Automorphisms of a small group by testing every permutation fixing 0."""
    from itertools import permutations

    n = table.shape[0]
    rows = table.tolist()
    out = []
    for rest in permutations(range(1, n)):
        s = (0,) + rest
        if all(s[rows[a][b]] == rows[s[a]][s[b]] for a in range(n) for b in range(n)):
            out.append(s)
    return out


def backtrack_skew_braces_on(table) -> list:
    """Skew braces on a small additive group by backtracking over ∘-table rows.

    Row a of a ∘-table is b -> a + λ_a(b) with λ_a an additive automorphism;
    rows are chosen one at a time and pruned by column injectivity and every
    associativity instance whose rows are already fixed.  This shares no code
    with the holomorph search and serves as its cross-check.
    """
    table = np.asarray(table)
    n = table.shape[0]
    if n > BACKTRACK_BOUND:
        raise BoundExceeded(f"backtracking oracle is limited to order {BACKTRACK_BOUND}")
    rows = table.tolist()
    autos = _additive_automorphisms_brute(table)
    circ = [None] * n
    circ[0] = list(range(n))
    found = []

    def consistent(a):
        col_seen = [set() for _ in range(n)]
        for x in range(n):
            if circ[x] is None:
                continue
            for b, v in enumerate(circ[x]):
                if v in col_seen[b]:
                    return False
                col_seen[b].add(v)
        for x in range(n):
            if circ[x] is None:
                continue
            for y in range(n):
                if circ[y] is None or (x != a and y != a and circ[circ[x][y]] is None):
                    continue
                xy = circ[x][y]
                if circ[xy] is None:
                    continue
                rx, ry, rxy = circ[x], circ[y], circ[xy]
                if any(rxy[z] != rx[ry[z]] for z in range(n)):
                    return False
        return True

    def rec(a):
        if a == n:
            found.append(validate(CayleyTablePair(table, circ)))
            return
        for s in autos:
            circ[a] = [rows[a][s[b]] for b in range(n)]
            if consistent(a):
                rec(a + 1)
        circ[a] = None

    rec(1)
    reps = [canonical_relabel(B) for B in dedup_braces(found)]
    reps.sort(key=canonical_form)
    return reps
