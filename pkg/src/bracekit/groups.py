"""Groups of small order, generated by iterated cyclic extensions.

Every group of order below 60 is solvable, so it has a normal subgroup N of
prime index p with G/N cyclic.  Such a G is N extended by an automorphism σ
of N and an element h of N with σ(h) = h and σ^p = conjugation by h.  Running
over all (N, p, σ, h) and discarding isomorphic duplicates yields every group.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .constructions import trivial_brace
from .core import _check_group
from .errors import BoundExceeded
from .morphisms import automorphisms, canonical_form, canonical_relabel, element_invariants, find_isomorphism

DEFAULT_MAX_ORDER = 24
# smallest order of a non-solvable group; cyclic extensions miss A5
SOLVABLE_LIMIT = 60


def max_order():
    return int(os.environ.get("BRACEKIT_MAX_ORDER", DEFAULT_MAX_ORDER))


def _primes_dividing(n):
    ps, d = [], 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ps.append(n)
    return ps


def _compose(s, t):
    return tuple(s[x] for x in t)


def cyclic_extension(N, sigma, h, p):
    """Table of <N, g> with g x g^-1 = σ(x), g^p = h; (x, i) ~ x g^i has label i*|N| + x."""
    m = N.shape[0]
    powers = [tuple(range(m))]
    for _ in range(p - 1):
        powers.append(_compose(sigma, powers[-1]))
    Nl = N.tolist()
    G = np.zeros((m * p, m * p), dtype=np.intp)
    for i in range(p):
        si = powers[i]
        for x in range(m):
            row = Nl[x]
            for j in range(p):
                for y in range(m):
                    z = row[si[y]]
                    k = i + j
                    if k >= p:
                        z = Nl[z][h]
                        k -= p
                    G[i * m + x, j * m + y] = k * m + z
    return G


def _extensions_of(N, p):
    m = N.shape[0]
    inv = np.argmax(N == 0, axis=0)
    for sigma in automorphisms(trivial_brace(N)):
        sp = tuple(range(m))
        for _ in range(p):
            sp = _compose(sigma, sp)
        for h in range(m):
            if sigma[h] != h:
                continue
            conj = tuple(int(N[N[h, x], inv[h]]) for x in range(m))
            if conj == sp:
                yield cyclic_extension(N, sigma, h, p)


def dedup_braces(braces):
    """Drop isomorphic duplicates, keeping the first of each class."""
    buckets = {}
    kept = []
    for B in braces:
        key = tuple(sorted(element_invariants(B)))
        reps = buckets.setdefault(key, [])
        if any(find_isomorphism(B, R) is not None for R in reps):
            continue
        reps.append(B)
        kept.append(B)
    return kept


@lru_cache(maxsize=None)
def _groups(n):
    if n == 1:
        return (np.zeros((1, 1), dtype=np.intp),)
    candidates = []
    for p in _primes_dividing(n):
        for N in _groups(n // p):
            for G in _extensions_of(N, p):
                _check_group("·", G)
                candidates.append(trivial_brace(G))
    reps = [canonical_relabel(B) for B in dedup_braces(candidates)]
    reps.sort(key=canonical_form)
    out = []
    for B in reps:
        t = np.array(B.add)
        t.setflags(write=False)
        out.append(t)
    return tuple(out)


def groups_of_order(n, bound=None):
    """All groups of order n up to isomorphism, identity 0, in canonical labelling."""
    bound = max_order() if bound is None else bound
    if n < 1 or n > bound:
        raise BoundExceeded(f"order {n} outside 1..{bound}")
    if n >= SOLVABLE_LIMIT:
        raise BoundExceeded(f"cyclic extensions only reach solvable groups; order {n} >= {SOLVABLE_LIMIT}")
    return list(_groups(n))
