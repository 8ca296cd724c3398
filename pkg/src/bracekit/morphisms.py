"""Homomorphism and isomorphism search, automorphisms and canonical forms.

Everything here is driven by *covering tuples*: a tuple of elements g_1..g_k
such that breadth-first search from 0 along x -> x + g_j and x -> x ∘ g_j
reaches every element.  A map on a covering tuple extends in at most one way
to a homomorphism, and the search order gives a relabelling of the brace.
"""

from __future__ import annotations

import os
from itertools import product

import numpy as np

from .core import CayleyTablePair, SkewBrace, check_hom, validate
from .errors import BoundExceeded

HOM_BOUND = 12

CanonicalForm = bytes


def _bfs_order(A: SkewBrace, gens):
    add, circ = A.rows
    n = A.n
    seen = [False] * n
    seen[0] = True
    order = [0]
    for x in order:
        ra, rc = add[x], circ[x]
        for g in gens:
            y = ra[g]
            if not seen[y]:
                seen[y] = True
                order.append(y)
            y = rc[g]
            if not seen[y]:
                seen[y] = True
                order.append(y)
    return order


def covers(A: SkewBrace, gens) -> bool:
    return len(_bfs_order(A, gens)) == A.n


def element_invariants(A: SkewBrace):
    """Per-element isomorphism invariants used to prune searches."""
    st = A.star_table
    zl = (st == 0).sum(axis=1)
    zr = (st == 0).sum(axis=0)
    central = (A.add == A.add.T).all(axis=1)
    lam_fixed = (A.lam == np.arange(A.n)[None, :]).sum(axis=1)
    return [
        (int(A.add_order[x]), int(A.circ_order[x]), int(zl[x]), int(zr[x]),
         bool(central[x]), int(lam_fixed[x]))
        for x in range(A.n)
    ]


def _min_covering_tuples(A: SkewBrace, inv, all_minimal=True):
    """Covering tuples of minimal length whose invariant sequence is least.

    With ``all_minimal=False`` stop at the first one found.
    """
    if A.n == 1:
        return [()]
    classes = {}
    for x in range(1, A.n):
        classes.setdefault(inv[x], []).append(x)
    keys = sorted(classes)
    for k in range(1, A.n):
        # invariant sequences in increasing order, each expanded to all its tuples
        for seq in product(keys, repeat=k):
            found = []
            for tup in product(*(classes[c] for c in seq)):
                if len(set(tup)) < k or not covers(A, tup):
                    continue
                found.append(tup)
                if not all_minimal:
                    return found
            if found:
                return found
    raise AssertionError("no covering tuple")


def generating_tuple(A: SkewBrace):
    """A shortest covering tuple for A (deterministic)."""
    return _min_covering_tuples(A, element_invariants(A), all_minimal=False)[0]


def extend_map(A: SkewBrace, B: SkewBrace, gens, images, injective=False):
    """Extend g_j -> h_j along the covering search; returns the map or None.

    The result, if any, still has to be checked for being a homomorphism.
    """
    a_add, a_circ = A.rows
    b_add, b_circ = B.rows
    f = [-1] * A.n
    f[0] = 0
    used = {0} if injective else None
    queue = [0]
    pairs = list(zip(gens, images))
    for x in queue:
        y = f[x]
        for g, h in pairs:
            for xa, yb in ((a_add[x][g], b_add[y][h]), (a_circ[x][g], b_circ[y][h])):
                fx = f[xa]
                if fx == -1:
                    if injective:
                        if yb in used:
                            return None
                        used.add(yb)
                    f[xa] = yb
                    queue.append(xa)
                elif fx != yb:
                    return None
    if len(queue) != A.n:
        raise ValueError("generators do not cover the source")
    return f


def _preserves(A, B, f):
    f = np.asarray(f)
    return (np.array_equal(B.add[f[:, None], f[None, :]], f[A.add])
            and np.array_equal(B.circ[f[:, None], f[None, :]], f[A.circ]))


def hom_bound():
    return int(os.environ.get("BRACEKIT_HOM_BOUND", HOM_BOUND))


def iter_homs(A: SkewBrace, B: SkewBrace):
    """All homomorphisms A -> B as int lists, unbounded."""
    gens = generating_tuple(A)
    cands = []
    for g in gens:
        oa, oc = A.add_order[g], A.circ_order[g]
        cands.append([y for y in range(B.n)
                      if oa % B.add_order[y] == 0 and oc % B.circ_order[y] == 0])
    for imgs in product(*cands):
        f = extend_map(A, B, gens, imgs)
        if f is not None and _preserves(A, B, f):
            yield f


def all_homs(A: SkewBrace, B: SkewBrace, max_order=None) -> list:
    bound = hom_bound() if max_order is None else max_order
    if A.n > bound or B.n > bound:
        raise BoundExceeded(f"hom enumeration bound is {bound}, got orders {A.n}, {B.n}")
    homs = sorted(iter_homs(A, B))
    return [check_hom(A, B, f) for f in homs]


def _inv_signature(inv):
    return sorted(inv)


def iter_isomorphisms(A: SkewBrace, B: SkewBrace):
    if A.n != B.n:
        return
    inv_a, inv_b = element_invariants(A), element_invariants(B)
    if _inv_signature(inv_a) != _inv_signature(inv_b):
        return
    gens = _min_covering_tuples(A, inv_a, all_minimal=False)[0]
    cands = [[y for y in range(B.n) if inv_b[y] == inv_a[g]] for g in gens]
    for imgs in product(*cands):
        if len(set(imgs)) < len(imgs):
            continue
        f = extend_map(A, B, gens, imgs, injective=True)
        if f is not None and _preserves(A, B, f):
            yield f


def find_isomorphism(A: SkewBrace, B: SkewBrace):
    return next(iter_isomorphisms(A, B), None)


def are_isomorphic(A: SkewBrace, B: SkewBrace) -> bool:
    return find_isomorphism(A, B) is not None


def automorphisms(A: SkewBrace) -> list:
    """All automorphisms of A as permutation tuples (identity first)."""
    return sorted(tuple(f) for f in iter_isomorphisms(A, A))


def _relabel_tables(A, order):
    order = np.asarray(order, dtype=np.intp)
    new = np.empty(A.n, dtype=np.intp)
    new[order] = np.arange(A.n)
    sub = np.ix_(order, order)
    return new[A.add[sub]], new[A.circ[sub]]


def _encode(add, circ):
    return bytes([add.shape[0] % 256]) + add.astype(np.uint8).tobytes() + circ.astype(np.uint8).tobytes()


def _canonical(A: SkewBrace):
    inv = element_invariants(A)
    best = None
    for tup in _min_covering_tuples(A, inv):
        add, circ = _relabel_tables(A, _bfs_order(A, tup))
        code = _encode(add, circ)
        if best is None or code < best[0]:
            best = (code, add, circ)
    return best


def canonical_form(A: SkewBrace) -> CanonicalForm:
    """Byte string equal for two braces exactly when they are isomorphic.

    The minimum is taken over the relabellings induced by the covering tuples
    of least length and least invariant sequence, an isomorphism-invariant
    family, so the result does not depend on the input labelling.
    """
    return _canonical(A)[0]


def canonical_relabel(A: SkewBrace) -> SkewBrace:
    """A copy of A whose tables are its canonical form."""
    _, add, circ = _canonical(A)
    return validate(CayleyTablePair(add, circ), name=A.name)


def decode_canonical_form(code: CanonicalForm) -> SkewBrace:
    n = code[0] or 256
    arr = np.frombuffer(code[1:], dtype=np.uint8).astype(np.intp)
    return validate(CayleyTablePair(arr[: n * n].reshape(n, n), arr[n * n:].reshape(n, n)))
