"""Small named skew braces and table builders used throughout the test corpus."""

from itertools import permutations

import numpy as np

from .core import CayleyTablePair, SkewBrace, validate


def cyclic_table(n):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n


def permutation_group_table(perms):
    """Cayley table of a list of permutation tuples; perms[0] must be the identity.

    Composition is (p·q)(x) = p(q(x)).
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=np.intp)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[x] for x in q)]
    return table


def symmetric_group_elements(k):
    """Permutations of range(k) in lexicographic order (identity first)."""
    return list(permutations(range(k)))


def symmetric_group_table(k):
    return permutation_group_table(symmetric_group_elements(k))


def trivial_brace(table, name=None) -> SkewBrace:
    """The skew brace with + = ∘ = the given group law."""
    return validate(CayleyTablePair(table, table), name=name)


def trivial_cyclic(n) -> SkewBrace:
    return trivial_brace(cyclic_table(n), name=f"Tr(Z/{n})")


def trivial_s3() -> SkewBrace:
    return trivial_brace(symmetric_group_table(3), name="Tr(S3)")


def s3_index(cycle):
    """Index in :func:`trivial_s3` of a permutation given in 1-based cycle notation.

    >>> s3_index(()), s3_index((1, 2)), s3_index((1, 2, 3))
    (0, 2, 3)
    """
    img = list(range(3))
    if cycle:
        pts = [c - 1 for c in cycle]
        for i, p in enumerate(pts):
            img[p] = pts[(i + 1) % len(pts)]
    return symmetric_group_elements(3).index(tuple(img))


def b4() -> SkewBrace:
    """Z/4 with a∘b = a + 2ab + b, the radical ring 2Z/8Z."""
    idx = np.arange(4)
    add = (idx[:, None] + idx[None, :]) % 4
    circ = (idx[:, None] + 2 * idx[:, None] * idx[None, :] + idx[None, :]) % 4
    return validate(CayleyTablePair(add, circ), name="B4")


def direct_product(A: SkewBrace, B: SkewBrace) -> SkewBrace:
    """Componentwise product; the pair (a, b) gets label a*|B| + b."""
    m = B.n

    def prod(ta, tb):
        t = ta[:, None, :, None] * m + tb[None, :, None, :]
        return t.reshape(A.n * m, A.n * m)

    name = f"{A.name}x{B.name}" if A.name and B.name else None
    return validate(CayleyTablePair(prod(A.add, B.add), prod(A.circ, B.circ)), name=name)


def zero_brace() -> SkewBrace:
    return validate(CayleyTablePair([[0]], [[0]]), name="0")
