"""Subsets of a skew brace: subgroup and ideal closures, the ideal lattice, centers."""

from __future__ import annotations

import numpy as np

from .core import CayleyTablePair, SkewBrace, validate
from .errors import CrossBraceError


class ElementSet:
    """A set of element indices tied to one ambient skew brace."""

    __slots__ = ("ambient", "members")

    def __init__(self, ambient: SkewBrace, members):
        if isinstance(members, np.ndarray) and members.dtype == bool:
            members = np.flatnonzero(members)
        members = frozenset(int(m) for m in members)
        if members and (min(members) < 0 or max(members) >= ambient.n):
            raise ValueError(f"elements out of range for order {ambient.n}")
        self.ambient = ambient
        self.members = members

    @classmethod
    def full(cls, A):
        return cls(A, range(A.n))

    @classmethod
    def zero(cls, A):
        return cls(A, (0,))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, x):
        return x in self.members

    def __repr__(self):
        return f"ElementSet({sorted(self.members)})"

    @property
    def array(self):
        return np.array(sorted(self.members), dtype=np.intp)

    @property
    def mask(self):
        m = np.zeros(self.ambient.n, dtype=bool)
        m[list(self.members)] = True
        return m

    def sort_key(self):
        return (len(self.members), sorted(self.members))

    def is_zero(self):
        return self.members == {0}

    def is_full(self):
        return len(self.members) == self.ambient.n

    def _other(self, other):
        if isinstance(other, ElementSet):
            if other.ambient is not self.ambient:
                raise CrossBraceError("element sets belong to different skew braces")
            return other.members
        return frozenset(other)

    def __eq__(self, other):
        if isinstance(other, ElementSet):
            return other.ambient is self.ambient and other.members == self.members
        if isinstance(other, (set, frozenset)):
            return self.members == other
        return NotImplemented

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other):
        return self.members <= self._other(other)

    def __lt__(self, other):
        return self.members < self._other(other)

    def __ge__(self, other):
        return self.members >= self._other(other)

    def __and__(self, other):
        return ElementSet(self.ambient, self.members & self._other(other))

    def __or__(self, other):
        return ElementSet(self.ambient, self.members | self._other(other))


def _as_array(S):
    if isinstance(S, ElementSet):
        return S.array
    return np.array(sorted({int(x) for x in S}), dtype=np.intp)


def _check_ambient(A, S):
    if isinstance(S, ElementSet) and S.ambient is not A:
        raise CrossBraceError("element set belongs to a different skew brace")


def subgroup_mask(table, seeds):
    """Mask of the subgroup generated by ``seeds`` under the group law ``table``."""
    n = table.shape[0]
    gens = np.unique(np.asarray(seeds, dtype=np.intp))
    gens = gens[gens != 0]
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    frontier = np.array([0], dtype=np.intp)
    while frontier.size and gens.size:
        nxt = np.unique(table[np.ix_(frontier, gens)])
        nxt = nxt[~mask[nxt]]
        mask[nxt] = True
        frontier = nxt
    return mask


def additive_closure(A: SkewBrace, S) -> ElementSet:
    _check_ambient(A, S)
    return ElementSet(A, subgroup_mask(A.add, _as_array(S)))


def circle_closure(A: SkewBrace, S) -> ElementSet:
    _check_ambient(A, S)
    return ElementSet(A, subgroup_mask(A.circ, _as_array(S)))


def _closed(table, mask, idx):
    return bool(mask[table[np.ix_(idx, idx)]].all())


def is_additive_subgroup(A, S):
    m = S.mask if isinstance(S, ElementSet) else ElementSet(A, S).mask
    idx = np.flatnonzero(m)
    return bool(m[0]) and _closed(A.add, m, idx) and bool(m[A.neg[idx]].all())


def is_additive_normal(A, S):
    m = S.mask if isinstance(S, ElementSet) else ElementSet(A, S).mask
    idx = np.flatnonzero(m)
    return is_additive_subgroup(A, S) and bool(m[A.conj[:, idx]].all())


def is_circle_subgroup(A, S):
    m = S.mask if isinstance(S, ElementSet) else ElementSet(A, S).mask
    idx = np.flatnonzero(m)
    return bool(m[0]) and _closed(A.circ, m, idx) and bool(m[A.cinv[idx]].all())


def is_ideal(A: SkewBrace, S) -> bool:
    """Normal subgroup of A₊ absorbing a*x and x*a for x in S."""
    _check_ambient(A, S)
    m = S.mask if isinstance(S, ElementSet) else ElementSet(A, S).mask
    idx = np.flatnonzero(m)
    if not is_additive_normal(A, S):
        return False
    st = A.star_table
    return bool(m[st[:, idx]].all() and m[st[idx, :]].all())


def is_strong_left_ideal(A: SkewBrace, S) -> bool:
    _check_ambient(A, S)
    m = S.mask if isinstance(S, ElementSet) else ElementSet(A, S).mask
    idx = np.flatnonzero(m)
    return (is_additive_normal(A, S) and is_circle_subgroup(A, S)
            and bool(m[A.star_table[:, idx]].all()))


def is_subbrace(A: SkewBrace, S) -> bool:
    _check_ambient(A, S)
    return is_additive_subgroup(A, S) and is_circle_subgroup(A, S)


def ideal_closure(A: SkewBrace, S) -> ElementSet:
    """Smallest ideal containing S: additive closure, conjugates and star products to a fixed point."""
    _check_ambient(A, S)
    mask = subgroup_mask(A.add, _as_array(S))
    st = A.star_table
    while True:
        idx = np.flatnonzero(mask)
        new = np.concatenate([A.conj[:, idx].ravel(), st[:, idx].ravel(), st[idx, :].ravel()])
        if mask[new].all():
            return ElementSet(A, mask)
        mask = subgroup_mask(A.add, np.concatenate([idx, new]))


def all_ideals(A: SkewBrace) -> list:
    """The ideal lattice, as joins of principal ideals; sorted by size then members."""
    zero = frozenset({0})
    principal = {ideal_closure(A, [x]).members for x in range(A.n)}
    lattice = {zero} | principal
    frontier = set(principal)
    while frontier:
        found = set()
        for I in frontier:
            for J in principal:
                if J <= I:
                    continue
                K = ideal_closure(A, I | J).members
                if K not in lattice:
                    found.add(K)
        lattice |= found
        frontier = found
    out = [ElementSet(A, m) for m in lattice]
    out.sort(key=ElementSet.sort_key)
    return out


def additive_center(A: SkewBrace) -> ElementSet:
    return ElementSet(A, (A.add == A.add.T).all(axis=1))


def z_r(A: SkewBrace) -> ElementSet:
    """Additively central elements killing the right distributor in every slot."""
    D = A.distributor_tensor
    zero = D == 0
    slots = zero.all(axis=(1, 2)) & zero.all(axis=(0, 2)) & zero.all(axis=(0, 1))
    return ElementSet(A, slots & additive_center(A).mask)


def coset_labels(A: SkewBrace, I) -> np.ndarray:
    """rep[a] = minimal element of the coset a + I."""
    idx = _as_array(I)
    return A.add[:, idx].min(axis=1)


def induced_subbrace(A: SkewBrace, S, name=None):
    """The subbrace on S relabelled in increasing order; returns (brace, members)."""
    if not is_subbrace(A, S):
        raise ValueError("set is not a subbrace")
    members = _as_array(S)
    relabel = np.full(A.n, -1, dtype=np.intp)
    relabel[members] = np.arange(len(members))
    sub = np.ix_(members, members)
    B = validate(CayleyTablePair(relabel[A.add[sub]], relabel[A.circ[sub]]), name=name)
    return B, members
