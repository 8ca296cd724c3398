"""Relative commutators of an ideal against the whole skew brace.

Each generator set below is taken literally; Grp, RadRng and Ab commutators
are additive closures, the BR commutator is an ideal closure.
"""

from __future__ import annotations

import enum

import numpy as np

from .core import SkewBrace
from .errors import NoMinimum, NotAnIdeal
from .subobjects import (
    ElementSet,
    _as_array,
    _check_ambient,
    all_ideals,
    coset_labels,
    ideal_closure,
    is_ideal,
    subgroup_mask,
)


class Variety(enum.Enum):
    GRP = "Grp"
    RADRNG = "RadRng"
    BR = "BR"
    AB = "Ab"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text):
        for v in cls:
            if v.value.lower() == str(text).strip().lower():
                return v
        raise ValueError(f"unknown variety {text!r}; expected one of Grp, RadRng, BR, Ab")


ALL_VARIETIES = tuple(Variety)


def _require_ideal(A, I):
    _check_ambient(A, I)
    if not is_ideal(A, I):
        raise NotAnIdeal(f"{sorted(_as_array(I).tolist())} is not an ideal")
    return _as_array(I)


def commutator_generators(A: SkewBrace, I, X: Variety) -> np.ndarray:
    """The literal generator set of [I, A]_X (I assumed to be an ideal)."""
    idx = _as_array(I)
    st = A.star_table
    if X is Variety.GRP:
        ba = np.unique(st[:, idx])
        # a*b, b*a and c + b*a - c
        parts = [st[idx, :], ba, A.conj[:, ba]]
    elif X is Variety.RADRNG:
        D = A.distributor_tensor
        parts = [D[idx, :, :], D[:, :, idx], D[:, idx, :], A.add_comm[idx, :]]
    elif X is Variety.BR:
        parts = [A.add_comm[idx, :]]
    elif X is Variety.AB:
        parts = [A.add_comm[idx, :], st[idx, :], A.circ_comm[idx, :]]
    else:
        raise ValueError(X)
    return np.unique(np.concatenate([np.ravel(p) for p in parts]))


def rel_commutator(A: SkewBrace, I, X: Variety) -> ElementSet:
    """[I, A]_X."""
    _require_ideal(A, I)
    gens = commutator_generators(A, I, X)
    if X is Variety.BR:
        return ideal_closure(A, gens)
    return ElementSet(A, subgroup_mask(A.add, gens))


def star_ideal(A: SkewBrace) -> ElementSet:
    """A*A, the additive subgroup generated by every a*b."""
    return ElementSet(A, subgroup_mask(A.add, np.unique(A.star_table)))


def derived_ideal(A: SkewBrace) -> ElementSet:
    """A', generated additively by every a*b and a+b-a-b."""
    gens = np.unique(np.concatenate([A.star_table.ravel(), A.add_comm.ravel()]))
    return ElementSet(A, subgroup_mask(A.add, gens))


def radicalator(A: SkewBrace) -> ElementSet:
    return rel_commutator(A, ElementSet.full(A), Variety.RADRNG)


def reflector_kernel(A: SkewBrace, X: Variety) -> ElementSet:
    """[A, A]_X: the kernel of the reflection of A into X."""
    if X is Variety.GRP:
        return star_ideal(A)
    if X is Variety.AB:
        return derived_ideal(A)
    return rel_commutator(A, ElementSet.full(A), X)


def naive_star_set(A: SkewBrace, I) -> ElementSet:
    """Additive closure of a*b and b*a for a in I, without conjugates.

    Not an ideal in general; only used to probe where that fails.
    """
    idx = _require_ideal(A, I)
    st = A.star_table
    gens = np.unique(np.concatenate([st[idx, :].ravel(), st[:, idx].ravel()]))
    return ElementSet(A, subgroup_mask(A.add, gens))


def _sum_map_is_hom(A, I_idx, rep):
    """Is (i, a) -> class(i + a) a skew brace map I x A -> A/J?  rep labels cosets of J."""
    add, circ = A.add, A.circ
    i1 = I_idx[:, None, None, None]
    i2 = I_idx[None, :, None, None]
    a1 = np.arange(A.n)[None, None, :, None]
    a2 = np.arange(A.n)[None, None, None, :]
    # (i1+i2) + (a1+a2)  vs  (i1+a1) + (i2+a2)
    lhs = add[add[i1, i2], add[a1, a2]]
    rhs = add[add[i1, a1], add[i2, a2]]
    if not np.array_equal(rep[lhs], rep[rhs]):
        return False
    lhs = add[circ[i1, i2], circ[a1, a2]]
    rhs = circ[add[i1, a1], add[i2, a2]]
    return bool(np.array_equal(rep[lhs], rep[rhs]))


def huq_commutator(A: SkewBrace, I) -> ElementSet:
    """Smallest ideal J making (i, a) -> i + a a homomorphism I x A -> A/J.

    Found by scanning the ideal lattice; independent of :func:`rel_commutator`.
    """
    idx = _require_ideal(A, I)
    qualifying = [J for J in all_ideals(A) if _sum_map_is_hom(A, idx, coset_labels(A, J))]
    if not qualifying:
        raise NoMinimum("no ideal makes the sum map a homomorphism")
    least = qualifying[0]
    for J in qualifying[1:]:
        if not least <= J:
            raise NoMinimum(f"qualifying ideals {least} and {J} are incomparable")
    return least
