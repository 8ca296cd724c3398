"""Quotient braces, the four reflectors and variety membership."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .commutators import Variety, reflector_kernel
from .core import CayleyTablePair, Hom, SkewBrace, validate
from .errors import NotAnIdeal, NotInVariety, WellDefinednessFail
from .subobjects import ElementSet, _check_ambient, coset_labels, is_ideal


@dataclass(frozen=True, eq=False)
class Quotient:
    source: SkewBrace
    ideal: ElementSet
    target: SkewBrace
    projection: Hom


def quotient(A: SkewBrace, I, name=None) -> Quotient:
    """A/I on coset labels; cosets are numbered by their minimal representative."""
    _check_ambient(A, I)
    if not isinstance(I, ElementSet):
        I = ElementSet(A, I)
    if not is_ideal(A, I):
        raise NotAnIdeal(f"{sorted(I.members)} is not an ideal")
    rep = coset_labels(A, I)
    reps = np.unique(rep)
    label = np.full(A.n, -1, dtype=np.intp)
    label[reps] = np.arange(len(reps))
    proj = label[rep]
    sub = np.ix_(reps, reps)
    qadd = proj[A.add[sub]]
    qcirc = proj[A.circ[sub]]
    for op, ta, tq in (("+", A.add, qadd), ("∘", A.circ, qcirc)):
        bad = np.argwhere(proj[ta] != tq[proj[:, None], proj[None, :]])
        if bad.size:
            raise WellDefinednessFail(f"({op}) not well defined on cosets at {tuple(bad[0])}")
    target = validate(CayleyTablePair(qadd, qcirc), name=name)
    proj.setflags(write=False)
    return Quotient(A, I, target, Hom(A, target, proj, True, True))


def reflect(A: SkewBrace, X: Variety) -> Quotient:
    return quotient(A, reflector_kernel(A, X))


def in_variety(A: SkewBrace, X: Variety) -> bool:
    """Exhaustive check of the defining identities of X."""
    abelian = np.array_equal(A.add, A.add.T)
    if X is Variety.GRP:
        return A.is_trivial()
    if X is Variety.AB:
        return A.is_trivial() and abelian
    if X is Variety.BR:
        return abelian
    if X is Variety.RADRNG:
        # (a+b)∘c = a∘c - c + b∘c together with a+b = b+a
        return abelian and not A.distributor_tensor.any()
    raise ValueError(X)


def factors_through(f: Hom, q: Quotient) -> bool:
    """Does f: A -> T kill the kernel of q (so f = g ∘ q for a unique g)?"""
    return bool((f.map[q.ideal.array] == 0).all())


def induced_map(f: Hom, q: Quotient) -> Hom:
    """The unique g with g ∘ q.projection = f; f must factor through q."""
    from .core import check_hom

    g = np.zeros(q.target.n, dtype=np.intp)
    g[q.projection.map] = f.map
    if not np.array_equal(g[q.projection.map], f.map):
        raise ValueError("map does not factor through the quotient")
    return check_hom(q.target, f.target, g)


def check_reflector_universality(A: SkewBrace, X: Variety, T: SkewBrace, max_order=None) -> bool:
    """Every homomorphism A -> T factors uniquely through the reflection of A into X."""
    from .morphisms import all_homs

    if not in_variety(T, X):
        raise NotInVariety(f"{T!r} is not in {X}")
    q = reflect(A, X)
    kwargs = {} if max_order is None else {"max_order": max_order}
    for f in all_homs(A, T, **kwargs):
        if not factors_through(f, q):
            return False
        if not induced_map(f, q).is_hom:
            return False
    return True
