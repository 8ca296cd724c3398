"""Extensions (surjective homomorphisms), kernels, pullbacks and centrality."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .commutators import Variety, rel_commutator
from .core import CayleyTablePair, Hom, SkewBrace, check_hom, validate
from .errors import NotHom, OracleDisagreement, TargetMismatch
from .quotients import quotient
from .subobjects import ElementSet, is_ideal, z_r


@dataclass(frozen=True, eq=False)
class Extension:
    hom: Hom
    kernel: ElementSet

    @property
    def source(self):
        return self.hom.source

    @property
    def target(self):
        return self.hom.target


def kernel(f: Hom) -> ElementSet:
    if not f.is_hom:
        raise NotHom(None, "+/∘")
    K = ElementSet(f.source, np.flatnonzero(f.map == 0))
    assert is_ideal(f.source, K)
    return K


def extension(f: Hom) -> Extension:
    if not f.is_surjective:
        raise ValueError("an extension must be surjective")
    return Extension(f, kernel(f))


def quotient_extension(A: SkewBrace, I) -> Extension:
    """The projection A -> A/I as an extension with kernel I."""
    q = quotient(A, I)
    return Extension(q.projection, q.ideal)


def image_set(f: Hom, S) -> ElementSet:
    return ElementSet(f.target, f.map[np.asarray(list(S), dtype=np.intp)])


def pullback(f: Hom, g: Hom):
    """A ×_B C with its two projections.  Pairs are labelled in lexicographic order."""
    if f.target is not g.target and f.target != g.target:
        raise TargetMismatch("maps have different codomains")
    pairs = [(a, c) for a in range(f.source.n) for c in range(g.source.n) if f.map[a] == g.map[c]]
    index = {p: i for i, p in enumerate(pairs)}
    first = np.array([p[0] for p in pairs], dtype=np.intp)
    second = np.array([p[1] for p in pairs], dtype=np.intp)
    m = len(pairs)
    # lexicographic pair -> label lookup as a dense matrix
    lookup = np.full((f.source.n, g.source.n), -1, dtype=np.intp)
    lookup[first, second] = np.arange(m)

    def op(ta, tc):
        return lookup[ta[np.ix_(first, first)], tc[np.ix_(second, second)]]

    add, circ = op(f.source.add, g.source.add), op(f.source.circ, g.source.circ)
    assert (add >= 0).all() and (circ >= 0).all() and index[(0, 0)] == 0
    P = validate(CayleyTablePair(add, circ))
    s = check_hom(P, f.source, first)
    t = check_hom(P, g.source, second)
    return P, s, t


def is_central_algebraic(e: Extension, X: Variety) -> bool:
    """[Ker f, A]_X = 0, cross-checked against Ker f ⊆ Z_R(A) for radical rings."""
    A = e.source
    verdict = rel_commutator(A, e.kernel, X).is_zero()
    if X is Variety.RADRNG:
        in_zr = e.kernel <= z_r(A)
        if in_zr != verdict:
            raise OracleDisagreement(
                f"kernel {sorted(e.kernel.members)}: Z_R test says {in_zr}, commutator test says {verdict}")
    return verdict


def is_central_categorical(e: Extension, X: Variety) -> bool:
    """The two pullback projections agree on the reflector kernel of A ×_B A."""
    P, s, t = pullback(e.hom, e.hom)
    R = rel_commutator(P, ElementSet.full(P), X).array
    return bool(np.array_equal(s.map[R], t.map[R]))
