"""Low-dimensional homology computed on finite instances.

``hopf_quotient`` evaluates the Hopf-formula subquotient on a finite
extension instead of a free presentation.  It agrees with the second homology
object only when the extension is weakly universal central, so the value is a
surrogate, not an invariant of the target.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import warnings

import numpy as np

from .commutators import Variety, reflector_kernel, rel_commutator
from .core import SkewBrace, check_hom
from .extensions import Extension, quotient_extension
from .quotients import quotient, reflect
from .subobjects import ElementSet, induced_subbrace


class HopfSurrogateWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SeriesEntry:
    index: int
    term: ElementSet


@dataclass
class PositionCheck:
    position: str
    exact: bool
    witness: object = None


@dataclass
class ExactnessReport:
    terms: list
    maps: list
    exact_at: list = field(default_factory=list)

    @property
    def exact(self):
        return all(p.exact for p in self.exact_at)

    def __str__(self):
        orders = " -> ".join(str(t) for t in self.terms)
        flags = ", ".join(f"{p.position}: {'exact' if p.exact else f'NOT exact ({p.witness})'}"
                          for p in self.exact_at)
        return f"{orders}  [{flags}]"


def h1(B: SkewBrace, X: Variety) -> SkewBrace:
    return reflect(B, X).target


def lower_central_series(A: SkewBrace, X: Variety, max_n: int) -> list:
    """A^0 = A, A^(n+1) = [A^n, A]_X, stopping once a term repeats or reaches 0."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    term = ElementSet.full(A)
    series = [SeriesEntry(0, term)]
    for n in range(1, max_n + 1):
        nxt = rel_commutator(A, term, X)
        series.append(SeriesEntry(n, nxt))
        if nxt == term or nxt.is_zero():
            break
        term = nxt
    return series


def series_step_extensions(A: SkewBrace, X: Variety, max_n: int):
    """Yield (n, A/A^(n+1) -> A/A^n) for consecutive series terms."""
    series = lower_central_series(A, X, max_n)
    for upper, lower in zip(series, series[1:]):
        q = quotient(A, lower.term)
        image = ElementSet(q.target, q.projection.map[upper.term.array])
        yield upper.index, quotient_extension(q.target, image)


def _subquotient(A, top: ElementSet, bottom: ElementSet):
    sub, members = induced_subbrace(A, top)
    relabel = {int(x): i for i, x in enumerate(members)}
    q = quotient(sub, ElementSet(sub, [relabel[x] for x in bottom]))
    return q, members


def hopf_quotient(e: Extension, X: Variety) -> SkewBrace:
    """(K ∩ [A,A]_X) / [K,A]_X for the extension's kernel K."""
    warnings.warn("hopf_quotient of a finite extension is the second homology only for a "
                  "weakly universal central extension", HopfSurrogateWarning, stacklevel=2)
    A, K = e.source, e.kernel
    top = K & reflector_kernel(A, X)
    bottom = rel_commutator(A, K, X)
    q, _ = _subquotient(A, top, bottom)
    return q.target


def five_term_tail(e: Extension, X: Variety) -> ExactnessReport:
    """K/[K,A]_X -> H1(A) -> H1(B) -> 0, with exactness checked at H1(A) and H1(B)."""
    A, B, f = e.source, e.target, e.hom.map
    qK, kmembers = _subquotient(A, e.kernel, rel_commutator(A, e.kernel, X))
    qA, qB = reflect(A, X), reflect(B, X)
    pK, pA, pB = qK.projection.map, qA.projection.map, qB.projection.map
    report = ExactnessReport(terms=[qK.target.n, qA.target.n, qB.target.n, 1], maps=[])

    m1 = np.full(qK.target.n, -1, dtype=np.intp)
    m2 = np.full(qA.target.n, -1, dtype=np.intp)
    for name, m, src_labels, values in (
        ("K/[K,A] -> H1(A)", m1, pK, pA[kmembers]),
        ("H1(A) -> H1(B)", m2, pA, pB[f]),
    ):
        for x, v in zip(src_labels, values):
            if m[x] == -1:
                m[x] = v
            elif m[x] != v:
                report.exact_at.append(PositionCheck(name, False, ("not well defined", int(x))))
                return report
    maps = [check_hom(qK.target, qA.target, m1), check_hom(qA.target, qB.target, m2)]
    report.maps = maps
    for h, name in zip(maps, ("K/[K,A] -> H1(A)", "H1(A) -> H1(B)")):
        if not h.is_hom:
            report.exact_at.append(PositionCheck(name, False, "not a homomorphism"))
            return report

    image = set(m1.tolist())
    ker = set(np.flatnonzero(m2 == 0).tolist())
    diff = sorted(image ^ ker)
    report.exact_at.append(PositionCheck("H1(A)", not diff, diff[0] if diff else None))
    missing = sorted(set(range(qB.target.n)) - set(m2.tolist()))
    report.exact_at.append(PositionCheck("H1(B)", not missing, missing[0] if missing else None))
    return report
