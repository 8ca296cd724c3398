"""Finite skew braces stored as a pair of Cayley tables over 0..n-1.

Element 0 is always the shared identity of + and ∘.  Elements are plain
ints; every table below is a read-only numpy array of indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
import hashlib

import numpy as np

from .errors import CompatibilityFail, IdentityMismatch, NotAGroup, NotHom, ValidationError

# tables are uint8 on disk / in canonical forms
MAX_TABLE_ORDER = 255


def _frozen(arr):
    arr = np.array(arr, dtype=np.intp)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class CayleyTablePair:
    add: np.ndarray
    circ: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "add", _frozen(self.add))
        object.__setattr__(self, "circ", _frozen(self.circ))

    @property
    def n(self):
        return self.add.shape[0]

    def __eq__(self, other):
        if not isinstance(other, CayleyTablePair):
            return NotImplemented
        return np.array_equal(self.add, other.add) and np.array_equal(self.circ, other.circ)


class SkewBrace:
    """A validated skew brace.  Build one with :func:`validate`."""

    def __init__(self, tables: CayleyTablePair, neg, cinv, name=None):
        self.tables = tables
        self.add = tables.add
        self.circ = tables.circ
        self.neg = _frozen(neg)
        self.cinv = _frozen(cinv)
        self.name = name

    @classmethod
    def from_tables(cls, add, circ, name=None):
        return validate(CayleyTablePair(add, circ), name=name)

    @property
    def n(self):
        return self.add.shape[0]

    def __len__(self):
        return self.n

    @property
    def elements(self):
        return range(self.n)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<SkewBrace{label} of order {self.n}>"

    def __eq__(self, other):
        if not isinstance(other, SkewBrace):
            return NotImplemented
        return self.tables == other.tables

    def __hash__(self):
        return hash((self.add.tobytes(), self.circ.tobytes()))

    def digest(self):
        """Short stable hex digest of the tables (not isomorphism invariant)."""
        h = hashlib.sha1()
        h.update(np.asarray(self.add, dtype=np.uint8).tobytes())
        h.update(np.asarray(self.circ, dtype=np.uint8).tobytes())
        return h.hexdigest()[:12]

    # -- derived tables ----------------------------------------------------

    @cached_property
    def star_table(self):
        # a*b = -a + a∘b - b
        t = self.add[self.add[self.neg[:, None], self.circ], self.neg[None, :]]
        return _frozen(t)

    @cached_property
    def lam(self):
        """lam[a, b] = λ_a(b) = -a + a∘b."""
        return _frozen(self.add[self.neg[:, None], self.circ])

    @cached_property
    def rho(self):
        """rho[a, b] = ρ_a(b) = a∘b - a."""
        return _frozen(self.add[self.circ, self.neg[:, None]])

    @cached_property
    def add_comm(self):
        """add_comm[a, b] = a + b - a - b."""
        ab = self.add
        t = ab[ab[ab, self.neg[:, None]], self.neg[None, :]]
        return _frozen(t)

    @cached_property
    def circ_comm(self):
        """circ_comm[a, b] = a∘b∘a'∘b'."""
        c = self.circ
        return _frozen(c[c[c, self.cinv[:, None]], self.cinv[None, :]])

    @cached_property
    def conj(self):
        """conj[c, x] = c + x - c."""
        return _frozen(self.add[self.add, self.neg[:, None]])

    @cached_property
    def distributor_tensor(self):
        """D[a, b, c] = (a+b)∘c - b∘c + c - a∘c, summed left to right."""
        add, circ, neg = self.add, self.circ, self.neg
        idx = np.arange(self.n)
        ab_c = circ[add[:, :, None], idx[None, None, :]]          # (a+b)∘c
        t = add[ab_c, neg[circ][None, :, :]]                      # - b∘c
        t = add[t, idx[None, None, :]]                            # + c
        t = add[t, neg[circ][:, None, :]]                         # - a∘c
        return _frozen(t)

    @cached_property
    def add_order(self):
        return _frozen(_element_orders(self.add))

    @cached_property
    def circ_order(self):
        return _frozen(_element_orders(self.circ))

    @cached_property
    def rows(self):
        """(add, circ) as nested Python lists, for scalar-heavy searches."""
        return self.add.tolist(), self.circ.tolist()

    def is_trivial(self):
        return np.array_equal(self.add, self.circ)


def _element_orders(table):
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.intp)
    for a in range(n):
        x, k = a, 1
        while x != 0:
            x = table[x, a]
            k += 1
        orders[a] = k
    return orders


def _check_group(op, T):
    n = T.shape[0]
    idx = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(T[e], idx) and np.array_equal(T[:, e], idx)]
    if not ids:
        raise NotAGroup(op, None, "no identity element")
    if ids[0] != 0:
        raise IdentityMismatch(f"identity of ({op}) is {ids[0]}, expected 0")
    for a in range(n):
        if len(set(T[a].tolist())) != n:
            raise NotAGroup(op, (a,), "row is not a permutation (missing inverse)")
        if len(set(T[:, a].tolist())) != n:
            raise NotAGroup(op, (a,), "column is not a permutation (missing inverse)")
    for a in range(n):
        lhs = T[T[a][:, None], idx[None, :]]   # (a·b)·c
        rhs = T[a][T]                          # a·(b·c)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            raise NotAGroup(op, (a, int(b), int(c)), "not associative")


def _inverse(T):
    # x with T[x, a] == 0
    return np.argmax(T == 0, axis=0)


def validate(t: CayleyTablePair, name=None) -> SkewBrace:
    """Check every skew brace axiom exhaustively and return the brace."""
    add, circ = t.add, t.circ
    n = add.shape[0] if add.ndim == 2 else 0
    if n == 0 or add.shape != (n, n) or circ.shape != (n, n):
        raise ValidationError("tables must be non-empty and square of equal size")
    if n > MAX_TABLE_ORDER:
        raise ValidationError(f"order {n} exceeds table bound {MAX_TABLE_ORDER}")
    if add.min() < 0 or add.max() >= n or circ.min() < 0 or circ.max() >= n:
        raise ValidationError("table entries out of range")
    _check_group("+", add)
    _check_group("∘", circ)
    neg = _inverse(add)
    for a in range(n):
        # a∘(b+c) vs a∘b - a + a∘c
        lhs = circ[a][add]
        rhs = add[add[circ[a][:, None], neg[a]], circ[a][None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            raise CompatibilityFail(a, int(b), int(c))
    return SkewBrace(t, neg, _inverse(circ), name=name)


# -- elementary operations -------------------------------------------------

def star(A: SkewBrace, a, b):
    return int(A.add[A.add[A.neg[a], A.circ[a, b]], A.neg[b]])


def lambda_act(A: SkewBrace, a, b):
    return int(A.add[A.neg[a], A.circ[a, b]])


def rho_act(A: SkewBrace, a, b):
    return int(A.add[A.circ[a, b], A.neg[a]])


def distributor(A: SkewBrace, a, b, c):
    add, circ, neg = A.add, A.circ, A.neg
    x = circ[add[a, b], c]
    x = add[x, neg[circ[b, c]]]
    x = add[x, c]
    x = add[x, neg[circ[a, c]]]
    return int(x)


# -- homomorphisms ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Hom:
    source: SkewBrace
    target: SkewBrace
    map: np.ndarray
    is_hom: bool
    is_surjective: bool

    def __call__(self, a):
        return int(self.map[a])

    def __repr__(self):
        return f"Hom({self.map.tolist()}, is_hom={self.is_hom}, surjective={self.is_surjective})"

    def image(self):
        return sorted(set(self.map.tolist()))

    def compose(self, other: "Hom") -> "Hom":
        """self ∘ other (apply ``other`` first)."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("maps are not composable")
        return check_hom(other.source, self.target, self.map[other.map])


def _first_hom_failure(A, B, f):
    if f[0] != 0:
        return (0,), "identity"
    for op, ta, tb in (("+", A.add, B.add), ("∘", A.circ, B.circ)):
        bad = np.argwhere(tb[f[:, None], f[None, :]] != f[ta])
        if bad.size:
            return tuple(int(x) for x in bad[0]), op
    return None


def check_hom(A: SkewBrace, B: SkewBrace, f) -> Hom:
    """Build a Hom with its flags computed (never raises on non-homs)."""
    f = _frozen(f)
    if f.shape != (A.n,) or (A.n and (f.min() < 0 or f.max() >= B.n)):
        raise ValueError("map must be a total table A -> B")
    ok = _first_hom_failure(A, B, f) is None
    return Hom(A, B, f, ok, len(set(f.tolist())) == B.n)


def is_homomorphism(A: SkewBrace, B: SkewBrace, f) -> Hom:
    """Return the Hom for ``f`` or raise NotHom at the first failing pair."""
    h = check_hom(A, B, f)
    if not h.is_hom:
        witness, op = _first_hom_failure(A, B, h.map)
        raise NotHom(witness, op)
    return h


def identity_hom(A: SkewBrace) -> Hom:
    return Hom(A, A, _frozen(np.arange(A.n)), True, True)
