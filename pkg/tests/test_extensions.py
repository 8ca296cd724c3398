import pytest

from bracekit.commutators import ALL_VARIETIES, Variety
from bracekit.constructions import s3_index
from bracekit.core import identity_hom, is_homomorphism
from bracekit.enumeration import corpus
from bracekit.errors import TargetMismatch
from bracekit.extensions import (
    extension,
    is_central_algebraic,
    is_central_categorical,
    kernel,
    pullback,
    quotient_extension,
)
from bracekit.subobjects import all_ideals

A3 = {0, s3_index((1, 2, 3)), s3_index((1, 3, 2))}


def _sign(S3, Z2):
    return is_homomorphism(S3, Z2, [0 if x in A3 else 1 for x in range(6)])


def test_kernels(B4, S3, Z2):
    assert kernel(identity_hom(B4)) == {0}
    assert kernel(is_homomorphism(B4, Z2, [a % 2 for a in range(4)])) == {0, 2}
    assert kernel(_sign(S3, Z2)) == A3


def test_pullbacks(B4, S3, Z2):
    f = is_homomorphism(B4, Z2, [a % 2 for a in range(4)])
    P, s, t = pullback(f, f)
    assert P.n == 8 and s.is_hom and t.is_hom
    P, s, t = pullback(_sign(S3, Z2), _sign(S3, Z2))
    assert P.n == 18
    with pytest.raises(TargetMismatch):
        pullback(f, identity_hom(B4))


@pytest.mark.parametrize("X", ALL_VARIETIES)
def test_trivial_kernels_central(B4, S3, X):
    for A in (B4, S3):
        e = extension(identity_hom(A))
        assert is_central_algebraic(e, X) and is_central_categorical(e, X)


def test_centrality_examples(B4, S3, Z2):
    e = extension(is_homomorphism(B4, Z2, [a % 2 for a in range(4)]))
    assert is_central_algebraic(e, Variety.AB)
    assert is_central_categorical(e, Variety.GRP)
    s = extension(_sign(S3, Z2))
    assert not is_central_algebraic(s, Variety.AB)
    assert not is_central_categorical(s, Variety.BR)


def test_equivalence_on_small_corpus():
    for A in corpus(6):
        for I in all_ideals(A):
            e = quotient_extension(A, I)
            for X in ALL_VARIETIES:
                assert is_central_algebraic(e, X) == is_central_categorical(e, X)
