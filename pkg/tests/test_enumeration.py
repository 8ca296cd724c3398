import os

import numpy as np
import pytest

from bracekit.constructions import b4, cyclic_table, trivial_cyclic, zero_brace
from bracekit.enumeration import (
    all_skew_braces,
    backtrack_skew_braces_on,
    corpus,
    iter_skew_braces_on,
    skew_braces_on,
)
from bracekit.errors import BoundExceeded
from bracekit.groups import groups_of_order
from bracekit.morphisms import (
    all_homs,
    are_isomorphic,
    automorphisms,
    canonical_form,
    canonical_relabel,
    decode_canonical_form,
)
from oracles import brute_homs


@pytest.mark.parametrize("n", range(1, 7))
def test_group_counts_match_oracle(n, frozen):
    assert len(groups_of_order(n)) == frozen["group_counts"][str(n)]


@pytest.mark.parametrize("n", range(1, 7))
def test_skew_brace_counts_match_oracle(n, frozen):
    assert len(all_skew_braces(n)) == frozen["skew_brace_counts"][str(n)]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_cyclic_prime(p, frozen):
    assert len(skew_braces_on(cyclic_table(p))) == frozen["skew_braces_on_cyclic_prime"][str(p)] == 1


def test_z4_includes_b4_and_trivial():
    found = skew_braces_on(cyclic_table(4))
    assert any(are_isomorphic(B, b4()) for B in found)
    assert any(are_isomorphic(B, trivial_cyclic(4)) for B in found)


@pytest.mark.parametrize("n", range(1, 7))
def test_holomorph_matches_backtracking(n):
    for G in groups_of_order(n):
        a = [canonical_form(B) for B in skew_braces_on(G)]
        b = [canonical_form(B) for B in backtrack_skew_braces_on(G)]
        assert a == b


def test_bounds(monkeypatch):
    with pytest.raises(BoundExceeded):
        all_skew_braces(25)
    with pytest.raises(BoundExceeded):
        groups_of_order(30)
    monkeypatch.setenv("BRACEKIT_MAX_ORDER", "5")
    with pytest.raises(BoundExceeded):
        all_skew_braces(6)
    with pytest.raises(BoundExceeded):
        backtrack_skew_braces_on(cyclic_table(8))


def test_known_group_counts():
    # numbers of groups of orders 1..12, 16 and 24
    expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5]
    assert [len(groups_of_order(n)) for n in range(1, 13)] == expected
    assert len(groups_of_order(16)) == 14
    assert len(groups_of_order(24)) == 15


def test_known_skew_brace_counts():
    # published classification counts for orders 1..12
    expected = [1, 1, 1, 4, 1, 6, 1, 47, 4, 6, 1, 38]
    assert [len(all_skew_braces(n)) for n in range(1, 13)] == expected


def test_corpus_structure():
    for n in range(1, 9):
        braces = all_skew_braces(n)
        trivial = [B for B in braces if B.is_trivial()]
        assert len(trivial) == len(groups_of_order(n))
        codes = [canonical_form(B) for B in braces]
        assert codes == sorted(codes) and len(set(codes)) == len(codes)


@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_form_iff_isomorphic(n):
    braces = all_skew_braces(n)
    rng = np.random.default_rng(n)
    raw = list(braces)
    # random relabellings of each class must land on the same form and be isomorphic
    for A in braces:
        p = np.concatenate([[0], 1 + rng.permutation(A.n - 1)]).astype(np.intp)
        inv = np.argsort(p)
        from bracekit.core import CayleyTablePair, validate

        B = validate(CayleyTablePair(p[A.add[np.ix_(inv, inv)]], p[A.circ[np.ix_(inv, inv)]]))
        raw.append(B)
        assert canonical_form(B) == canonical_form(A)
    for A in raw:
        for B in raw:
            assert (canonical_form(A) == canonical_form(B)) == are_isomorphic(A, B)


def test_canonical_roundtrip(B4):
    code = canonical_form(B4)
    assert decode_canonical_form(code) == canonical_relabel(B4)
    assert canonical_form(decode_canonical_form(code)) == code


def test_isomorphism_examples(B4, Z4):
    assert are_isomorphic(B4, B4)
    assert not are_isomorphic(B4, Z4)
    klein = trivial_cyclic(2)
    from bracekit.constructions import direct_product

    assert not are_isomorphic(Z4, direct_product(klein, klein))


def _as_lists(A):
    return A.add.tolist(), A.circ.tolist()


def test_homs_examples(B4, S3, Z2, Z4, frozen):
    for A in (B4, S3):
        assert len(all_homs(A, zero_brace())) == 1
    got = [h.map.tolist() for h in all_homs(S3, Z2)]
    assert got == sorted(frozen["homs"]["S3->Z2"]) and len(got) == 2
    got = [h.map.tolist() for h in all_homs(B4, Z4)]
    assert got == sorted(frozen["homs"]["B4->Z4"]) and len(got) == 2
    assert all(h.map[2] == 0 for h in all_homs(B4, Z4))
    assert [h.map.tolist() for h in all_homs(S3, trivial_cyclic(6))] == sorted(frozen["homs"]["S3->Z6"])


def test_homs_against_brute_force():
    small = corpus(4)
    for A in small:
        for B in small:
            got = [h.map.tolist() for h in all_homs(A, B)]
            assert got == sorted(brute_homs(_as_lists(A), _as_lists(B)))


def test_hom_bound(monkeypatch):
    A = all_skew_braces(12)[0]
    monkeypatch.setenv("BRACEKIT_HOM_BOUND", "8")
    with pytest.raises(BoundExceeded):
        all_homs(A, trivial_cyclic(2))


def test_automorphisms_of_s3(S3):
    assert len(automorphisms(S3)) == 6


def test_reduced_search_covers_every_class():
    for G in groups_of_order(8):
        full = {canonical_form(B) for B in iter_skew_braces_on(G, reduce=False)}
        reduced = {canonical_form(B) for B in iter_skew_braces_on(G, reduce=True)}
        assert full == reduced


@pytest.mark.skipif(not os.environ.get("BRACEKIT_LONG"), reason="set BRACEKIT_LONG=1 for orders 16-24")
def test_known_skew_brace_counts_large():
    assert len(all_skew_braces(18)) == 49
    assert len(all_skew_braces(20)) == 43
    assert len(all_skew_braces(24)) == 855
    assert len(all_skew_braces(16)) == 1605


def test_canonical_form_under_transpositions():
    # regression: covering tuples sharing an invariant sequence are not contiguous in search order
    from bracekit.core import CayleyTablePair, validate

    for A in all_skew_braces(8):
        code = canonical_form(A)
        for i in range(1, 8):
            for j in range(i + 1, 8):
                p = np.arange(8)
                p[[i, j]] = p[[j, i]]
                B = validate(CayleyTablePair(p[A.add[np.ix_(p, p)]], p[A.circ[np.ix_(p, p)]]))
                assert canonical_form(B) == code
