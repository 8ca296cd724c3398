import pytest

from bracekit.commutators import Variety
from bracekit.errors import BoundExceeded
from bracekit.suites import SUITES, failed, run_suite, subject_id
from bracekit.constructions import b4


def test_axioms_order_four_all_pass():
    records = run_suite("axioms", 4)
    assert records and not failed(records)
    assert all(r.verdict == "PASS" for r in records)


def test_centrality_order_eight_all_pass():
    records = run_suite("centrality", 8)
    assert records and not failed(records)


def test_commutators_grp_order_twelve_all_pass():
    records = run_suite("commutators", 12, [Variety.GRP])
    assert not failed(records)
    assert any(r.check == "commutators.naive_star_set_is_ideal" for r in records)


@pytest.mark.parametrize("name", SUITES)
def test_every_suite_runs(name):
    assert not failed(run_suite(name, 4))


def test_deterministic_across_workers():
    one = [(r.subject, r.check, r.verdict, r.witness) for r in run_suite("paper", 4, n_workers=1)]
    two = [(r.subject, r.check, r.verdict, r.witness) for r in run_suite("paper", 4, n_workers=2)]
    assert one == two


def test_bound_and_unknown_suite(monkeypatch):
    with pytest.raises(ValueError):
        run_suite("nonsense", 2)
    monkeypatch.setenv("BRACEKIT_MAX_ORDER", "4")
    with pytest.raises(BoundExceeded):
        run_suite("axioms", 6)


def test_subject_id_is_label_free():
    assert subject_id(b4()).startswith("o4-") and len(subject_id(b4())) == 15
