import pytest

import coalition_lab.costs as costs
from coalition_lab.suite import paper_suite


@pytest.fixture(scope="module")
def report():
    return paper_suite()


def test_suite_has_no_failures(report):
    assert report.failures == []
    assert report.count("pass") > 300


def test_errata_are_the_known_slips(report):
    errata = {(c.fixture, c.assertion) for c in report.checks if c.status == "erratum"}
    assert errata == {
        ("jump-cycle", "avg step 3 cost after"),
        ("jump-cycle", "avg step 6 cost before"),
        ("jump-cycle", "avg step 6 cost after"),
        ("pos-avg-max-jump", "{{1,1,1,6},{4,8,8}} is jump stable"),
        ("pos-cutoff-jump", "cost of {{0,1/8,17/16,9/4},{1/16,1/8,19/16,33/16}}"),
    }


def test_strict_threshold_mutation_only_breaks_cutoff_checks(monkeypatch):
    monkeypatch.setattr(costs, "within_threshold", lambda dist, lam: dist < lam)
    failures = paper_suite().failures
    assert failures
    assert all(c.model.startswith("cutoff") for c in failures)
