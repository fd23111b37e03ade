"""Acceptance grid: every criterion at its pinned tolerance, one PASS/FAIL
line per criterion on stdout."""

import pytest

from hankelmb.acceptance import TOLERANCES, run_acceptance

CRITERIA = [
    "a1_reproduction",
    "a2_reproduction",
    "a3_a4_reproduction",
    "a5_reproduction",
    "a6_triple_agreement",
    "a7_reproduction",
    "willis_series",
    "master_theorem_forward",
    "path_independence",
    "appendix_a",
    "runtime_budget",
]


@pytest.fixture(scope="module")
def report():
    rep = run_acceptance()
    for res in rep.criteria:
        flag = "PASS" if res.passed else "FAIL"
        print(f"{flag} {res.name}: {res.detail} ({res.ms:.0f} ms)")
    return rep


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(report, name):
    res = next(r for r in report.criteria if r.name == name)
    assert res.passed, f"{name}: {res.detail}"


def test_all_criteria_present(report):
    assert [r.name for r in report.criteria] == CRITERIA


def test_overrides_reject_unknown_keys():
    with pytest.raises(KeyError):
        run_acceptance(overrides={"no_such_criterion": 1.0})


def test_tolerances_are_pinned():
    # the pinned values are the acceptance contract; changing them is an API change
    assert TOLERANCES["a1_reproduction"] == 1e-8
    assert TOLERANCES["a2_reproduction"] == 1e-7
    assert TOLERANCES["a3_a4_reproduction"] == 1e-7
    assert TOLERANCES["a5_reproduction"] == 1e-7
    assert TOLERANCES["a6_triple_agreement"] == 1e-6
    assert TOLERANCES["a7_reproduction"] == 1e-7
    assert TOLERANCES["master_theorem_forward"] == 1e-6
    assert TOLERANCES["appendix_a"] == 1e-10
    assert TOLERANCES["runtime_budget_s"] == 60.0
