import pytest

from hypeuler.verify import (
    check_algebra,
    check_basis_roundtrip,
    check_constant_term,
    check_specialization,
    run_battery,
)


def test_battery_all_pass_small_range():
    results = run_battery(2, 3, 5, double_sum_depth=6, totient_limit=100)
    assert [r.passed for r in results] == [True] * 9
    names = [r.name for r in results]
    assert names == [
        "specialization",
        "closed-forms",
        "bini-oracle",
        "double-sum-identity",
        "low-degree-tables",
        "constant-term",
        "totient-identities",
        "schur-integrality",
        "algebra",
    ]


def test_battery_roundtrip_appended():
    results = run_battery(
        2, 2, 4, double_sum_depth=4, totient_limit=50, roundtrip=True
    )
    assert results[-1].name == "basis-roundtrip" and results[-1].passed


def test_battery_validates_parameters():
    with pytest.raises(ValueError):
        run_battery(1, 3, 4)
    with pytest.raises(ValueError):
        run_battery(3, 2, 4)
    with pytest.raises(ValueError):
        run_battery(2, 3, -1)


def test_individual_checks_report_ranges():
    res = check_specialization(2, 2, 4)
    assert res.passed and "g=2..2" in res.detail
    res = check_constant_term(2, 5)
    assert res.passed
    res = check_basis_roundtrip(2, 2, 5)
    assert res.passed
    res = check_algebra(samples=20)
    assert res.passed
