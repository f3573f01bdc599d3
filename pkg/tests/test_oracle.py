from math import comb

import pytest

from pairedpaths import catalog, oracle
from pairedpaths.geometry import dyck_area, east_below_subdiagonal, is_dyck
from pairedpaths.paths import DELANNOY, central_delannoy
from pairedpaths.poly import X
from pairedpaths.series import Series

x2, x5 = X("x2"), X("x5")


def test_small_tables():
    t = oracle.joint_distribution(2, ["P1"])
    assert dict(t.counts) == {(0,): 5, (1,): 1}
    assert dict(oracle.joint_distribution(1, ["P2", "P5"]).counts) == {(0, 0): 2}
    p = oracle.joint_distribution(4, ["P2", "P5"]).to_poly(["x2", "x5"])
    assert p == x2**3 + 5 * x2**2 + 14 * x2 + x5**3 + 5 * x5**2 + 14 * x5 + 2 * x2 * x5 + 28


def test_row_sums_and_support():
    for n in range(8):
        t = oracle.joint_distribution(n)
        assert t.total() == comb(2 * n, n)
        if n:
            assert all(sum(v) == n - 1 for v in t.counts)
    for n in range(6):
        assert oracle.joint_distribution(n, ["P4"], DELANNOY).total() == central_delannoy(n)


def test_marginal():
    t = oracle.joint_distribution(3, ["P1", "P6"])
    assert t.marginal("P1") == {0: 14, 1: 4, 2: 2}


def test_parallel_matches_serial():
    a = oracle.joint_distribution(7, jobs=1)
    b = oracle.joint_distribution(7, jobs=3)
    assert a.counts == b.counts
    c = oracle.joint_distribution(2, ["P4"], DELANNOY, jobs=4)
    assert c.total() == central_delannoy(2)


def test_caps():
    with pytest.raises(oracle.CapExceededError):
        oracle.joint_distribution(11)
    with pytest.raises(oracle.CapExceededError):
        oracle.joint_distribution(9, kind=DELANNOY)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PP_CAP_LATTICE", "3")
    with pytest.raises(oracle.CapExceededError):
        oracle.joint_distribution(4)
    assert oracle.joint_distribution(4, force=True).total() == 70


@pytest.mark.parametrize("name", ["F1", "F25", "FS4", "C", "Cxt", "D", "Dlittle"])
def test_verify_passes(name):
    k = 5 if catalog.GF_INFO[name].kind == DELANNOY else 6
    rep = oracle.verify(name, k)
    assert rep.passed, rep.to_json()


def test_verify_reports_first_difference():
    F = catalog.build("F1", 7)
    bad = Series._raw(list(F.coeffs), F.order, F.ring)
    bad.coeffs[4] = bad.coeffs[4] + X("x") ** 2
    rep = oracle.verify("F1", 6, series=bad)
    assert not rep.passed
    (row,) = rep.failures()
    assert row.n == 4 and row.first_diff_monomial == "x^2"
    assert row.to_json()["status"] == "fail"


def test_total_statistic():
    assert oracle.total_statistic(3, east_below_subdiagonal) == 8
    assert oracle.total_statistic(3, dyck_area, where=is_dyck) == 8
    for n in range(1, 10):
        assert oracle.total_statistic(n, east_below_subdiagonal) == ((n + 1) * comb(2 * n, n) - 4**n) // 2
