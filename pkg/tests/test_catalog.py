from fractions import Fraction
from math import comb

import pytest

from pairedpaths import catalog
from pairedpaths.catalog import (
    FormulaError,
    build,
    build_by_recurrence,
    catalan,
    catalan_triangle,
    exactly_k,
    expectation,
    little_schroder,
    parity,
    schroder,
)
from pairedpaths.poly import X, MultiPoly
from pairedpaths.series import POLY, Series, div, sqrt_one_plus, x_derivative_at_one

x, x2, x3, x4, x5 = (X(v) for v in ("x", "x2", "x3", "x4", "x5"))


def test_printed_coefficients():
    assert build("F2", 6).coeffs[4] == x**3 + 5 * x**2 + 16 * x + 48
    assert build("F34", 6).coeffs[3] == 4 * x3 + 4 * x4 + 2 * x3 * x4 + 10
    assert build("FS4", 6).coeffs[4] == x**2 + 84 * x + 236
    assert build("F1", 6).coeffs[4] == 5 * x**3 + 9 * x**2 + 14 * x + 42
    F24 = build("F24", 6)
    assert F24.coeffs[3] == x2**2 + 3 * x2 + 5 * x4 + x2 * x4 + 10


@pytest.mark.parametrize("name", catalog.PATTERN_GFS)
def test_low_order_terms(name):
    F = build(name, 3)
    assert F.coeffs[0] == 1
    assert F.coeffs[1] == (3 if name == "FS4" else 2)


@pytest.mark.parametrize("name", catalog.GF_NAMES)
def test_two_constructions_agree(name):
    assert build(name, 10) == build_by_recurrence(name, 10)


def test_aliases():
    assert build("F4", 10) == build("F3", 10)
    assert build("F5", 10) == build("F2", 10)
    assert build("F6", 10) == build("F1", 10)


def test_schroder_numbers():
    D, d = schroder(12), little_schroder(12)
    assert D.coeffs[:6] == [1, 2, 6, 22, 90, 394]
    assert d.coeffs[:6] == [1, 1, 3, 11, 45, 197]
    assert all(2 * d.coeffs[n] == D.coeffs[n] for n in range(1, 12))


def test_catalan_triangle():
    Cxt = catalan_triangle(10)
    assert Cxt.specialize({"x": 1}) == catalan(10)
    assert Cxt.coeffs[0] == 1
    assert Cxt.coeffs[3].coeff("x") == 2


def test_exactly_k():
    C = catalan(13)
    assert exactly_k("F1", "x", 0, 12).coeffs == C.coeffs[1:13]
    assert exactly_k("F1", "x", 2, 10).coeffs[3:10] == [2, 9, 34, 123, 440, 1573, 5642]
    # marginal keeps the other pattern free, avoid forbids it
    avoid = exactly_k("F16", "x1", 1, 8, others="avoid")
    marginal = exactly_k("F16", "x1", 1, 8, others="marginal")
    assert marginal == exactly_k("F1", "x", 1, 8)
    assert avoid.coeffs[2:8] == [1, 4, 12, 32, 80, 192]
    with pytest.raises(ValueError):
        exactly_k("F1", "x", 1, 5, others="other")


def test_parity():
    even, odd = parity("F1", N=8)
    assert even.coeffs == [1, 2, 5, 16, 51, 180, 622, 2288]
    assert even + odd == build("F1", 8).specialize({"x": 1})
    e25, o25 = parity("F25", N=10)
    assert e25.coeffs[1:] == [2 * comb(2 * n - 2, n - 1) for n in range(1, 10)]
    assert o25.coeffs[2:] == [2 * comb(2 * n - 2, n - 2) for n in range(2, 10)]


def test_expectation():
    ex = expectation("F1", N=9)
    assert ex[7] == Fraction(5536, 3432)
    assert expectation("F2", N=5)[4] == Fraction(29, 70)
    num = catalog.derivative_numerators("F2345", N=8)
    assert num.coeffs[2:8] == [4, 24, 116, 520, 2248, 9520]
    dl = expectation("FS4", N=4)
    assert dl[3] == Fraction(11, 63)


def test_p2_total_formula():
    num = catalog.derivative_numerators("F2", N=11)
    assert all(num.coeffs[n] == 4 ** (n - 1) - comb(2 * n - 1, n - 1) for n in range(1, 11))


def test_p2_and_p3_totals_agree():
    assert x_derivative_at_one(build("F2", 16), "x") == x_derivative_at_one(build("F3", 16), "x")


def test_marginalization():
    F16 = build("F16", 12)
    F1 = build("F1", 12)
    assert F16.substitute({"x6": 1}).rename({"x1": "x"}) == F1
    assert F16.substitute({"x1": 1}).rename({"x6": "x"}) == F1
    F2345 = build("F2345", 12)
    assert F2345.substitute({"x3": 1, "x5": 1}) == build("F24", 12)
    assert F2345.substitute({"x3": 1, "x4": 1}) == build("F25", 12)
    assert F2345.substitute({"x2": 1, "x5": 1}) == build("F34", 12)


def test_diagonal_specializations():
    a = build("F25", 12).substitute({"x2": x, "x5": x})
    b = build("F34", 12).substitute({"x3": x, "x4": x})
    c = build("F24", 12).substitute({"x2": x, "x4": x})
    assert a == b == c


def test_north_touch_closed_form():
    # F24(x, x, t) = (1 - s - t - x + x^2 t) / (-x + (1 + x)^2 t) with s = sqrt(1 - 4t)
    N = 12
    t = Series.t(N + 2, POLY)
    s = sqrt_one_plus(Series([1, -4], N + 2, POLY))
    X_ = Series.constant(x, N + 2, POLY)
    F = div(1 - s - t - X_ + X_ * X_ * t, -X_ + (1 + X_) * (1 + X_) * t)
    assert F.truncate(N) == build("F24", N).substitute({"x2": x, "x4": x})


def test_constant_terms():
    C = catalan(10)
    want = [1] + [2 * c for c in C.coeffs[1:10]]
    assert build("F25", 10).specialize({"x2": 0, "x5": 0}).coeffs == want
    assert build("F34", 10).specialize({"x3": 0, "x4": 0}).coeffs == want


def test_substitution_that_breaks_a_denominator():
    with pytest.raises(FormulaError):
        build("F1", 5, subs={"x": 0})


def test_unknown_name():
    with pytest.raises(KeyError):
        build("F7", 5)


def test_info_table():
    info = catalog.GF_INFO["F2345"]
    assert info.patterns == ("P2", "P3", "P4", "P5") and info.variables == ("x2", "x3", "x4", "x5")
    assert catalog.GF_INFO["FS4"].kind == "delannoy"
    assert all(catalog.GF_INFO[n].arrangement for n in catalog.GF_NAMES)


def test_build_is_polynomial_ring():
    assert build("C", 4).ring == POLY
    assert isinstance(build("F3", 4).coeffs[2], MultiPoly)
