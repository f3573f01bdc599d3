"""Generating functions for paired-pattern statistics, expanded as truncated series.

Each entry has two independent constructions:

* ``build`` expands a closed form (radicals in ``t``, rational in the
  marking variables) with exact series arithmetic;
* ``build_by_recurrence`` iterates the first-return decomposition
  (a fixed point in the series ring) without using any closed form
  beyond the Catalan / Schroeder series themselves.

Agreement of the two, and of both with brute-force enumeration, is what
the test-suite checks.

Single-pattern series (F1..F6, FS4, Cxt) are in the variable ``x``; the
multivariate ones use ``x<j>`` for pattern ``P<j>``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, Sequence

from .paths import DELANNOY, LATTICE, central_delannoy
from .poly import MultiPoly
from .series import POLY, QQ, Series, div, sqrt_one_plus, x_derivative_at_one


class FormulaError(ArithmeticError):
    """A closed form failed a division precondition: it is mistranscribed."""


@dataclass(frozen=True)
class GFInfo:
    name: str
    patterns: tuple[str, ...]
    variables: tuple[str, ...]
    kind: str
    arrangement: str
    doc: str


# -- primitive series ----------------------------------------------------


def _sqrt_poly1(coeffs: Sequence, order: int) -> Series:
    """sqrt of a polynomial in t with constant term 1, over QQ."""
    return sqrt_one_plus(Series(coeffs, order, QQ))


def catalan(N: int) -> Series:
    """C(t) = (1 - sqrt(1-4t)) / (2t)."""
    s = _sqrt_poly1([1, -4], N + 1)
    return (1 - s).divide_by_t(1) / 2


def schroder(N: int) -> Series:
    """Large Schroeder numbers, (1 - t - sqrt(1-6t+t^2)) / (2t)."""
    r = _sqrt_poly1([1, -6, 1], N + 1)
    t = Series.t(N + 1)
    return (1 - t - r).divide_by_t(1) / 2


def little_schroder(N: int) -> Series:
    """Little Schroeder numbers, (1 + t - sqrt(1-6t+t^2)) / (4t)."""
    r = _sqrt_poly1([1, -6, 1], N + 1)
    t = Series.t(N + 1)
    return (1 + t - r).divide_by_t(1) / 4


class _Ctx:
    """Common ingredients at a working order, with optional variable substitution."""

    def __init__(self, N: int, subs: Mapping[str, object] | None = None):
        self.N = N
        self.subs = dict(subs or {})
        self.one = Series.constant(1, N, POLY)
        self.t = Series.t(N, POLY)
        self.s = _sqrt_poly1([1, -4], N).to_poly()  # sqrt(1 - 4t)

    def x(self, name: str) -> Series:
        v = self.subs.get(name, MultiPoly.var(name))
        return Series.constant(MultiPoly.coerce(v), self.N, POLY)

    def xval(self, name: str) -> MultiPoly:
        return MultiPoly.coerce(self.subs.get(name, MultiPoly.var(name)))

    def catalan(self) -> Series:
        return catalan(self.N).to_poly()

    def sqrt_1_minus_4(self, name: str) -> Series:
        """sqrt(1 - 4 x t) expanded in the polynomial ring."""
        return sqrt_one_plus(Series([1, -4 * self.xval(name)], self.N, POLY))

    def cat_triangle(self, name: str) -> Series:
        """C(x, t) = 1 + (1 - sqrt(1-4t)) / ((sqrt(1-4t) - 1) x + 2)."""
        s, x = self.s, self.x(name)
        return 1 + (1 - s) / ((s - 1) * x + 2)


def _q(ctx: _Ctx, num: Series, den: Series) -> Series:
    try:
        return div(num, den)
    except ArithmeticError as exc:
        raise FormulaError(str(exc)) from exc


# -- closed forms --------------------------------------------------------
# Each takes a context at a working order a little above the target, since
# cancelling a common power of t in a quotient lowers the order.


def _closed_F1(c: _Ctx, v: str = "x") -> Series:
    # 2x / (x sqrt(1-4t) + sqrt(1-4xt) + x - 1); the denominator starts with
    # 2x, which divides every step of the coefficient recurrence.
    x = c.x(v)
    return _q(c, 2 * x, x * c.s + c.sqrt_1_minus_4(v) + x - 1)


def _closed_F2(c: _Ctx, v: str = "x") -> Series:
    s, t, x = c.s, c.t, c.x(v)
    num = -(s - 1) * (s * x - s - x + 3)
    den = 2 * (s * x * t - x * t - s * t + 5 * t + s - 1)
    return _q(c, num, den)


def _closed_F3(c: _Ctx, v: str = "x") -> Series:
    s, t, x = c.s, c.t, c.x(v)
    return _q(c, 2 * c.one, 2 * t * (x - 1) + (s - 1) * x + s + 1)


def _closed_F16(c: _Ctx) -> Series:
    x1, x6 = c.x("x1"), c.x("x6")
    den = (c.sqrt_1_minus_4("x1") - 1) * x6 + (c.sqrt_1_minus_4("x6") - 1) * x1 + 2 * x1 * x6
    return _q(c, 2 * x1 * x6, den)


def _closed_F25(c: _Ctx) -> Series:
    s, t = c.s, c.t
    x2, x5 = c.x("x2"), c.x("x5")
    first = 1 + _q(c, 1 - s, 2 - x5 * (1 - s))
    g_num = 2 * (1 - x5) * t + (x5 - 2) * (1 - s)
    g_den = 1 + s + x2 * (x5 - 1) * (1 - s) - x5 + s * x5 + 2 * (1 - x2 * x5) * t
    return first * (1 - _q(c, g_num, g_den))


def _closed_F34(c: _Ctx) -> Series:
    # The printed final form has the opposite sign on the fraction; this is
    # C + (1 - x3 + C x3) G with G = (1-C)(1 - x4 + C x4) / (x3 x4 (C-1)^2 - 1),
    # i.e. the printed solution for G substituted into F = (x3 C - x3 + 1) G + C.
    C = c.catalan()
    x3, x4 = c.x("x3"), c.x("x4")
    g = _q(c, (1 - C) * (1 - x4 + C * x4), (C - 1) * (C - 1) * x3 * x4 - 1)
    return C + (1 - x3 + C * x3) * g


def _closed_F24(c: _Ctx) -> Series:
    # The printed final fraction is garbled; use the printed solution for G
    # and F = C(t) (G + 1).
    C = c.catalan()
    K = c.cat_triangle("x2") - 1
    x4 = c.x("x4")
    g = -_q(c, K * (x4 * (C - 1) + 1), x4 * K * (C - 1) - 1)
    return C * (g + 1)


def _closed_F2345(c: _Ctx) -> Series:
    s, t = c.s, c.t
    x2, x3, x4, x5 = (c.x(v) for v in ("x2", "x3", "x4", "x5"))
    a = -1 + s + 2 * t
    P = (
        a * x3 * (-1 + x4)
        + x4
        - s * x4
        - 2 * t * x4
        + x2 * (-(-1 + s) * (-2 + x5) - 2 * t * (-1 + x5))
        + 2 * s * x5
        + 2 * t * x5
        - 2 * (-2 + s + x5)
    )
    Q = 2 + a * x3 * x4 + (-1 + s) * x5 + x2 * (-1 + s - a * x5)
    return _q(c, P, Q)


def _closed_FS4(c: _Ctx, v: str = "x") -> Series:
    t, x = c.t, c.x(v)
    r = _sqrt_poly1([1, -6, 1], c.N).to_poly()
    den = 3 + r - _q(c, 2 * (x - 1), t - 1) + t * (x - 1) - 3 * x + r * x
    return _q(c, 2 * c.one, den)


def _closed_Cxt(c: _Ctx, v: str = "x") -> Series:
    return c.cat_triangle(v)


# -- recurrences ---------------------------------------------------------


def _fixed_point(step: Callable[[Series], Series], start: Series, limit: int) -> Series:
    cur = start
    for _ in range(limit + 2):
        nxt = step(cur)
        if nxt == cur:
            return nxt
        cur = nxt
    raise FormulaError("fixed-point iteration did not stabilize")


def _solve_gh(
    a1: Series, b1: Series, a2: Series, b2: Series, N: int
) -> tuple[Series, Series]:
    """Iterate ``G = a1 H + b1``, ``H = a2 G + b2`` from zero.

    Both ``a1`` and ``a2`` have no constant term, so every round fixes at
    least one more coefficient.
    """
    zero = Series.constant(0, N, POLY)
    G, H = zero, zero
    for _ in range(N + 2):
        G2 = a1 * H + b1
        H2 = a2 * G2 + b2
        if G2 == G and H2 == H:
            return G2, H2
        G, H = G2, H2
    raise FormulaError("G/H iteration did not stabilize")


def _rec_catalan(N: int) -> Series:
    # C = 1 + t C^2
    t = Series.t(N)
    return _fixed_point(lambda C: 1 + t * C * C, Series.constant(1, N), N)


def _rec_cat_triangle(N: int, x: MultiPoly) -> Series:
    # A Dyck path is empty or a sequence of primes t C(t); every prime but
    # the last ends at an interior return, marked by x.
    C = _rec_catalan(N).to_poly()
    prime = Series.t(N, POLY) * C
    return _fixed_point(lambda K: prime + (prime * K).scale(x), Series.constant(0, N, POLY), N) + 1


def _rec_schroder(N: int) -> Series:
    # D = 1 + t D + t D^2
    t = Series.t(N)
    return _fixed_point(lambda D: 1 + t * D + t * D * D, Series.constant(1, N), N)


def _rec_little_schroder(N: int) -> Series:
    # (1 + t) s = 1 + 2 t s^2
    t = Series.t(N)
    inv = 1 / (1 + t)
    return _fixed_point(lambda s: inv * (1 + 2 * t * s * s), Series.constant(1, N), N)


def _var(name: str, N: int, subs: Mapping[str, object]) -> Series:
    return Series.constant(MultiPoly.coerce(subs.get(name, MultiPoly.var(name))), N, POLY)


def _rec_lattice(name: str, N: int, subs: Mapping[str, object]) -> Series:
    C = _rec_catalan(N).to_poly()
    t = Series.t(N, POLY)
    Cm = C - 1

    def tri(v: str) -> Series:
        return _rec_cat_triangle(N, MultiPoly.coerce(subs.get(v, MultiPoly.var(v)))) - 1

    if name in ("F1", "F6"):
        # F = (C - 1)/t + (C(xt) - 1)(C - 1) F
        x = MultiPoly.coerce(subs.get("x", MultiPoly.var("x")))
        A = _catalan_shift(N)
        B = (C.scale_t(x) - 1) * Cm
        return _fixed_point(lambda F: A + B * F, Series.constant(0, N, POLY), N)
    if name == "F16":
        x1 = MultiPoly.coerce(subs.get("x1", MultiPoly.var("x1")))
        x6 = MultiPoly.coerce(subs.get("x6", MultiPoly.var("x6")))
        geo = div(Series.constant(1, N, POLY), 1 - 2 * t)
        B = t * geo * (C.scale_t(x1) + C.scale_t(x6) - 2)
        return _fixed_point(lambda F: geo + B * F, Series.constant(0, N, POLY), N)
    if name in ("F2", "F5"):
        # G: first excursion below the diagonal, its returns marked; H: above
        K = tri("x")
        G, H = _solve_gh(K, K, Cm, Cm, N)
        return 1 + G + H
    if name in ("F3", "F4"):
        x = _var("x", N, subs)
        # H = (C-1)(x G + 1), G = (C-1)(H + 1)
        G, H = _solve_gh(Cm, Cm, Cm * x, Cm, N)
        return 1 + G + H
    if name == "F25":
        K2, K5 = tri("x2"), tri("x5")
        G, H = _solve_gh(K2, K2, K5, K5, N)
        return 1 + G + H
    if name == "F34":
        x3, x4 = _var("x3", N, subs), _var("x4", N, subs)
        G, H = _solve_gh(Cm * x4, Cm, Cm * x3, Cm, N)
        return 1 + G + H
    if name == "F24":
        K2 = tri("x2")
        x4 = _var("x4", N, subs)
        G, H = _solve_gh(K2 * x4, K2, Cm, Cm, N)
        return 1 + G + H
    if name == "F2345":
        K2, K5 = tri("x2"), tri("x5")
        x3, x4 = _var("x3", N, subs), _var("x4", N, subs)
        G, H = _solve_gh(K2 * x4, K2, K5 * x3, K5, N)
        return 1 + G + H
    raise KeyError(name)


def _catalan_shift(N: int) -> Series:
    """(C(t) - 1) / t, i.e. sum C_{n+1} t^n, at order N."""
    return (_rec_catalan(N + 1) - 1).divide_by_t(1).to_poly()


def _rec_FS4(N: int, subs: Mapping[str, object]) -> Series:
    t = Series.t(N, POLY)
    x = _var("x", N, subs)
    Dl = _rec_schroder(N).to_poly()
    Dt = _rec_little_schroder(N).to_poly()
    geo = div(Series.constant(1, N, POLY), 1 - t)
    # GS = (D - 1/(1-t)) (x HS + 1) + t/(1-t) (HS + 1);  HS = (Dt - 1)(GS + 1)
    a1 = (Dl - geo) * x + t * geo
    b1 = Dl - geo + t * geo
    G, H = _solve_gh(a1, b1, Dt - 1, Dt - 1, N)
    return 1 + G + H


# -- registry ------------------------------------------------------------

_LATTICE_INFO = {
    "F1": (("P1",), ("x",), "closed 2x/(x sqrt(1-4t)+sqrt(1-4xt)+x-1), exact division by 2x"),
    "F2": (("P2",), ("x",), "printed closed form; common factor t cancelled"),
    "F3": (("P3",), ("x",), "printed closed form 2/(...)"),
    "F4": (("P4",), ("x",), "alias of F3 (rotation symmetry)"),
    "F5": (("P5",), ("x",), "alias of F2 (reflection symmetry)"),
    "F6": (("P6",), ("x",), "alias of F1 (reflection symmetry)"),
    "F16": (("P1", "P6"), ("x1", "x6"), "printed closed form, exact division by 2 x1 x6"),
    "F25": (("P2", "P5"), ("x2", "x5"), "printed product form"),
    "F34": (("P3", "P4"), ("x3", "x4"), "printed G substituted into F = (x3 C - x3 + 1) G + C"),
    "F24": (("P2", "P4"), ("x2", "x4"), "printed G substituted into F = C (G + 1)"),
    "F2345": (("P2", "P3", "P4", "P5"), ("x2", "x3", "x4", "x5"), "printed P/Q"),
}

GF_INFO: dict[str, GFInfo] = {
    name: GFInfo(name, pats, vars_, LATTICE, arr, f"paths counted by {'/'.join(pats)} matches")
    for name, (pats, vars_, arr) in _LATTICE_INFO.items()
}
GF_INFO["FS4"] = GFInfo(
    "FS4", ("P4",), ("x",), DELANNOY, "printed closed form over sqrt(1-6t+t^2)",
    "Delannoy paths counted by P4 matches",
)
GF_INFO["C"] = GFInfo("C", (), (), LATTICE, "(1-sqrt(1-4t))/(2t)", "Dyck paths")
GF_INFO["Cxt"] = GFInfo(
    "Cxt", (), ("x",), LATTICE, "1 + (1-s)/((s-1)x+2)", "Dyck paths by interior returns"
)
GF_INFO["D"] = GFInfo("D", (), (), DELANNOY, "(1-t-r)/(2t)", "Schroeder paths")
GF_INFO["Dlittle"] = GFInfo(
    "Dlittle", (), (), DELANNOY, "(1+t-r)/(4t)", "Schroeder paths without D on the diagonal"
)

GF_NAMES = tuple(GF_INFO)
PATTERN_GFS = ("F1", "F2", "F3", "F4", "F5", "F6", "F16", "F25", "F34", "F24", "F2345", "FS4")

_CLOSED = {
    "F1": _closed_F1,
    "F6": _closed_F1,
    "F2": _closed_F2,
    "F5": _closed_F2,
    "F3": _closed_F3,
    "F4": _closed_F3,
    "F16": _closed_F16,
    "F25": _closed_F25,
    "F34": _closed_F34,
    "F24": _closed_F24,
    "F2345": _closed_F2345,
    "FS4": _closed_FS4,
    "Cxt": _closed_Cxt,
}

# working-order margin absorbing cancelled powers of t
_MARGIN = 3


def _check_name(name: str) -> GFInfo:
    try:
        return GF_INFO[name]
    except KeyError:
        raise KeyError(f"unknown generating function {name!r}; choose from {', '.join(GF_NAMES)}") from None


def build(name: str, N: int, subs: Mapping[str, object] | None = None) -> Series:
    """Expand the closed form of ``name`` to order ``N`` (over ``POLY``).

    ``subs`` substitutes marking variables before expansion (for example
    all four variables of F2345 by one ``x``); it must not make a leading
    denominator coefficient vanish.
    """
    _check_name(name)
    if N < 1:
        raise ValueError("order must be at least 1")
    if name == "C":
        return catalan(N).to_poly()
    if name == "D":
        return schroder(N).to_poly()
    if name == "Dlittle":
        return little_schroder(N).to_poly()
    ctx = _Ctx(N + _MARGIN, subs)
    out = _CLOSED[name](ctx)
    if out.order < N:
        raise FormulaError(f"{name}: order {out.order} after cancellation, wanted {N}")
    return out.truncate(N)


def build_by_recurrence(name: str, N: int, subs: Mapping[str, object] | None = None) -> Series:
    """Solve the first-return decomposition of ``name`` by fixed-point iteration."""
    info = _check_name(name)
    subs = dict(subs or {})
    if name == "C":
        return _rec_catalan(N).to_poly()
    if name == "D":
        return _rec_schroder(N).to_poly()
    if name == "Dlittle":
        return _rec_little_schroder(N).to_poly()
    if name == "Cxt":
        return _rec_cat_triangle(N, MultiPoly.coerce(subs.get("x", MultiPoly.var("x"))))
    if name == "FS4":
        return _rec_FS4(N, subs)
    if info.kind == LATTICE:
        return _rec_lattice(name, N, subs)
    raise KeyError(name)


def catalan_triangle(N: int) -> Series:
    return build("Cxt", N)


# -- extraction ----------------------------------------------------------


def _others(name: str, var: str, fill: int) -> dict[str, int]:
    return {v: fill for v in GF_INFO[name].variables if v != var}


def exactly_k(
    name: str, var: str, k: int, N: int, others: str = "avoid", series: Series | None = None
) -> Series:
    """Series whose t^n coefficient counts paths with exactly ``k`` matches marked by ``var``.

    ``others="avoid"`` sets the remaining marking variables to 0 (no matches
    of those patterns), ``"marginal"`` sets them to 1 (unrestricted).
    """
    if others not in ("avoid", "marginal"):
        raise ValueError("others must be 'avoid' or 'marginal'")
    F = series if series is not None else build(name, N)
    sub = _others(name, var, 0 if others == "avoid" else 1)
    mono = {var: k} if k else {}
    return Series._raw([c.substitute(sub).coeff(mono) for c in F.coeffs[:N]], min(N, F.order), QQ)


def slice_coeff(name: str, monomial: Mapping[str, int], N: int, series: Series | None = None) -> Series:
    """t-series of the coefficient of ``monomial``, all other variables set to 0."""
    F = series if series is not None else build(name, N)
    sub = {v: 0 for v in GF_INFO[name].variables if v not in monomial}
    return Series._raw([c.substitute(sub).coeff(dict(monomial)) for c in F.coeffs[:N]], min(N, F.order), QQ)


def parity(
    name: str, flip: Sequence[str] | None = None, N: int = 16, series: Series | None = None
) -> tuple[Series, Series]:
    """(even, odd) parts with respect to the total number of matches marked by ``flip``."""
    info = _check_name(name)
    flip = list(info.variables if flip is None else flip)
    F = series if series is not None else build(name, N)
    ones = {v: 1 for v in info.variables}
    plus = F.specialize(ones)
    minus = F.specialize({**ones, **{v: -1 for v in flip}})
    return (plus + minus) / 2, (plus - minus) / 2


def path_counts(name: str, N: int) -> list[int]:
    kind = _check_name(name).kind
    if kind == DELANNOY:
        return [central_delannoy(n) for n in range(N)]
    return [comb(2 * n, n) for n in range(N)]


def derivative_numerators(
    name: str, vars_: Sequence[str] | None = None, N: int = 16, series: Series | None = None
) -> Series:
    """Total number of marked matches over all paths of each size."""
    info = _check_name(name)
    F = series if series is not None else build(name, N)
    return x_derivative_at_one(F, list(info.variables if vars_ is None else vars_))


def expectation(
    name: str, vars_: Sequence[str] | None = None, N: int = 16, series: Series | None = None
) -> list[Fraction]:
    """Mean number of marked matches over paths of size n, for n < N."""
    num = derivative_numerators(name, vars_, N, series)
    counts = path_counts(name, num.order)
    return [Fraction(num.coeffs[n]) / counts[n] for n in range(num.order)]
