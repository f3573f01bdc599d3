"""Truncated formal power series in ``t`` with exact coefficients.

Coefficients live in one of two rings: ``QQ`` (exact rationals, stored as
``int`` or ``Fraction``) or ``POLY`` (``MultiPoly`` in the marking
variables). A series of order ``N`` knows its coefficients of ``t^0`` ..
``t^(N-1)``; arithmetic is exact modulo ``t^N`` and the order of a result
is the smaller of the operand orders.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

from .poly import MultiPoly, PolyDivisionError, _norm, parse_monomial

QQ = "QQ"
POLY = "POLY"


class RingMismatchError(TypeError):
    pass


class TruncationError(IndexError):
    pass


class SeriesDivisionError(ArithmeticError):
    pass


def _zero(ring: str):
    return 0 if ring == QQ else MultiPoly()


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Rational)) and not isinstance(v, bool)


class Series:
    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs: Iterable, order: int, ring: str = QQ):
        if order < 0:
            raise ValueError("order must be nonnegative")
        if ring not in (QQ, POLY):
            raise ValueError(f"unknown ring {ring!r}")
        cs = list(coeffs)[:order]
        z = _zero(ring)
        if ring == POLY:
            cs = [MultiPoly.coerce(c) for c in cs]
        else:
            for c in cs:
                if isinstance(c, MultiPoly):
                    raise RingMismatchError("polynomial coefficient in a QQ series")
            cs = [_norm(Fraction(c)) if not isinstance(c, int) else c for c in cs]
        cs.extend([z] * (order - len(cs)))
        self.coeffs = cs
        self.order = order
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: list, order: int, ring: str) -> "Series":
        s = cls.__new__(cls)
        s.coeffs = coeffs
        s.order = order
        s.ring = ring
        return s

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c, order: int, ring: str | None = None) -> "Series":
        if ring is None:
            ring = POLY if isinstance(c, MultiPoly) else QQ
        return cls([c], order, ring)

    @classmethod
    def t(cls, order: int, ring: str = QQ) -> "Series":
        return cls([0, 1], order, ring)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int, ring: str = QQ) -> "Series":
        return cls((f(n) for n in range(order)), order, ring)

    # -- access ----------------------------------------------------------

    def __getitem__(self, n: int):
        return self.coeff(n)

    def coeff(self, n: int):
        if n < 0:
            raise TruncationError("negative exponent")
        if n >= self.order:
            raise TruncationError(f"coefficient t^{n} unknown at order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or ``order`` if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order

    def truncate(self, order: int) -> "Series":
        order = min(order, self.order)
        return Series._raw(self.coeffs[:order], order, self.ring)

    def to_poly(self) -> "Series":
        if self.ring == POLY:
            return self
        return Series._raw([MultiPoly.const(c) for c in self.coeffs], self.order, POLY)

    def to_list(self) -> list:
        return list(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- ring operations -------------------------------------------------

    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine {self.ring} and {other.ring} series")
            return other
        if isinstance(other, MultiPoly):
            if self.ring != POLY:
                if not other.is_constant():
                    raise RingMismatchError("polynomial scalar with a QQ series")
                other = other.constant_term()
            return Series.constant(other, self.order, self.ring)
        if _is_scalar(other):
            return Series.constant(other, self.order, self.ring)
        return NotImplemented

    def __neg__(self) -> "Series":
        return Series._raw([-c for c in self.coeffs], self.order, self.ring)

    def __pos__(self) -> "Series":
        return self

    def __add__(self, other) -> "Series":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        return Series._raw(
            [a + b for a, b in zip(self.coeffs[:order], other.coeffs[:order])], order, self.ring
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        return Series._raw(
            [a - b for a, b in zip(self.coeffs[:order], other.coeffs[:order])], order, self.ring
        )

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if _is_scalar(other) or isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        a = self.coeffs
        b = other.coeffs
        za = [i for i in range(order) if a[i]]
        zb = [j for j in range(order) if b[j]]
        out = [_zero(self.ring) for _ in range(order)]
        for i in za:
            ai = a[i]
            for j in zb:
                if i + j >= order:
                    break
                out[i + j] = out[i + j] + ai * b[j]
        return Series._raw(out, order, self.ring)

    __rmul__ = __mul__

    def scale(self, c) -> "Series":
        if isinstance(c, MultiPoly):
            if self.ring != POLY:
                if not c.is_constant():
                    raise RingMismatchError("polynomial scalar with a QQ series")
                c = c.constant_term()
        elif not _is_scalar(c):
            raise TypeError(f"cannot scale by {type(c).__name__}")
        if self.ring == QQ:
            return Series._raw([_norm(v * c) for v in self.coeffs], self.order, QQ)
        return Series._raw([v * c for v in self.coeffs], self.order, POLY)

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return Series.constant(1, self.order, self.ring) / (self ** (-k))
        result = Series.constant(1, self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> "Series":
        if _is_scalar(other):
            return self.scale(Fraction(1) / Fraction(other))
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other) -> "Series":
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return div(lifted, self)

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            if other.ring != self.ring:
                return False
            order = min(self.order, other.order)
            return self.coeffs[:order] == other.coeffs[:order]
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- shifts and substitutions ---------------------------------------

    def shift(self, k: int) -> "Series":
        """Multiply by ``t^k`` keeping the order."""
        z = _zero(self.ring)
        return Series._raw(([z] * k + self.coeffs)[: self.order], self.order, self.ring)

    def divide_by_t(self, k: int) -> "Series":
        """Exact division by ``t^k``; the order drops by ``k``."""
        if k > self.order:
            raise SeriesDivisionError(f"order {self.order} too small to divide by t^{k}")
        if any(self.coeffs[:k]):
            raise SeriesDivisionError(f"valuation below {k}, cannot divide by t^{k}")
        return Series._raw(self.coeffs[k:], self.order - k, self.ring)

    def scale_t(self, factor) -> "Series":
        """Substitute ``t -> factor * t`` (e.g. ``C(t) -> C(x t)``)."""
        if isinstance(factor, MultiPoly) and self.ring == QQ:
            return self.to_poly().scale_t(factor)
        out = []
        power = MultiPoly.const(1) if self.ring == POLY else 1
        for c in self.coeffs:
            out.append(c * power if self.ring == POLY else _norm(c * power))
            power = power * factor
        return Series._raw(out, self.order, self.ring)

    def map(self, f: Callable, ring: str | None = None) -> "Series":
        ring = ring or self.ring
        return Series(map(f, self.coeffs), self.order, ring)

    def specialize(self, assignment: Mapping[str, object]) -> "Series":
        """Evaluate every coefficient; all variables present must be assigned."""
        if self.ring == QQ:
            return self
        return Series._raw([c.evaluate(assignment) for c in self.coeffs], self.order, QQ)

    def substitute(self, mapping: Mapping[str, object]) -> "Series":
        """Partial substitution of marking variables, staying in ``POLY``."""
        if self.ring == QQ:
            return self
        return Series._raw([c.substitute(mapping) for c in self.coeffs], self.order, POLY)

    def rename(self, mapping: Mapping[str, str]) -> "Series":
        if self.ring == QQ:
            return self
        return Series._raw([c.rename(mapping) for c in self.coeffs], self.order, POLY)

    def variables(self) -> set[str]:
        if self.ring == QQ:
            return set()
        out: set[str] = set()
        for c in self.coeffs:
            out |= c.variables()
        return out

    def derivative(self, var: str) -> "Series":
        """Formal partial derivative in a marking variable, coefficient-wise."""
        if self.ring == QQ:
            return Series.constant(0, self.order, QQ)
        return Series._raw([c.derivative(var) for c in self.coeffs], self.order, POLY)

    # -- display and serialization --------------------------------------

    def __repr__(self) -> str:
        return f"Series({self}, order={self.order}, ring={self.ring})"

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            if self.ring == POLY and not c.is_constant():
                cs = f"({c})"
            else:
                cs = str(c.constant_term() if self.ring == POLY else c)
            if n == 0:
                parts.append(cs)
            elif n == 1:
                parts.append(f"{cs}*t")
            else:
                parts.append(f"{cs}*t^{n}")
        parts.append(f"O(t^{self.order})")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def to_json(self) -> list:
        """One entry per power of ``t``: a list of ``[exponent-dict, num, den]`` triples."""
        out = []
        for c in self.coeffs:
            if self.ring == POLY:
                out.append(c.to_json())
            else:
                f = Fraction(c)
                out.append([[{}, f.numerator, f.denominator]] if f else [])
        return out

    @classmethod
    def from_json(cls, data: list, ring: str = POLY) -> "Series":
        coeffs = [MultiPoly.from_json(entry) for entry in data]
        s = cls(coeffs, len(coeffs), POLY)
        if ring == QQ:
            return s.specialize({})
        return s


# -- module-level operations ---------------------------------------------


def _check(a: Series, b: Series) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot combine {a.ring} and {b.ring} series")


def add(a: Series, b: Series) -> Series:
    _check(a, b)
    return a + b


def sub(a: Series, b: Series) -> Series:
    _check(a, b)
    return a - b


def mul(a: Series, b: Series) -> Series:
    _check(a, b)
    return a * b


def scalar_mul(c, a: Series) -> Series:
    return a.scale(c)


def _exact_quotient(num, den, ring: str):
    if ring == QQ:
        return _norm(Fraction(num) / den)
    try:
        return num.exact_div(den)
    except PolyDivisionError as exc:
        raise SeriesDivisionError(f"inexact coefficient division by {den}") from exc


def div(a: Series, b: Series) -> Series:
    """Quotient ``a / b`` modulo the truncation.

    Any power ``t^v`` dividing ``b`` must also divide ``a``; it is cancelled
    first and the order drops by ``v``. The leading coefficient left over
    must then divide every coefficient recurrence step exactly: a nonzero
    rational always does, a polynomial only when the true quotient has
    polynomial coefficients.
    """
    _check(a, b)
    v = b.valuation()
    if v >= b.order:
        raise SeriesDivisionError("division by a series that vanishes to its order")
    if v:
        if a.valuation() < v:
            raise SeriesDivisionError(f"numerator valuation below denominator valuation {v}")
        a = a.divide_by_t(v)
        b = b.divide_by_t(v)
    order = min(a.order, b.order)
    ring = a.ring
    bc = b.coeffs
    b0 = bc[0]
    if ring == POLY and b0.is_constant():
        inv = Fraction(1) / Fraction(b0.constant_term())
        quot = lambda num: num.scale(inv)  # noqa: E731
    elif ring == QQ:
        inv = Fraction(1) / Fraction(b0)
        quot = lambda num: _norm(num * inv)  # noqa: E731
    else:
        quot = lambda num: _exact_quotient(num, b0, ring)  # noqa: E731
    nz = [k for k in range(1, order) if bc[k]]
    out = []
    for n in range(order):
        acc = a.coeffs[n]
        for k in nz:
            if k > n:
                break
            acc = acc - bc[k] * out[n - k]
        out.append(quot(acc))
    return Series._raw(out, order, ring)


def sqrt_one_plus(a: Series) -> Series:
    """Square root with constant term 1, by Newton iteration with doubling precision."""
    c0 = a.coeffs[0] if a.order else 0
    if c0 != 1:
        raise SeriesDivisionError("square root needs constant term exactly 1")
    N = a.order
    y = Series.constant(1, N, a.ring).truncate(1)
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        yp = Series._raw(y.coeffs + [_zero(a.ring)] * (prec - y.order), prec, a.ring)
        y = (yp + div(a.truncate(prec), yp)) / 2
    return Series._raw(y.coeffs, N, a.ring) if N else Series([], 0, a.ring)


def coeff(a: Series, n: int):
    return a.coeff(n)


def poly_coeff(p, monomial: str | Mapping[str, int] = "1"):
    """Coefficient of a monomial in a polynomial (or a rational, read as a constant)."""
    if isinstance(p, MultiPoly):
        return p.coeff(monomial)
    mono = parse_monomial(monomial) if isinstance(monomial, str) else monomial
    return p if not mono else 0


def specialize(a: Series, assignment: Mapping[str, object]) -> Series:
    return a.specialize(assignment)


def x_derivative_at_one(a: Series, var: str | Sequence[str]) -> Series:
    """``sum_v d/dv`` applied coefficient-wise, then every variable set to 1."""
    vars_ = [var] if isinstance(var, str) else list(var)
    if a.ring == QQ:
        return Series.constant(0, a.order, QQ)
    ones = {v: 1 for v in a.variables()}
    out = []
    for c in a.coeffs:
        total = MultiPoly()
        for v in vars_:
            total = total + c.derivative(v)
        out.append(total.evaluate({**ones, **{v: 1 for v in total.variables()}}))
    return Series._raw(out, a.order, QQ)


def series_from_ints(values: Sequence[int], order: int | None = None) -> Series:
    return Series(values, len(values) if order is None else order, QQ)


def sqrt_1_minus_4t(order: int) -> Series:
    return sqrt_one_plus(Series([1, -4], order, QQ))
