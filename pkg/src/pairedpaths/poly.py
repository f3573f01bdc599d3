"""Sparse polynomials with exact rational coefficients in the marking variables.

The variables are fixed: ``x`` (single-pattern generating functions) and
``x1`` .. ``x6`` (one per length-4 pattern). A polynomial is a dict from
exponent 7-tuples to nonzero coefficients. Integral coefficients are kept
as ``int`` and the rest as ``Fraction``; both are exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

VARS = ("x", "x1", "x2", "x3", "x4", "x5", "x6")
VAR_INDEX = {v: i for i, v in enumerate(VARS)}
NVARS = len(VARS)
ZERO_EXP = (0,) * NVARS

Scalar = Union[int, Fraction]


class PolyDivisionError(ArithmeticError):
    pass


class UnknownVariableError(KeyError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _var_index(name: str) -> int:
    try:
        return VAR_INDEX[name]
    except KeyError:
        raise UnknownVariableError(name) from None


class MultiPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        self.terms = {}
        self._hash = None
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[e] = _norm(c)

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls._raw({ZERO_EXP: _norm(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        e = [0] * NVARS
        e[_var_index(name)] = power
        return cls._raw({tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], c: Scalar = 1) -> "MultiPoly":
        e = [0] * NVARS
        for name, k in exps.items():
            e[_var_index(name)] = k
        return cls({tuple(e): c})

    @classmethod
    def coerce(cls, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Rational)):
            return cls.const(Fraction(other) if not isinstance(other, int) else other)
        return NotImplemented

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ZERO_EXP in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get(ZERO_EXP, 0)

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(VARS[i])
        return used

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = _var_index(name)
        return max(e[i] for e in self.terms)

    def coeff(self, monomial: str | Mapping[str, int] | tuple = "1") -> Scalar:
        """Coefficient of a monomial given as ``"x2*x3^2*x4"``, a dict, or a raw tuple."""
        if isinstance(monomial, str):
            monomial = parse_monomial(monomial)
        if isinstance(monomial, Mapping):
            e = [0] * NVARS
            for name, k in monomial.items():
                e[_var_index(name)] = k
            monomial = tuple(e)
        return self.terms.get(monomial, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- ring operations -------------------------------------------------

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "MultiPoly":
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly._raw({})
        if len(b) == 1 and ZERO_EXP in b:
            c = b[ZERO_EXP]
            return MultiPoly._raw({e: _norm(v * c) for e, v in a.items()})
        if len(a) == 1 and ZERO_EXP in a:
            c = a[ZERO_EXP]
            return MultiPoly._raw({e: _norm(v * c) for e, v in b.items()})
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "MultiPoly":
        if not c:
            return MultiPoly._raw({})
        return MultiPoly._raw({e: _norm(v * c) for e, v in self.terms.items()})

    def exact_div(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        """Quotient of an exact division; raises if ``other`` does not divide ``self``.

        Uses the division algorithm in lexicographic order, which for a single
        divisor leaves remainder zero exactly when the division is exact.
        """
        other = MultiPoly.coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            inv = Fraction(1) / Fraction(other.terms[ZERO_EXP])
            return self.scale(inv)
        lead = max(other.terms)
        lc = Fraction(other.terms[lead])
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            m = max(rem)
            if any(i < j for i, j in zip(m, lead)):
                raise PolyDivisionError(f"{other} does not divide {self}")
            q = Fraction(rem[m]) / lc
            qe = tuple(i - j for i, j in zip(m, lead))
            quot[qe] = _norm(q)
            for e, c in other.terms.items():
                k = tuple(i + j for i, j in zip(qe, e))
                v = rem.get(k, 0) - q * c
                if v:
                    rem[k] = _norm(v)
                else:
                    rem.pop(k, None)
        return MultiPoly._raw(quot)

    # -- calculus and evaluation -----------------------------------------

    def derivative(self, name: str) -> "MultiPoly":
        i = _var_index(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1 :]
                out[e2] = _norm(c * k)
        return MultiPoly._raw(out)

    def substitute(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Replace variables by scalars or polynomials; others are left alone."""
        if not mapping:
            return self
        idx = {_var_index(v): MultiPoly.coerce(val) for v, val in mapping.items()}
        numeric = {i: p.constant_term() for i, p in idx.items() if p.is_constant()}
        out = MultiPoly._raw({})
        acc: dict = {}
        for e, c in self.terms.items():
            factor = c
            rest = list(e)
            poly_part = None
            for i, k in enumerate(e):
                if k and i in idx:
                    rest[i] = 0
                    if i in numeric:
                        factor = factor * numeric[i] ** k
                    else:
                        pk = idx[i] ** k
                        poly_part = pk if poly_part is None else poly_part * pk
            if not factor:
                continue
            key = tuple(rest)
            if poly_part is None:
                acc[key] = acc.get(key, 0) + factor
            else:
                out = out + MultiPoly._raw({key: _norm(factor)}) * poly_part
        if acc:
            out = out + MultiPoly({e: c for e, c in acc.items()})
        return out

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Scalar:
        """Full evaluation; every variable present must be assigned."""
        missing = self.variables() - set(assignment)
        if missing:
            raise UnknownVariableError(f"unassigned variables: {sorted(missing)}")
        p = self.substitute(assignment)
        return p.constant_term()

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return self.substitute({a: MultiPoly.var(b) for a, b in mapping.items()})

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-k for k in e])):
            c = self.terms[e]
            mono = "*".join(
                VARS[i] if k == 1 else f"{VARS[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def to_json(self) -> list:
        """``[[exponent-dict, num, den], ...]`` sorted by exponent tuple."""
        out = []
        for e in sorted(self.terms):
            c = Fraction(self.terms[e])
            exps = {VARS[i]: k for i, k in enumerate(e) if k}
            out.append([exps, c.numerator, c.denominator])
        return out

    @classmethod
    def from_json(cls, data: list) -> "MultiPoly":
        p = MultiPoly()
        for exps, num, den in data:
            p = p + MultiPoly.monomial(exps, Fraction(num, den))
        return p


_MONO_RE = re.compile(r"^\s*([a-z]\w*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str) -> dict[str, int]:
    """``"x2*x3^2*x4"`` -> ``{"x2": 1, "x3": 2, "x4": 1}``; ``"1"`` is the empty monomial."""
    text = text.strip()
    if text in ("", "1"):
        return {}
    out: dict[str, int] = {}
    for factor in text.split("*"):
        m = _MONO_RE.match(factor)
        if not m:
            raise ValueError(f"bad monomial factor {factor!r}")
        name, k = m.group(1), int(m.group(2) or 1)
        _var_index(name)
        out[name] = out.get(name, 0) + k
    return out


def X(name: str = "x") -> MultiPoly:
    return MultiPoly.var(name)


ONE = MultiPoly.const(1)
ZERO = MultiPoly.const(0)
