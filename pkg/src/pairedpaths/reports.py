"""Named sequences, printed reference values, b-files, asymptotics and verification runs.

A sequence spec is a short string naming a catalog entry and how to read
an integer sequence off it:

    coeff:F34:x3*x4          coefficient of x3*x4, other variables 0
    exactly:F1:x=2           exactly two marked matches (others avoided)
    exactly:F24:x2=1:marginal
    at:F2:x=0                specialize the listed variables, the rest to 1
    even:F3  odd:F2345       parity split over all (or listed) variables
    total:F2345              total number of marked matches
    total:F2345:x2,x5

Named aliases (``exactly1-P1``, ``even-touch``, ...) expand to such specs.
"""
from __future__ import annotations

import json
import math
import os
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Callable

from . import catalog, oracle
from .bijections import MAPS, check_bijection, joint_symmetry_defect
from .geometry import (
    bounce_minus,
    bounce_plus,
    cross_h,
    cross_v,
    crossings,
    east_below_subdiagonal,
    north_above_superdiagonal,
    north_touches,
)
from .paths import enumerate_paths
from .patterns import profile_tuple
from .poly import parse_monomial
from .series import Series


class SequenceSpecError(ValueError):
    pass


@dataclass
class SequenceRecord:
    name: str
    offset: int
    terms: list[int]
    provenance: str
    oeis: str | None = None
    note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class NamedSequence:
    spec: str
    oeis: str | None = None
    doc: str = ""


NAMED: dict[str, NamedSequence] = {
    "catalan": NamedSequence("at:C", "A000108", "Dyck paths"),
    "schroder": NamedSequence("at:D", "A006318", "large Schroeder numbers"),
    "little-schroder": NamedSequence("at:Dlittle", "A001003", "little Schroeder numbers"),
    "exactly1-P1": NamedSequence("exactly:F1:x=1", "A002057", "exactly one east step below y=x-1"),
    "exactly2-P1": NamedSequence("exactly:F1:x=2", "A120989", "exactly two east steps below y=x-1"),
    "even-P1": NamedSequence("even:F1"),
    "total-P1": NamedSequence("total:F1", "A029760", "total P1 matches = total Dyck area"),
    "avoid-P2": NamedSequence("at:F2:x=0", None, "paths never bouncing right"),
    "exactly1-P2": NamedSequence("exactly:F2:x=1"),
    "total-P2": NamedSequence("total:F2", "A008549", "total right bounces"),
    "exactly1-P3": NamedSequence("exactly:F3:x=1", "A003517"),
    "exactly2-P3": NamedSequence("exactly:F3:x=2", "A003519"),
    "total-P3": NamedSequence("total:F3", "A008549", "total horizontal crossings"),
    "even-P3": NamedSequence("even:F3", "A005317"),
    "odd-P3": NamedSequence("odd:F3", "A108958"),
    "slice-x1-F16": NamedSequence("coeff:F16:x1", "A001787"),
    "slice-x1x6-F16": NamedSequence("coeff:F16:x1*x6", "A001815"),
    "slice-x2x5-F25": NamedSequence("coeff:F25:x2*x5"),
    "even-bounce": NamedSequence("even:F25", "A028329"),
    "odd-bounce": NamedSequence("odd:F25", "A162551"),
    "slice-x3x4-F34": NamedSequence("coeff:F34:x3*x4", "A118920", "column 2 of A118920"),
    "slice-x2-F24": NamedSequence("coeff:F24:x2", "A000245"),
    "slice-x4-F24": NamedSequence("coeff:F24:x4", "A070857"),
    "slice-x2x4-F24": NamedSequence("coeff:F24:x2*x4"),
    "slice-x2x3^2x4-F2345": NamedSequence("coeff:F2345:x2*x3^2*x4", "A000344", "twice A000344"),
    "total-touch": NamedSequence("total:F2345", None, "total diagonal touches"),
    "even-touch": NamedSequence("even:F2345", None, "paths touching the diagonal an even number of times"),
    "avoid-P4-delannoy": NamedSequence("at:FS4:x=0", None, "Delannoy paths without vertical crossings"),
    "delannoy": NamedSequence("at:FS4:x=1", "A001850", "central Delannoy numbers"),
}


def _parse_assign(text: str) -> dict[str, Fraction]:
    out = {}
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "=" not in tok:
            raise SequenceSpecError(f"expected var=value, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k.strip()] = Fraction(v.strip())
    return out


def _int_terms(s: Series) -> list[int]:
    out = []
    for c in s.coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            raise SequenceSpecError("sequence has non-integral terms")
        out.append(c.numerator)
    return out


def sequence_series(spec: str, N: int) -> Series:
    """Evaluate a sequence spec to a QQ series of order ``N``."""
    spec = NAMED[spec].spec if spec in NAMED else spec
    parts = spec.split(":")
    kind, name, rest = parts[0], parts[1] if len(parts) > 1 else "", parts[2:]
    if name not in catalog.GF_INFO:
        raise SequenceSpecError(f"unknown generating function {name!r} in {spec!r}")
    info = catalog.GF_INFO[name]
    F = catalog.build(name, N)
    if kind == "coeff":
        if not rest:
            raise SequenceSpecError("coeff needs a monomial")
        return catalog.slice_coeff(name, parse_monomial(rest[0]), N, series=F)
    if kind == "exactly":
        if not rest:
            raise SequenceSpecError("exactly needs var=k")
        (var, k), = _parse_assign(rest[0]).items()
        others = rest[1] if len(rest) > 1 else "avoid"
        return catalog.exactly_k(name, var, int(k), N, others=others, series=F)
    if kind == "at":
        vals = {v: 1 for v in info.variables}
        if rest:
            vals.update(_parse_assign(rest[0]))
        return F.specialize(vals)
    if kind in ("even", "odd"):
        flip = rest[0].split(",") if rest else None
        even, odd = catalog.parity(name, flip, N, series=F)
        return even if kind == "even" else odd
    if kind == "total":
        vars_ = rest[0].split(",") if rest else None
        return catalog.derivative_numerators(name, vars_, N, series=F)
    raise SequenceSpecError(f"unknown sequence kind {kind!r}")


def sequence(spec: str, N: int = 16, start: int | None = None) -> SequenceRecord:
    """Integer terms a(start), ..., a(N-1); ``start`` defaults to the first nonzero term."""
    s = sequence_series(spec, N)
    terms = _int_terms(s)
    if start is None:
        start = next((i for i, v in enumerate(terms) if v), len(terms))
    named = NAMED.get(spec)
    return SequenceRecord(
        name=spec,
        offset=start,
        terms=terms[start:],
        provenance="catalog",
        oeis=named.oeis if named else None,
        note=named.doc if named else "",
    )


def bfile_text(record: SequenceRecord, comments: list[str] | None = None) -> str:
    """OEIS b-file: one ``n a(n)`` line per term, newline-terminated."""
    lines = [f"# {c}" for c in (comments or [])]
    lines += [f"{record.offset + i} {v}" for i, v in enumerate(record.terms)]
    return "".join(line + "\n" for line in lines)


def export_bfile(spec: str, path: str | Path, N: int = 16, start: int | None = None) -> Path:
    rec = sequence(spec, N, start)
    path = Path(path)
    path.write_text(bfile_text(rec))
    return path


# -- printed values and their documented corrections ---------------------


@dataclass(frozen=True)
class PrintedSequence:
    """Terms as printed by the source, from index ``offset``.

    ``overrides`` maps an index to the corrected value; the printed value
    is kept so that reports can show both.
    """

    spec: str
    offset: int
    printed: tuple[int, ...]
    overrides: dict = field(default_factory=dict)
    note: str = ""

    def expected(self) -> list[int]:
        out = list(self.printed)
        for n, v in self.overrides.items():
            out[n - self.offset] = v
        return out


GOLDEN: dict[str, PrintedSequence] = {
    "exactly1-P1": PrintedSequence(
        "exactly1-P1", 2, (1, 4, 14, 48, 165, 572, 7072), {8: 2002},
        "the printed t^8 term 7072 is the t^9 term; enumeration gives 2002",
    ),
    "exactly2-P1": PrintedSequence("exactly2-P1", 3, (2, 9, 34, 123, 440, 1573, 5642)),
    "total-P1": PrintedSequence("total-P1", 2, (1, 8, 47, 244, 1186, 5536)),
    "avoid-P2": PrintedSequence("avoid-P2", 0, (1, 2, 5, 15, 48, 160, 548, 1914)),
    "exactly1-P2": PrintedSequence("exactly1-P2", 2, (1, 4, 16, 62, 238, 910)),
    "total-P2": PrintedSequence("total-P2", 2, (1, 6, 29, 130, 562, 2380)),
    "total-P3": PrintedSequence(
        "total-P3", 2, (1, 6, 29, 130, 562, 2880), {7: 2380},
        "printed 2880 at t^7; the same series is printed with 2380 elsewhere and enumeration gives 2380",
    ),
    "exactly1-P3": PrintedSequence("exactly1-P3", 2, (1, 6, 27, 110, 429, 1638)),
    "exactly2-P3": PrintedSequence("exactly2-P3", 4, (1, 10, 65, 350, 1700, 7752)),
    "even-P1": PrintedSequence("even-P1", 0, (1, 2, 5, 16, 51, 180, 622, 2288)),
    "even-P3": PrintedSequence("even-P3", 0, (1, 2, 5, 14, 43, 142, 494, 1780)),
    "odd-P3": PrintedSequence("odd-P3", 2, (1, 6, 27, 110, 430, 1652, 6307)),
    "slice-x1-F16": PrintedSequence("slice-x1-F16", 2, (1, 4, 12, 32, 80, 192, 448)),
    "slice-x1x6-F16": PrintedSequence("slice-x1x6-F16", 4, (2, 12, 48, 160, 480, 1344)),
    "slice-x2x5-F25": PrintedSequence("slice-x2x5-F25", 4, (2, 12, 56, 236, 948, 3712)),
    "even-bounce": PrintedSequence("even-bounce", 1, (2, 4, 12, 40, 140, 504)),
    "odd-bounce": PrintedSequence("odd-bounce", 2, (2, 8, 30, 112, 420, 1584)),
    "slice-x3x4-F34": PrintedSequence("slice-x3x4-F34", 3, (2, 12, 54, 220, 858, 3276)),
    "slice-x2-F24": PrintedSequence("slice-x2-F24", 2, (1, 3, 9, 28, 90, 297)),
    "slice-x4-F24": PrintedSequence("slice-x4-F24", 2, (1, 5, 19, 68, 240, 847, 3003)),
    "slice-x2x4-F24": PrintedSequence("slice-x2x4-F24", 3, (1, 7, 32, 129, 495, 1859)),
    "slice-x2x3^2x4-F2345": PrintedSequence("slice-x2x3^2x4-F2345", 5, (2, 10, 40, 150, 550, 2002)),
    "total-touch": PrintedSequence(
        "total-touch", 2, (4, 24, 116, 520, 2248, 9530), {7: 9520},
        "printed 9530 at t^7; the printed closed formula 4^n - 4 C(2n-1, n-1) and enumeration give 9520",
    ),
    "even-touch": PrintedSequence("even-touch", 0, (1, 2, 2, 12, 34, 132, 468, 1752, 6530)),
    "avoid-P4-delannoy": PrintedSequence("avoid-P4-delannoy", 0, (1, 3, 12, 52, 236, 1108, 5340)),
    "delannoy": PrintedSequence("delannoy", 0, (1, 3, 13, 63, 321, 1683)),
    "catalan": PrintedSequence("catalan", 0, (1, 1, 2, 5, 14, 42)),
    "schroder": PrintedSequence("schroder", 0, (1, 2, 6, 22, 90, 394)),
    "little-schroder": PrintedSequence("little-schroder", 0, (1, 1, 3, 11, 45, 197)),
}

# closed formulas for some of the named sequences, as functions of n
FORMULAS: dict[str, Callable[[int], int]] = {
    "total-P1": lambda n: ((n + 1) * comb(2 * n, n) - 4**n) // 2,
    "total-P2": lambda n: 4 ** (n - 1) - comb(2 * n - 1, n - 1) if n else 0,
    "slice-x1-F16": lambda n: (n - 1) * 2 ** (n - 2) if n >= 2 else 0,
    "slice-x1x6-F16": lambda n: (n - 2) * (n - 3) * 2 ** (n - 4) if n >= 4 else 0,
    "even-bounce": lambda n: 2 * comb(2 * n - 2, n - 1) if n else 1,
    "odd-bounce": lambda n: 2 * comb(2 * n - 2, n - 2) if n >= 2 else 0,
    "total-touch": lambda n: 4**n - 4 * comb(2 * n - 1, n - 1) if n else 0,
}


@dataclass
class GoldenCheck:
    name: str
    offset: int
    printed: list[int]
    expected: list[int]
    actual: list[int]
    overrides: dict

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "offset": self.offset,
            "printed": self.printed,
            "expected": self.expected,
            "actual": self.actual,
            "overrides": {str(k): v for k, v in self.overrides.items()},
            "passed": self.passed,
        }


def check_golden(name: str) -> GoldenCheck:
    g = GOLDEN[name]
    want = g.expected()
    N = g.offset + len(want)
    s = sequence_series(g.spec, N)
    got = _int_terms(s)[g.offset :]
    return GoldenCheck(name, g.offset, list(g.printed), want, got, dict(g.overrides))


def check_formula(name: str, n_max: int = 12) -> list[int]:
    """Indices n <= n_max where the catalog disagrees with the closed formula."""
    terms = _int_terms(sequence_series(name, n_max + 1))
    f = FORMULAS[name]
    return [n for n in range(n_max + 1) if terms[n] != f(n)]


# -- asymptotics -----------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticTarget:
    name: str
    gf: str
    variables: tuple[str, ...] | None
    formula: Callable[[int], float]
    printed: str
    note: str = ""


def _sqrt_pi_n(n: int) -> float:
    return math.sqrt(math.pi * n)


ASYMPTOTICS: dict[str, AsymptoticTarget] = {
    "P1": AsymptoticTarget(
        "P1", "F1", None, lambda n: (n + 1) / 2 - _sqrt_pi_n(n), "(n+1)/2 - sqrt(pi n)",
        "Stirling gives (n+1)/2 - sqrt(pi n)/2; the printed constant is off by a factor 2 "
        "in the correction term, so the gap only shrinks relatively",
    ),
    "P1,P6": AsymptoticTarget(
        "P1,P6", "F16", None, lambda n: n + 1 - 2 * _sqrt_pi_n(n), "n + 1 - 2 sqrt(pi n)",
        "twice the P1 expectation, with the same correction-term factor",
    ),
    "P2": AsymptoticTarget("P2", "F2", None, lambda n: _sqrt_pi_n(n) / 4 - 0.5, "sqrt(pi n)/4 - 1/2"),
    "P3": AsymptoticTarget("P3", "F3", None, lambda n: _sqrt_pi_n(n) / 4 - 0.5, "sqrt(pi n)/4 - 1/2"),
    "P2,P5": AsymptoticTarget("P2,P5", "F25", None, lambda n: _sqrt_pi_n(n) / 2 - 1, "sqrt(pi n)/2 - 1"),
    "P3,P4": AsymptoticTarget("P3,P4", "F34", None, lambda n: _sqrt_pi_n(n) / 2 - 1, "sqrt(pi n)/2 - 1"),
    "P2,P4": AsymptoticTarget(
        "P2,P4", "F24", None, lambda n: _sqrt_pi_n(n) / 2 - 1, "sqrt(pi n)/2 - 1",
        "printed as pi n/2 - 1; the stated ~0.886 sqrt(n) fixes the square root",
    ),
    "P2,P3,P4,P5": AsymptoticTarget(
        "P2,P3,P4,P5", "F2345", None, lambda n: _sqrt_pi_n(n) - 2, "sqrt(pi n) - 2"
    ),
}


@dataclass
class AsymptoticRow:
    n: int
    exact: Fraction
    asymptote: float
    rel_gap: float


@dataclass
class AsymptoticReport:
    target: AsymptoticTarget
    rows: list[AsymptoticRow]

    def gap_shrinks(self, start: int = 8) -> bool:
        gaps = [r.rel_gap for r in self.rows if r.n >= start]
        return all(b < a for a, b in zip(gaps, gaps[1:]))

    def to_json(self) -> dict:
        return {
            "target": self.target.name,
            "formula": self.target.printed,
            "note": self.target.note,
            "gap_shrinks_from_8": self.gap_shrinks(),
            "rows": [
                {"n": r.n, "exact": str(r.exact), "exact_float": float(r.exact),
                 "asymptote": r.asymptote, "rel_gap": r.rel_gap}
                for r in self.rows
            ],
        }


def asymptotics(target: str, n_max: int = 40, n_min: int = 1) -> AsymptoticReport:
    """Exact expectations next to the printed asymptote (floats are for display only)."""
    t = ASYMPTOTICS[target]
    ex = catalog.expectation(t.gf, t.variables, N=n_max + 1)
    rows = []
    for n in range(n_min, n_max + 1):
        a = t.formula(n)
        e = ex[n]
        gap = abs(float(e) - a) / abs(float(e)) if e else math.inf
        rows.append(AsymptoticRow(n, e, a, gap))
    return AsymptoticReport(t, rows)


# -- verification runs -----------------------------------------------------

PATTERN_STATS = (
    ("P1", east_below_subdiagonal),
    ("P2", bounce_minus),
    ("P3", cross_h),
    ("P4", cross_v),
    ("P5", bounce_plus),
    ("P6", north_above_superdiagonal),
)


def check_equivalences(n: int) -> list[str]:
    """Paths of size n where a pattern count and its geometric statistic disagree."""
    bad = []
    for L in enumerate_paths(n):
        prof = profile_tuple(L.word)
        for (pid, stat), c in zip(PATTERN_STATS, prof):
            if stat(L) != c:
                bad.append(f"{L.word}:{pid}")
        if n and sum(prof) != n - 1:
            bad.append(f"{L.word}:sum")
    return bad


def default_nmax(name: str) -> int:
    info = catalog.GF_INFO[name]
    if info.kind == "delannoy":
        return 6
    return 7 if name == "F2345" else 8


def verify_all(n_max: int | None = None, jobs: int = 1, force: bool = False) -> dict:
    """Every oracle comparison, pattern-geometry check, bijection and printed sequence.

    Failures are collected, never short-circuited.
    """
    t0 = time.perf_counter()
    out: dict = {"catalog": [], "equivalences": [], "bijections": [], "golden": []}
    for name in catalog.GF_NAMES:
        kind = catalog.GF_INFO[name].kind
        k = default_nmax(name) if n_max is None else min(n_max, oracle.cap_for(kind))
        try:
            rep = oracle.verify(name, k, force=force, jobs=jobs)
            out["catalog"].append(rep.to_json())
        except Exception as exc:  # report, keep going
            out["catalog"].append({"name": name, "passed": False, "error": repr(exc)})
    eq_max = 8 if n_max is None else n_max
    for n in range(eq_max + 1):
        bad = check_equivalences(n)
        out["equivalences"].append({"n": n, "passed": not bad, "failures": bad[:5]})
    bij_max = 7 if n_max is None else min(n_max, 7)
    for name in MAPS:
        for n in range(1, bij_max + 1):
            out["bijections"].append(check_bijection(name, n).to_json())
    for name in GOLDEN:
        out["golden"].append(check_golden(name).to_json())
    out["passed"] = all(
        r.get("passed", False) for section in ("catalog", "equivalences", "bijections", "golden")
        for r in out[section]
    )
    out["seconds"] = round(time.perf_counter() - t0, 3)
    return out


def log_dir() -> Path:
    return Path(os.environ.get("PP_LOG_DIR", "runs"))


def write_run_log(report: dict, directory: str | Path | None = None) -> Path:
    d = Path(directory) if directory is not None else log_dir()
    d.mkdir(parents=True, exist_ok=True)
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S%fZ")
    path = d / f"verify-{stamp}.json"
    path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return path


def touch_exchange_defect(n: int) -> dict:
    """Witness that north touches and crossings cannot be swapped path by path."""
    return joint_symmetry_defect(n, north_touches, crossings)
