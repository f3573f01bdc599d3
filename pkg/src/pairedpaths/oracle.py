"""Brute-force ground truth: enumerate every path and tabulate match counts.

Nothing here uses a generating function. The tables are the reference that
the closed forms and recurrences of :mod:`pairedpaths.catalog` are checked
against, so the code is kept deliberately plain.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

from . import catalog
from .geometry import is_dyck, returns
from .paths import DELANNOY, LATTICE, PathWord, central_delannoy, enumerate_paths, prefixes
from .patterns import PATTERN_IDS, pattern, profile_tuple
from .poly import VARS, MultiPoly

DEFAULT_CAPS = {LATTICE: 10, DELANNOY: 8}


class CapExceededError(RuntimeError):
    """Enumeration beyond the configured size cap; pass ``force=True`` to run anyway."""


def cap_for(kind: str) -> int:
    env = os.environ.get(f"PP_CAP_{kind.upper()}")
    return int(env) if env else DEFAULT_CAPS[kind]


def _check_cap(n: int, kind: str, force: bool) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = cap_for(kind)
    if n > cap and not force:
        raise CapExceededError(f"n={n} exceeds the {kind} cap {cap}; use force to override")


def path_count(n: int, kind: str = LATTICE) -> int:
    return comb(2 * n, n) if kind == LATTICE else central_delannoy(n)


@dataclass
class DistributionTable:
    """Number of paths of size ``n`` with each vector of match counts."""

    n: int
    patterns: tuple[str, ...]
    kind: str = LATTICE
    counts: Counter = field(default_factory=Counter)

    def __getitem__(self, key: tuple[int, ...]) -> int:
        return self.counts.get(tuple(key), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def to_poly(self, variables: Sequence[str] | None = None) -> MultiPoly:
        """The table read as a polynomial; one variable per pattern."""
        if variables is None:
            variables = ["x"] if len(self.patterns) == 1 else [f"x{p[1:]}" for p in self.patterns]
        if len(variables) != len(self.patterns):
            raise ValueError("need one variable per pattern")
        idx = [VARS.index(v) for v in variables]
        terms: dict = {}
        for vec, c in self.counts.items():
            e = [0] * len(VARS)
            for i, k in zip(idx, vec):
                e[i] += k
            e = tuple(e)
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(terms)

    def marginal(self, pid: str) -> dict[int, int]:
        i = self.patterns.index(pid)
        out: Counter = Counter()
        for vec, c in self.counts.items():
            out[vec[i]] += c
        return dict(sorted(out.items()))


def _tabulate(job: tuple[int, str, str, tuple[int, ...]]) -> Counter:
    n, kind, prefix, idx = job
    out: Counter = Counter()
    for L in enumerate_paths(n, kind, prefix):
        prof = profile_tuple(L.word)
        out[tuple(prof[i] for i in idx)] += 1
    return out


def _jobs(n: int, kind: str, idx: tuple[int, ...], jobs: int) -> list:
    # Delannoy paths can be as short as n steps, so prefixes never go deeper
    depth = 0 if jobs <= 1 else min(n, 4 if kind == LATTICE else 3)
    return [(n, kind, p, idx) for p in prefixes(depth, kind)]


def joint_distribution(
    n: int,
    patterns: Iterable[str] = PATTERN_IDS,
    kind: str = LATTICE,
    force: bool = False,
    jobs: int = 1,
) -> DistributionTable:
    """Tabulate the joint distribution of P-match counts over all paths of size ``n``.

    ``patterns`` are canonical ids (``"P1"`` .. ``"P6"``) or their words.
    With ``jobs > 1`` the path space is split by prefix over worker processes;
    the merged table does not depend on the split.
    """
    _check_cap(n, kind, force)
    pids = tuple(pattern(p).name for p in patterns)
    for p in pids:
        if p not in PATTERN_IDS:
            raise ValueError(f"{p} is not one of the canonical length-4 patterns")
    idx = tuple(PATTERN_IDS.index(p) for p in pids)
    work = _jobs(n, kind, idx, jobs)
    table = DistributionTable(n, pids, kind)
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_tabulate, work):
                table.counts.update(part)
    else:
        for job in work:
            table.counts.update(_tabulate(job))
    return table


# -- reference polynomials for every catalog entry ------------------------


def _schroder_paths(n: int, little: bool) -> int:
    count = 0
    for L in enumerate_paths(n, DELANNOY):
        h = 0
        ok = True
        for ch in L.word:
            if ch == "E":
                h += 1
            elif ch == "N":
                h -= 1
                if h < 0:
                    ok = False
                    break
            elif little and h == 0:
                ok = False
                break
        count += ok
    return count


def reference_poly(name: str, n: int, force: bool = False, jobs: int = 1) -> MultiPoly:
    """The t^n coefficient of catalog entry ``name``, by enumeration alone."""
    info = catalog.GF_INFO[name]
    _check_cap(n, info.kind, force)
    if info.patterns:
        table = joint_distribution(n, info.patterns, info.kind, force=True, jobs=jobs)
        return table.to_poly(info.variables)
    if name == "C":
        return MultiPoly.const(sum(1 for L in enumerate_paths(n) if is_dyck(L)))
    if name == "Cxt":
        out = MultiPoly()
        for L in enumerate_paths(n):
            if is_dyck(L):
                out = out + MultiPoly.monomial({"x": returns(L)})
        return out
    if name in ("D", "Dlittle"):
        return MultiPoly.const(_schroder_paths(n, little=(name == "Dlittle")))
    raise KeyError(name)


# -- verification ----------------------------------------------------------


@dataclass
class VerifyRow:
    name: str
    n: int
    status: str
    expected: MultiPoly | None = None
    actual: MultiPoly | None = None
    first_diff_monomial: str | None = None

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "n": self.n, "status": self.status}
        if self.status != "pass":
            out["expected"] = str(self.expected)
            out["actual"] = str(self.actual)
            out["first_diff_monomial"] = self.first_diff_monomial
        return out


@dataclass
class VerificationReport:
    name: str
    rows: list[VerifyRow]

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.rows)

    def failures(self) -> list[VerifyRow]:
        return [r for r in self.rows if r.status != "pass"]

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "rows": [r.to_json() for r in self.rows]}


def first_diff(expected: MultiPoly, actual: MultiPoly) -> str | None:
    diff = expected - actual
    if diff.is_zero():
        return None
    e = min(diff.terms)
    mono = "*".join(VARS[i] if k == 1 else f"{VARS[i]}^{k}" for i, k in enumerate(e) if k)
    return mono or "1"


def verify(
    name: str,
    n_max: int,
    force: bool = False,
    jobs: int = 1,
    series=None,
) -> VerificationReport:
    """Compare ``build(name)`` (or a supplied series) with enumeration for n <= n_max."""
    info = catalog.GF_INFO[name]
    _check_cap(n_max, info.kind, force)
    F = series if series is not None else catalog.build(name, n_max + 1)
    rows = []
    for n in range(n_max + 1):
        expected = reference_poly(name, n, force=True, jobs=jobs)
        actual = MultiPoly.coerce(F.coeffs[n]) if n < F.order else None
        if actual is None:
            rows.append(VerifyRow(name, n, "fail", expected, None, "truncated"))
        elif actual == expected:
            rows.append(VerifyRow(name, n, "pass"))
        else:
            rows.append(VerifyRow(name, n, "fail", expected, actual, first_diff(expected, actual)))
    return VerificationReport(name, rows)


def total_statistic(
    n: int,
    statistic: Callable[[PathWord], int],
    kind: str = LATTICE,
    where: Callable[[PathWord], bool] | None = None,
    force: bool = False,
) -> int:
    """Sum of ``statistic`` over all paths of size ``n`` (optionally only those passing ``where``)."""
    _check_cap(n, kind, force)
    total = 0
    for L in enumerate_paths(n, kind):
        if where is None or where(L):
            total += statistic(L)
    return total


def count_paths(n: int, where: Callable[[PathWord], bool], kind: str = LATTICE, force: bool = False) -> int:
    _check_cap(n, kind, force)
    return sum(1 for L in enumerate_paths(n, kind) if where(L))

