"""Paired-pattern matching on lattice and Delannoy paths.

A paired pattern is a balanced E/N word; the i-th E is paired with the i-th
N. A match starting at paired step j means the subword on pairs
j, ..., j+k-1 equals the pattern. Matching is done on the two-row array:
the reduced word of a set of columns is the sequence of row labels of its
entries in increasing order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .paths import (
    E,
    N,
    IndexRangeError,
    ParseError,
    PathWord,
    as_path,
    parse_word,
)


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PairedPattern:
    word: PathWord
    name: str = ""

    def __post_init__(self) -> None:
        if not self.word.is_lattice:
            raise PatternError("paired patterns are words over {E, N} only")
        if self.word.n < 1:
            raise PatternError("a paired pattern has semisize at least 1")
        if not self.name:
            object.__setattr__(self, "name", self.word.word)

    @property
    def k(self) -> int:
        return self.word.n

    def __str__(self) -> str:
        return self.name


CANONICAL = {
    "P1": "EENN",
    "P2": "ENEN",
    "P3": "NEEN",
    "P4": "ENNE",
    "P5": "NENE",
    "P6": "NNEE",
}
PATTERN_IDS = tuple(CANONICAL)
_ID_OF_WORD = {w: name for name, w in CANONICAL.items()}

P1, P2, P3, P4, P5, P6 = (PairedPattern(parse_word(w), name) for name, w in CANONICAL.items())
PATTERNS = {p.name: p for p in (P1, P2, P3, P4, P5, P6)}


def pattern(spec: str | PairedPattern) -> PairedPattern:
    """Accept ``"P3"``, ``"p3"`` or a word such as ``"NEEN"``."""
    if isinstance(spec, PairedPattern):
        return spec
    key = spec.strip().upper()
    if key in PATTERNS:
        return PATTERNS[key]
    try:
        word = parse_word(key)
    except ParseError as exc:
        raise PatternError(f"not a pattern name or E/N word: {spec!r}") from exc
    return PairedPattern(word, _ID_OF_WORD.get(word.word, word.word))


@dataclass(frozen=True)
class PatternSet:
    patterns: tuple[PairedPattern, ...]
    words: frozenset[str] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.patterns:
            raise PatternError("a pattern set must be nonempty")
        ks = {p.k for p in self.patterns}
        if len(ks) != 1:
            raise PatternError(f"patterns of mixed semisize {sorted(ks)}")
        object.__setattr__(self, "words", frozenset(p.word.word for p in self.patterns))

    @classmethod
    def of(cls, *specs: str | PairedPattern) -> "PatternSet":
        seen: dict[str, PairedPattern] = {}
        for s in specs:
            p = pattern(s)
            seen.setdefault(p.word.word, p)
        return cls(tuple(seen.values()))

    @property
    def k(self) -> int:
        return self.patterns[0].k

    def __contains__(self, word: object) -> bool:
        if isinstance(word, PathWord):
            word = word.word
        return word in self.words

    def __iter__(self) -> Iterator[PairedPattern]:
        return iter(self.patterns)


def parse_pattern_set(text: str) -> PatternSet:
    """Comma-separated names or words: ``"P1,P6"`` or ``"EENN,NNEE"``."""
    return PatternSet.of(*[tok for tok in text.split(",") if tok.strip()])


def _as_set(G: PatternSet | PairedPattern | str | Iterable) -> PatternSet:
    if isinstance(G, PatternSet):
        return G
    if isinstance(G, (PairedPattern, str)):
        return PatternSet.of(G)
    return PatternSet.of(*G)


def _positions(L: PathWord) -> tuple[list[int], list[int]]:
    """East and north positions, ignoring diagonal steps (which never pair)."""
    east: list[int] = []
    north: list[int] = []
    for i, ch in enumerate(L.word):
        if ch == E:
            east.append(i)
        elif ch == N:
            north.append(i)
    return east, north


def _reduced_word(east: list[int], north: list[int], cols: Iterable[int]) -> str:
    tagged = []
    for c in cols:
        tagged.append((east[c], E))
        tagged.append((north[c], N))
    tagged.sort()
    return "".join(ch for _, ch in tagged)


def window_words(L: PathWord | str, k: int) -> list[str]:
    """Reduced words of every window of ``k`` consecutive pairs, left to right."""
    L = as_path(L)
    east, north = _positions(L)
    m = len(east)
    return [_reduced_word(east, north, range(j, j + k)) for j in range(m - k + 1)]


def match_at(L: PathWord | str, G, j: int) -> bool:
    L = as_path(L)
    G = _as_set(G)
    east, north = _positions(L)
    m = len(east)
    if not 1 <= j <= m - G.k + 1:
        raise IndexRangeError(f"window start {j} out of range for {m} pairs and k={G.k}")
    return _reduced_word(east, north, range(j - 1, j - 1 + G.k)) in G.words


def match_count(L: PathWord | str, G) -> int:
    G = _as_set(G)
    return sum(1 for w in window_words(L, G.k) if w in G.words)


def avoids(L: PathWord | str, G) -> bool:
    return match_count(L, G) == 0


def occurs(L: PathWord | str, G) -> bool:
    """Whether some (not necessarily consecutive) set of ``k`` pairs reduces into ``G``."""
    L = as_path(L)
    G = _as_set(G)
    east, north = _positions(L)
    m, k = len(east), G.k
    if k > m:
        return False
    chosen: list[int] = []

    def dfs(start: int) -> bool:
        if len(chosen) == k:
            return _reduced_word(east, north, chosen) in G.words
        need = k - len(chosen)
        for c in range(start, m - need + 1):
            chosen.append(c)
            if dfs(c + 1):
                return True
            chosen.pop()
        return False

    return dfs(0)


@dataclass(frozen=True)
class MatchProfile:
    """P1..P6 match counts of one path."""

    counts: dict[str, int]

    def __getitem__(self, pid: str) -> int:
        return self.counts[pid]

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.counts[p] for p in PATTERN_IDS)

    def total(self) -> int:
        return sum(self.counts.values())


def profile_tuple(word: str) -> tuple[int, int, int, int, int, int]:
    """Counts of P1..P6 over adjacent pair windows of a path word (D steps skipped).

    This is the hot loop of the oracle, so it works on the raw string.
    """
    east: list[int] = []
    north: list[int] = []
    for i, ch in enumerate(word):
        if ch == "E":
            east.append(i)
        elif ch == "N":
            north.append(i)
    c = [0, 0, 0, 0, 0, 0]
    for j in range(len(east) - 1):
        a, b, a2, b2 = east[j], north[j], east[j + 1], north[j + 1]
        # a < a2 and b < b2; the relative order of (a, b) and (a2, b2) decides
        if b2 < a:
            c[5] += 1  # NNEE
        elif a2 < b:
            c[0] += 1  # EENN
        elif a < b:
            if a2 < b2:
                c[1] += 1  # EN EN
            else:
                c[3] += 1  # E NN E
        else:
            if a2 < b2:
                c[2] += 1  # N EE N
            else:
                c[4] += 1  # NE NE
    return c[0], c[1], c[2], c[3], c[4], c[5]


def match_profile(L: PathWord | str) -> MatchProfile:
    L = as_path(L)
    return MatchProfile(dict(zip(PATTERN_IDS, profile_tuple(L.word))))

