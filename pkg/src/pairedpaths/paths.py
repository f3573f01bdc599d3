"""Path words, the two-row array encoding, and exhaustive enumeration.

A lattice path from (0,0) to (n,n) is a word over ``E`` (east) and ``N``
(north) with ``n`` of each. A Delannoy path may also use ``D`` (the
diagonal step [1,1]). Positions and column indices are 1-based throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

LATTICE = "lattice"
DELANNOY = "delannoy"

E, N, D = "E", "N", "D"

_SWAP = str.maketrans("EN", "NE")


class PathError(ValueError):
    """Base class for malformed path input."""


class ParseError(PathError):
    pass


class AlphabetError(PathError):
    pass


class BalanceError(PathError):
    pass


class EncodingError(PathError):
    """Raised when an operation needs the lattice (E/N only) encoding."""


class MalformedArrayError(PathError):
    pass


class IndexRangeError(PathError):
    pass


@dataclass(frozen=True)
class PathWord:
    word: str
    n: int

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[str]:
        return iter(self.word)

    @property
    def is_lattice(self) -> bool:
        return D not in self.word

    @property
    def kind(self) -> str:
        return LATTICE if self.is_lattice else DELANNOY

    def reflect(self) -> "PathWord":
        """Reflection about y = x (swap E and N)."""
        return PathWord(self.word.translate(_SWAP), self.n)

    def rotate(self) -> "PathWord":
        """Rotation by 180 degrees (swap E and N, then reverse)."""
        return PathWord(self.word.translate(_SWAP)[::-1], self.n)


def parse_word(text: str, kind: str = LATTICE) -> PathWord:
    """Validate ``text`` as a lattice or Delannoy path word.

    >>> parse_word("NEEENN").n
    3
    >>> parse_word("EDNDDNNEDE", DELANNOY).n
    7
    """
    if kind not in (LATTICE, DELANNOY):
        raise ValueError(f"unknown path kind {kind!r}")
    text = text.strip().upper()
    for pos, ch in enumerate(text, 1):
        if ch not in "END":
            raise ParseError(f"illegal character {ch!r} at position {pos}")
        if ch == D and kind == LATTICE:
            raise AlphabetError(f"D step at position {pos} in a lattice path")
    ne, nn, nd = text.count(E), text.count(N), text.count(D)
    if ne != nn:
        raise BalanceError(f"{ne} east steps but {nn} north steps")
    return PathWord(text, ne + nd)


def as_path(L: PathWord | str, kind: str | None = None) -> PathWord:
    if isinstance(L, PathWord):
        return L
    if kind is None:
        kind = DELANNOY if D in L.upper() else LATTICE
    return parse_word(L, kind)


@dataclass(frozen=True)
class TwoRowArray:
    """Bottom row holds east-step positions, top row north-step positions."""

    bottom: tuple[int, ...]
    top: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bottom) != len(self.top):
            raise MalformedArrayError("rows have different lengths")
        for row in (self.bottom, self.top):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise MalformedArrayError(f"row {row} is not strictly increasing")
            if any(v < 1 for v in row):
                raise MalformedArrayError("entries must be positive")

    @property
    def width(self) -> int:
        return len(self.bottom)

    def column(self, k: int) -> tuple[int, int]:
        return self.bottom[k - 1], self.top[k - 1]

    def entries(self) -> list[int]:
        return list(self.bottom) + list(self.top)

    def is_full(self) -> bool:
        return sorted(self.entries()) == list(range(1, 2 * self.width + 1))


def to_array(L: PathWord | str) -> TwoRowArray:
    L = as_path(L)
    if not L.is_lattice:
        raise EncodingError("the two-row array is defined for lattice paths only")
    bottom = tuple(i for i, ch in enumerate(L.word, 1) if ch == E)
    top = tuple(i for i, ch in enumerate(L.word, 1) if ch == N)
    return TwoRowArray(bottom, top)


def from_array(T: TwoRowArray) -> PathWord:
    if not T.is_full():
        raise MalformedArrayError("rows do not partition {1, ..., 2n}")
    word = [""] * (2 * T.width)
    for i in T.bottom:
        word[i - 1] = E
    for i in T.top:
        word[i - 1] = N
    return PathWord("".join(word), T.width)


def reduce(S: TwoRowArray) -> TwoRowArray:
    """Replace the i-th smallest entry of ``S`` by i."""
    entries = S.entries()
    if len(set(entries)) != len(entries):
        raise MalformedArrayError("reduction needs pairwise distinct entries")
    rank = {v: i for i, v in enumerate(sorted(entries), 1)}
    return TwoRowArray(tuple(rank[v] for v in S.bottom), tuple(rank[v] for v in S.top))


def check_index_set(A: Iterable[int], n: int) -> tuple[int, ...]:
    A = tuple(sorted(set(A)))
    if A and (A[0] < 1 or A[-1] > n):
        raise IndexRangeError(f"index set {A} is not contained in [1, {n}]")
    return A


def parse_index_set(text: str) -> tuple[int, ...]:
    """``"1,3"`` -> ``(1, 3)``; the empty string is the empty set."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(sorted({int(tok) for tok in text.split(",")}))
    except ValueError as exc:
        raise ParseError(f"bad index set {text!r}") from exc


def select_columns(T: TwoRowArray, A: Iterable[int]) -> TwoRowArray:
    A = check_index_set(A, T.width)
    return TwoRowArray(tuple(T.bottom[k - 1] for k in A), tuple(T.top[k - 1] for k in A))


def paired_subword(L: PathWord | str, A: Iterable[int]) -> PathWord:
    """Delete the i-th E and the i-th N of ``L`` for every i outside ``A``.

    Diagonal steps of a Delannoy path are never part of a pair and are
    dropped, so the result is always a lattice word of semisize ``|A|``.
    """
    L = as_path(L)
    npairs = L.word.count(E)
    keep = set(check_index_set(A, npairs))
    out = []
    ce = cn = 0
    for ch in L.word:
        if ch == E:
            ce += 1
            if ce in keep:
                out.append(ch)
        elif ch == N:
            cn += 1
            if cn in keep:
                out.append(ch)
    return PathWord("".join(out), len(keep))


def central_delannoy(n: int) -> int:
    from math import comb

    return sum(comb(n, k) * comb(n + k, k) for k in range(n + 1))


def enumerate_paths(n: int, kind: str = LATTICE, prefix: str = "") -> Iterator[PathWord]:
    """Yield every path of semisize ``n`` once, in lexicographic order E < N < D.

    ``prefix`` restricts the stream to paths starting with that word, which
    is how enumeration work is split between workers.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == LATTICE:
        yield from _lattice_paths(n, prefix)
    elif kind == DELANNOY:
        yield from _delannoy_paths(n, prefix)
    else:
        raise ValueError(f"unknown path kind {kind!r}")


def _lattice_paths(n: int, prefix: str) -> Iterator[PathWord]:
    pe, pn = prefix.count(E), prefix.count(N)
    if D in prefix or pe > n or pn > n:
        return
    m = 2 * n - len(prefix)
    re = n - pe
    # lexicographic order of E-position combinations is word order with E < N
    for pos in combinations(range(m), re):
        w = [N] * m
        for i in pos:
            w[i] = E
        yield PathWord(prefix + "".join(w), n)


def _delannoy_paths(n: int, prefix: str) -> Iterator[PathWord]:
    x = prefix.count(E) + prefix.count(D)
    y = prefix.count(N) + prefix.count(D)
    if x > n or y > n:
        return
    buf = list(prefix)

    def rec(x: int, y: int) -> Iterator[PathWord]:
        if x == n and y == n:
            yield PathWord("".join(buf), n)
            return
        if x < n:
            buf.append(E)
            yield from rec(x + 1, y)
            buf.pop()
        if y < n:
            buf.append(N)
            yield from rec(x, y + 1)
            buf.pop()
        if x < n and y < n:
            buf.append(D)
            yield from rec(x + 1, y + 1)
            buf.pop()

    yield from rec(x, y)


def prefixes(depth: int, kind: str = LATTICE) -> list[str]:
    """All words of length ``depth`` over the path alphabet (for partitioning work)."""
    alphabet = "EN" if kind == LATTICE else "END"
    out = [""]
    for _ in range(depth):
        out = [p + ch for p in out for ch in alphabet]
    return out


def lattice_points(L: PathWord | str) -> list[tuple[int, int]]:
    """The points visited by ``L``, starting at (0,0)."""
    L = as_path(L)
    x = y = 0
    pts = [(0, 0)]
    for ch in L.word:
        if ch == E:
            x += 1
        elif ch == N:
            y += 1
        else:
            x += 1
            y += 1
        pts.append((x, y))
    return pts


def ascii_grid(L: PathWord | str) -> str:
    """Plot the points of ``L``: ``o`` on the path, ``/`` on the diagonal, ``.`` elsewhere."""
    L = as_path(L)
    visited = set(lattice_points(L))
    lines = []
    for y in range(L.n, -1, -1):
        row = []
        for x in range(L.n + 1):
            row.append("o" if (x, y) in visited else ("/" if x == y else "."))
        lines.append(" ".join(row))
    return "\n".join(lines)
