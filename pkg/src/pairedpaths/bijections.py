"""Reflection bijections that trade diagonal-touch statistics.

Both maps only ever swap E and N on pieces of a path between two diagonal
points, so they keep the path balanced and keep its set of diagonal
points; what changes is how each touch is entered and left.

* ``cross_to_bounce`` swaps bounces (P2 + P5 matches) with crossings
  (P3 + P4 matches).
* ``touch_to_cross`` carries north touches (P2 + P4 matches) to crossings,
  and ``cross_to_touch`` is its inverse. These two statistics cannot be
  swapped path by path (see ``joint_symmetry_defect``), only matched up.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .geometry import (
    BOUNCE_RIGHT,
    CROSS_HORIZONTAL,
    DomainError,
    bounces,
    crossings,
    north_touches,
    touch_events,
    touch_points,
)
from .paths import E, PathWord, as_path, enumerate_paths


def _swap(s: str) -> str:
    return s.translate(str.maketrans("EN", "NE"))


def _lattice(L: PathWord | str) -> PathWord:
    L = as_path(L)
    if not L.is_lattice:
        raise DomainError("the reflection maps are defined on lattice paths")
    return L


def _diag_index(L: PathWord, p: tuple[int, int]) -> int:
    """Number of steps after which a lattice path sits at diagonal point ``p``."""
    i, j = p
    if i != j or not 0 <= i <= L.n:
        raise DomainError(f"{p} is not a diagonal point of the grid")
    k = 2 * i
    if L.word[:k].count(E) != i:
        raise DomainError(f"{L.word} does not pass through {p}")
    return k


def flip_suffix(L: PathWord | str, p: tuple[int, int]) -> PathWord:
    """Reflect the part of ``L`` after diagonal point ``p`` in the diagonal."""
    L = _lattice(L)
    k = _diag_index(L, p)
    return PathWord(L.word[:k] + _swap(L.word[k:]), L.n)


def flip_segment(L: PathWord | str, p: tuple[int, int], q: tuple[int, int]) -> PathWord:
    """Reflect the part of ``L`` between diagonal points ``p`` and ``q``."""
    L = _lattice(L)
    a, b = _diag_index(L, p), _diag_index(L, q)
    if a > b:
        a, b = b, a
    w = L.word
    return PathWord(w[:a] + _swap(w[a:b]) + w[b:], L.n)


def cross_to_bounce(L: PathWord | str) -> PathWord:
    """Flip the suffix at each interior touch in turn, first to last.

    A flip at p_i turns the touch at p_i from a bounce into a crossing or
    back, and leaves the kind of every later touch alone (both of its steps
    are swapped), so every touch changes kind exactly once.
    """
    L = _lattice(L)
    pts = touch_points(L)
    cur = L
    for i in range(len(pts)):
        now = touch_points(cur)
        assert now == pts, "diagonal points must survive a flip"
        cur = flip_suffix(cur, now[i])
    return cur


def touch_to_cross(L: PathWord | str) -> PathWord:
    """Send north touches to crossings: crossings(result) = north_touches(L).

    Walk the interior touches from last to first; when the touch p_i of the
    current path is left by an east step (a right bounce or a horizontal
    crossing), reflect the piece between p_{i-1} and p_i. Classifying on
    the evolving path, right to left, is what makes the count carry over.
    """
    L = _lattice(L)
    pts = [(0, 0)] + touch_points(L) + [(L.n, L.n)]
    cur = L
    for i in range(len(pts) - 2, 0, -1):
        k = 2 * pts[i][0]
        if cur.word[k] == E:
            cur = flip_segment(cur, pts[i - 1], pts[i])
    return cur


def cross_to_touch(L: PathWord | str) -> PathWord:
    """Inverse of ``touch_to_cross``: north_touches(result) = crossings(L).

    Here every touch is classified on the input path and the flips are
    applied together; the pieces are disjoint so their order is irrelevant.
    """
    L = _lattice(L)
    kinds = {ev.point: ev.kind for ev in touch_events(L)}
    pts = [(0, 0)] + touch_points(L) + [(L.n, L.n)]
    cur = L
    for prev, p in zip(pts, pts[1:-1]):
        if kinds.get(p) in (BOUNCE_RIGHT, CROSS_HORIZONTAL):
            cur = flip_segment(cur, prev, p)
    return cur


@dataclass
class BijectionCheck:
    """Outcome of an exhaustive check of one map on all paths of size ``n``.

    ``transfer_failures`` lists paths where the designated statistic is not
    carried over; ``reverse_failures`` counts paths where the second
    statistic is not carried back. The latter only matters for maps that
    exchange their statistics.
    """

    name: str
    n: int
    paths: int
    injective: bool
    transfer_failures: list[str]
    reverse_failures: int
    exchanges: bool
    involution: bool

    @property
    def passed(self) -> bool:
        if not self.injective or self.transfer_failures:
            return False
        return not (self.exchanges and self.reverse_failures)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "paths": self.paths,
            "injective": self.injective,
            "transfer_failures": self.transfer_failures[:5],
            "reverse_failures": self.reverse_failures,
            "exchanges": self.exchanges,
            "involution": self.involution,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class MapSpec:
    func: Callable[[PathWord], PathWord]
    source: Callable[[PathWord], int]
    target: Callable[[PathWord], int]
    exchanges: bool


MAPS: dict[str, MapSpec] = {
    "cross-to-bounce": MapSpec(cross_to_bounce, crossings, bounces, True),
    "touch-to-cross": MapSpec(touch_to_cross, north_touches, crossings, False),
    "cross-to-touch": MapSpec(cross_to_touch, crossings, north_touches, False),
}


def check_bijection(name: str, n: int) -> BijectionCheck:
    """Apply a map to every path of size ``n``.

    Checks injectivity and ``target(f(L)) == source(L)`` on every path;
    for an exchanging map also ``source(f(L)) == target(L)``.
    """
    spec = MAPS[name]
    images: set[str] = set()
    bad: list[str] = []
    reverse = 0
    invol = True
    total = 0
    for L in enumerate_paths(n):
        total += 1
        M = spec.func(L)
        images.add(M.word)
        if spec.target(M) != spec.source(L):
            bad.append(f"{L.word}->{M.word}")
        if spec.source(M) != spec.target(L):
            reverse += 1
        if invol and spec.func(M) != L:
            invol = False
    return BijectionCheck(name, n, total, len(images) == total, bad, reverse, spec.exchanges, invol)


def joint_symmetry_defect(n: int, s1: Callable, s2: Callable) -> dict[tuple[int, int], tuple[int, int]]:
    """Value pairs whose counts differ from those of the swapped pair.

    Any map that swaps ``s1`` and ``s2`` on every path needs this to be
    empty, since it would carry the pairs (a, b) onto the pairs (b, a).
    """
    c = Counter((s1(L), s2(L)) for L in enumerate_paths(n))
    return {k: (v, c.get(k[::-1], 0)) for k, v in sorted(c.items()) if c.get(k[::-1], 0) != v}
