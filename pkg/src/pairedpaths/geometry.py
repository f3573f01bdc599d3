"""Geometric statistics of lattice paths.

Everything is a single sweep over the running excess ``#E - #N`` of the
prefix read so far. A point (i, i) strictly between the endpoints where
the excess returns to zero is a diagonal touch; the steps on either side
classify it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .paths import E, N, PathWord, as_path, lattice_points

BOUNCE_RIGHT = "bounce_right"  # N then E: counted by bounce-minus, matches P2
BOUNCE_LEFT = "bounce_left"  # E then N: bounce-plus, P5
CROSS_HORIZONTAL = "cross_horizontal"  # E then E: P3
CROSS_VERTICAL = "cross_vertical"  # N then N: P4

_KIND = {
    (N, E): BOUNCE_RIGHT,
    (E, N): BOUNCE_LEFT,
    (E, E): CROSS_HORIZONTAL,
    (N, N): CROSS_VERTICAL,
}


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class TouchEvent:
    point: tuple[int, int]
    kind: str


def _lattice(L: PathWord | str) -> PathWord:
    L = as_path(L)
    if not L.is_lattice:
        raise DomainError("statistic defined for lattice paths only")
    return L


def east_below_line(L: PathWord | str, c: int) -> int:
    """East steps strictly below ``y = x - c``: prefix excess reaches ``c + 1`` on the step."""
    if c < 1:
        raise ValueError("c must be at least 1")
    L = _lattice(L)
    h = count = 0
    for ch in L.word:
        if ch == E:
            h += 1
            if h >= c + 1:
                count += 1
        else:
            h -= 1
    return count


def east_below_subdiagonal(L: PathWord | str) -> int:
    return east_below_line(L, 1)


def north_above_superdiagonal(L: PathWord | str) -> int:
    return east_below_line(_lattice(L).reflect(), 1)


def touch_events(L: PathWord | str) -> list[TouchEvent]:
    """Interior diagonal touches in path order.

    For a Delannoy path, a touch reached or left by a diagonal step is not
    classified and yields no event.
    """
    L = as_path(L)
    w = L.word
    events = []
    x = y = 0
    for i, ch in enumerate(w[:-1]):
        if ch == E:
            x += 1
        elif ch == N:
            y += 1
        else:
            x += 1
            y += 1
        if x == y:
            kind = _KIND.get((ch, w[i + 1]))
            if kind is not None:
                events.append(TouchEvent((x, x), kind))
    return events


def touch_points(L: PathWord | str) -> list[tuple[int, int]]:
    """Interior points of ``L`` on the diagonal, whatever the adjacent steps."""
    L = as_path(L)
    pts = []
    x = y = 0
    for ch in L.word[:-1]:
        if ch != N:
            x += 1
        if ch != E:
            y += 1
        if x == y:
            pts.append((x, y))
    return pts


def _count(L: PathWord | str, kind: str) -> int:
    return sum(1 for ev in touch_events(L) if ev.kind == kind)


def bounce_minus(L: PathWord | str) -> int:
    return _count(L, BOUNCE_RIGHT)


def bounce_plus(L: PathWord | str) -> int:
    return _count(L, BOUNCE_LEFT)


def cross_h(L: PathWord | str) -> int:
    return _count(L, CROSS_HORIZONTAL)


def cross_v(L: PathWord | str) -> int:
    return _count(L, CROSS_VERTICAL)


def bounces(L: PathWord | str) -> int:
    return bounce_minus(L) + bounce_plus(L)


def crossings(L: PathWord | str) -> int:
    return cross_h(L) + cross_v(L)


def north_touches(L: PathWord | str) -> int:
    """Touches entered by a north step that are bounces or crossings (P2 + P4 matches)."""
    return bounce_minus(L) + cross_v(L)


def is_dyck(L: PathWord | str) -> bool:
    """Stays weakly below y = x, i.e. every prefix has at least as many E as N."""
    L = _lattice(L)
    h = 0
    for ch in L.word:
        h += 1 if ch == E else -1
        if h < 0:
            return False
    return True


def returns(L: PathWord | str) -> int:
    """Interior returns of a Dyck path (equivalently its bounces off the diagonal)."""
    if not is_dyck(L):
        raise DomainError("returns are defined for Dyck paths")
    return len(touch_points(L))


def dyck_area(L: PathWord | str) -> int:
    """Unit cells under a Dyck path, between the path and the x-axis.

    The five Dyck paths of semisize 3 give 0, 1, 2, 2, 3: ``EEENNN`` has
    area 0 and the staircase ``ENENEN`` has area 3.
    """
    L = _lattice(L)
    if not is_dyck(L):
        raise DomainError(f"{L.word} is not a Dyck path")
    area = y = 0
    for ch in L.word:
        if ch == E:
            area += y
        else:
            y += 1
    return area


def diagonal_area(L: PathWord | str) -> int:
    """Full unit cells strictly between a Dyck path and the diagonal."""
    L = _lattice(L)
    n = L.n
    return n * (n - 1) // 2 - dyck_area(L)


def is_on_diagonal(L: PathWord | str, p: tuple[int, int]) -> bool:
    return p[0] == p[1] and tuple(p) in lattice_points(L)

