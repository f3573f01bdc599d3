from math import comb

import pytest

from pairedpaths.catalog import catalan
from pairedpaths.geometry import (
    BOUNCE_RIGHT,
    DomainError,
    TouchEvent,
    bounce_minus,
    bounce_plus,
    cross_h,
    cross_v,
    diagonal_area,
    dyck_area,
    east_below_line,
    east_below_subdiagonal,
    is_dyck,
    north_above_superdiagonal,
    returns,
    touch_events,
    touch_points,
)
from pairedpaths.paths import DELANNOY, enumerate_paths, parse_word
from pairedpaths.patterns import PatternSet, match_count, profile_tuple


def test_east_below_subdiagonal():
    assert east_below_subdiagonal("NEEENN") == 1
    assert east_below_subdiagonal("NNEENE") == 0
    assert sum(east_below_subdiagonal(L) for L in enumerate_paths(3)) == 8
    with pytest.raises(ValueError):
        east_below_line("EN", 0)


def test_north_above_superdiagonal():
    assert north_above_superdiagonal("NNEE") == 1
    assert north_above_superdiagonal("EENN") == 0
    for L in enumerate_paths(6):
        assert north_above_superdiagonal(L) == east_below_subdiagonal(L.reflect())


def test_east_below_line_two():
    assert east_below_line("EEENNN", 2) == 1
    eeennn = PatternSet.of("EEENNN")
    for n in range(8):
        paths = list(enumerate_paths(n))
        assert sum(east_below_line(L, 2) for L in paths) == sum(match_count(L, eeennn) for L in paths)


def test_touch_events():
    assert touch_events("ENEN") == [TouchEvent((1, 1), BOUNCE_RIGHT)]
    assert touch_events("EENN") == []
    assert cross_v("ENNE") == 1
    assert cross_h("NEEN") == 1
    assert bounce_minus("ENEN") == 1


def test_figure_like_path_exists():
    # some path realizes one left bounce, three right bounces, one horizontal and two vertical crossings
    found = None
    for L in enumerate_paths(8):
        if (bounce_plus(L), bounce_minus(L), cross_h(L), cross_v(L)) == (1, 3, 1, 2):
            found = L
            break
    assert found is not None
    assert profile_tuple(found.word)[1:5] == (3, 1, 2, 1)


def test_delannoy_touches_next_to_diagonal_steps_are_not_classified():
    L = parse_word("DEN", DELANNOY)
    assert touch_points(L) == [(1, 1)]
    assert touch_events(L) == []
    L = parse_word("ENEN", DELANNOY)
    assert [e.kind for e in touch_events(L)] == [BOUNCE_RIGHT]


def test_dyck_paths():
    assert is_dyck("EENN") and is_dyck("ENEN")
    assert not is_dyck("NEEN")
    C = catalan(11)
    for n in range(11):
        assert sum(1 for L in enumerate_paths(n) if is_dyck(L)) == C.coeffs[n]


def test_dyck_area():
    areas = sorted(dyck_area(L) for L in enumerate_paths(3) if is_dyck(L))
    assert areas == [0, 1, 2, 2, 3]
    assert dyck_area("EEENNN") == 0
    assert dyck_area("EN" * 4) == 6
    assert diagonal_area("EN" * 4) == 0
    assert diagonal_area("E" * 5 + "N" * 5) == 10
    with pytest.raises(DomainError):
        dyck_area("NE")


def test_area_total_formula():
    for n in range(1, 9):
        total = sum(dyck_area(L) for L in enumerate_paths(n) if is_dyck(L))
        assert total == ((n + 1) * comb(2 * n, n) - 4**n) // 2


def test_returns():
    assert returns("ENEN") == 1
    assert returns("EENN") == 0
    with pytest.raises(DomainError):
        returns("NE")


def test_lattice_only_statistics():
    with pytest.raises(DomainError):
        east_below_subdiagonal(parse_word("DEN", DELANNOY))
