import pytest

from pairedpaths.bijections import (
    MAPS,
    check_bijection,
    cross_to_bounce,
    cross_to_touch,
    flip_segment,
    flip_suffix,
    joint_symmetry_defect,
    touch_to_cross,
)
from pairedpaths.geometry import DomainError, bounces, crossings, north_touches
from pairedpaths.paths import enumerate_paths, parse_word


def test_flip_suffix():
    L = parse_word("EENNEN")
    assert flip_suffix(L, (0, 0)) == L.reflect()
    assert flip_suffix(L, (3, 3)) == L
    assert flip_suffix(flip_suffix(L, (2, 2)), (2, 2)) == L
    assert flip_suffix(L, (2, 2)).word == "EENNNE"
    with pytest.raises(DomainError):
        flip_suffix(L, (1, 1))
    with pytest.raises(DomainError):
        flip_suffix(L, (1, 2))


def test_flip_segment():
    assert flip_segment("ENENEN", (1, 1), (2, 2)).word == "ENNEEN"


def test_paths_without_touches_are_fixed():
    for w in ("EEENNN", "NNNEEE", "EENENN"):
        assert cross_to_bounce(w).word == w
        assert touch_to_cross(w).word == w


def test_cross_to_bounce_on_size_five():
    for L in enumerate_paths(5):
        M = cross_to_bounce(L)
        assert bounces(M) == crossings(L) and crossings(M) == bounces(L)


def test_staircase():
    L = parse_word("EN" * 4)
    M = touch_to_cross(L)
    assert north_touches(L) == 3 and crossings(M) == 3


@pytest.mark.parametrize("name", list(MAPS))
@pytest.mark.parametrize("n", range(1, 8))
def test_exhaustive(name, n):
    rep = check_bijection(name, n)
    assert rep.passed, rep.to_json()


def test_touch_maps_are_inverse():
    for n in range(7):
        for L in enumerate_paths(n):
            assert cross_to_touch(touch_to_cross(L)) == L
            assert touch_to_cross(cross_to_touch(L)) == L


def test_profile_like_the_worked_example_exists():
    # a path with 3 north touches and 2 crossings whose image swaps both
    hits = [
        L for L in enumerate_paths(7)
        if north_touches(L) == 3 and crossings(L) == 2
        and crossings(touch_to_cross(L)) == 3 and north_touches(touch_to_cross(L)) == 2
    ]
    assert hits


def test_north_touches_and_crossings_cannot_be_swapped_pathwise():
    assert joint_symmetry_defect(2, north_touches, crossings) == {}
    defect = joint_symmetry_defect(3, north_touches, crossings)
    assert defect[(0, 1)] == (3, 2)
    assert check_bijection("touch-to-cross", 3).reverse_failures > 0


def test_bounce_crossing_joint_is_symmetric():
    for n in range(1, 8):
        assert joint_symmetry_defect(n, bounces, crossings) == {}


def test_involution_is_reported():
    assert check_bijection("cross-to-bounce", 6).involution
    assert not check_bijection("touch-to-cross", 4).involution
