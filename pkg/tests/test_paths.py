from itertools import combinations
from math import comb

import pytest

from pairedpaths.paths import (
    DELANNOY,
    AlphabetError,
    BalanceError,
    EncodingError,
    IndexRangeError,
    MalformedArrayError,
    ParseError,
    PathWord,
    TwoRowArray,
    ascii_grid,
    central_delannoy,
    enumerate_paths,
    from_array,
    lattice_points,
    paired_subword,
    parse_index_set,
    parse_word,
    prefixes,
    reduce,
    select_columns,
    to_array,
)


def test_parse_lattice_and_delannoy():
    assert parse_word("NEEENN").n == 3
    assert parse_word("").n == 0
    L = parse_word("EDNDDNNEDE", DELANNOY)
    assert L.n == 7 and not L.is_lattice
    assert parse_word(" neen ").word == "NEEN"


@pytest.mark.parametrize(
    "text, kind, exc",
    [
        ("ENN", "lattice", BalanceError),
        ("ENX", "lattice", ParseError),
        ("EDN", "lattice", AlphabetError),
        ("EDDN", "delannoy", None),
    ],
)
def test_parse_errors(text, kind, exc):
    if exc is None:
        assert parse_word(text, kind).n == 3
    else:
        with pytest.raises(exc):
            parse_word(text, kind)


def test_parse_error_reports_position():
    with pytest.raises(ParseError, match="position 3"):
        parse_word("ENXN")


def test_array_round_trip_examples():
    T = to_array("NEEENN")
    assert T.bottom == (2, 3, 4) and T.top == (1, 5, 6)
    assert to_array("EN") == TwoRowArray((1,), (2,))
    assert from_array(TwoRowArray((2, 3, 4), (1, 5, 6))).word == "NEEENN"
    with pytest.raises(EncodingError):
        to_array(parse_word("DEN", DELANNOY))


def test_array_round_trip_exhaustive():
    for L in enumerate_paths(5):
        assert from_array(to_array(L)) == L
    for bottom in combinations(range(1, 9), 4):
        top = tuple(i for i in range(1, 9) if i not in bottom)
        T = TwoRowArray(bottom, top)
        assert to_array(from_array(T)) == T


def test_malformed_arrays():
    with pytest.raises(MalformedArrayError):
        TwoRowArray((2, 1), (3, 4))
    with pytest.raises(MalformedArrayError):
        TwoRowArray((1,), (2, 3))
    with pytest.raises(MalformedArrayError):
        from_array(TwoRowArray((1, 2), (3, 5)))
    with pytest.raises(MalformedArrayError):
        reduce(TwoRowArray((1, 3), (3, 4)))


def test_reduce():
    assert reduce(TwoRowArray((3, 9), (5, 12))) == TwoRowArray((1, 3), (2, 4))
    T = to_array("ENNE")
    assert reduce(T) == T


def test_select_columns_and_subwords():
    T = to_array("NEEENN")
    assert select_columns(T, [1, 2, 3]) == T
    assert select_columns(T, []).width == 0
    assert from_array(reduce(select_columns(T, {1, 2}))).word == "NEEN"
    assert from_array(reduce(select_columns(T, {1, 3}))).word == "NEEN"
    assert paired_subword("NEEENN", {1}).word == "NE"
    assert paired_subword("NEEENN", {2, 3}).word == "EENN"
    assert paired_subword("NEEENN", {1, 2, 3}).word == "NEEENN"
    with pytest.raises(IndexRangeError):
        select_columns(T, [4])


def test_subword_skips_diagonal_steps():
    L = parse_word("EDNDDNNEDE", DELANNOY)
    assert paired_subword(L, {1, 2, 3}).word == "ENNNEE"
    assert paired_subword(L, {1, 2}).word == "ENNE"


def test_parse_index_set():
    assert parse_index_set("3,1") == (1, 3)
    assert parse_index_set("") == ()
    with pytest.raises(ParseError):
        parse_index_set("1,a")


def test_enumeration_counts_and_order():
    assert [L.word for L in enumerate_paths(2)] == ["EENN", "ENEN", "ENNE", "NEEN", "NENE", "NNEE"]
    assert [L.word for L in enumerate_paths(0)] == [""]
    assert sum(1 for _ in enumerate_paths(2, DELANNOY)) == 13
    for n in range(7):
        assert sum(1 for _ in enumerate_paths(n)) == comb(2 * n, n)
    for n in range(6):
        words = [L.word for L in enumerate_paths(n, DELANNOY)]
        assert len(words) == len(set(words)) == central_delannoy(n)


def test_prefix_partition_covers_everything():
    full = {L.word for L in enumerate_paths(4)}
    parts = [L.word for p in prefixes(3) for L in enumerate_paths(4, prefix=p)]
    assert sorted(parts) == sorted(full)
    dfull = {L.word for L in enumerate_paths(3, DELANNOY)}
    dparts = [L.word for p in prefixes(2, DELANNOY) for L in enumerate_paths(3, DELANNOY, p)]
    assert sorted(dparts) == sorted(dfull)


def test_symmetries_and_points():
    L = PathWord("EENENN", 3)
    assert L.reflect().word == "NNENEE"
    assert L.rotate().word == "EENENN"[::-1].translate(str.maketrans("EN", "NE"))
    assert lattice_points("EN") == [(0, 0), (1, 0), (1, 1)]
    assert lattice_points(parse_word("DD", DELANNOY))[-1] == (2, 2)


def test_ascii_grid():
    assert ascii_grid("EN") == ". o\no o"
    assert ascii_grid("NE") == "o o\no ."
