from itertools import combinations

import pytest

from pairedpaths.catalog import catalan
from pairedpaths.geometry import is_dyck
from pairedpaths.paths import DELANNOY, IndexRangeError, enumerate_paths, paired_subword, parse_word
from pairedpaths.patterns import (
    P1,
    P2,
    P3,
    P4,
    P6,
    PATTERN_IDS,
    PatternError,
    PatternSet,
    avoids,
    match_at,
    match_count,
    match_profile,
    occurs,
    parse_pattern_set,
    pattern,
    profile_tuple,
    window_words,
)


def test_canonical_patterns():
    assert [pattern(p).word.word for p in PATTERN_IDS] == ["EENN", "ENEN", "NEEN", "ENNE", "NENE", "NNEE"]
    assert pattern("neen") is P3 or pattern("neen") == P3
    assert pattern("EN").k == 1
    with pytest.raises(PatternError):
        pattern("P9")
    with pytest.raises(PatternError):
        PatternSet.of("EN", "EENN")


def test_pattern_sets():
    G = parse_pattern_set("P1, NNEE")
    assert "EENN" in G and "NNEE" in G and "ENEN" not in G
    assert G.k == 2


def test_match_at():
    assert match_at("NEEENN", P1, 2)
    assert not match_at("NEEENN", P1, 1)
    with pytest.raises(IndexRangeError):
        match_at("EN", P1, 1)


def test_match_counts():
    assert match_count("NEEENN", P1) == 1
    assert match_count("ENNE", P4) == 1
    assert window_words("NEEENN", 2) == ["NEEN", "EENN"]
    dist = {}
    for L in enumerate_paths(2):
        k = match_count(L, P1)
        dist[k] = dist.get(k, 0) + 1
    assert dist == {0: 5, 1: 1}


def test_avoidance():
    others = PatternSet.of("P3", "P4", "P5", "P6")
    for L in enumerate_paths(5):
        assert avoids(L, others) == is_dyck(L)
    C = catalan(11)
    for n in range(9):
        assert sum(1 for L in enumerate_paths(n) if avoids(L, P1)) == C.coeffs[n + 1]
    assert avoids("", P1)


def _occurs_brute(word, G):
    L = parse_word(word)
    return any(paired_subword(L, A).word in G for A in combinations(range(1, L.n + 1), G.k))


def test_occurrences():
    assert occurs("NEEENN", P1)
    assert occurs("ENNEEN", PatternSet.of("ENNEEN"))
    assert not occurs("EENN", P6)
    G = PatternSet.of("P2", "P6")
    for L in enumerate_paths(4):
        assert occurs(L, G) == _occurs_brute(L.word, G)


def test_profiles():
    assert match_profile("NEEENN").as_tuple() == (1, 0, 1, 0, 0, 0)
    assert match_profile("ENEN").as_tuple() == (0, 1, 0, 0, 0, 0)
    assert match_profile(parse_word("EDNDDNNEDE", DELANNOY)).as_tuple() == (0, 0, 0, 1, 0, 1)
    assert match_profile("").total() == 0


def test_fast_profile_matches_reference():
    for n in range(7):
        for L in enumerate_paths(n):
            slow = tuple(match_count(L, pattern(p)) for p in PATTERN_IDS)
            assert profile_tuple(L.word) == slow
    for L in enumerate_paths(4, DELANNOY):
        slow = tuple(match_count(L, pattern(p)) for p in PATTERN_IDS)
        assert profile_tuple(L.word) == slow


def test_profile_sums_to_n_minus_one():
    for n in range(1, 9):
        for L in enumerate_paths(n):
            assert sum(profile_tuple(L.word)) == n - 1


def test_p2_pattern_object():
    assert P2.word.word == "ENEN" and str(P2) == "P2"
