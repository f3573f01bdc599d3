"""Paired patterns in lattice and Delannoy paths.

Exact enumeration, truncated generating functions in the pattern-marking
variables, and brute-force checks of both.
"""
from .catalog import GF_NAMES, build, build_by_recurrence, exactly_k, expectation, parity
from .oracle import joint_distribution, verify
from .paths import PathWord, enumerate_paths, parse_word
from .patterns import P1, P2, P3, P4, P5, P6, match_count, match_profile, pattern
from .poly import MultiPoly
from .series import Series

__version__ = "0.1.0"
__all__ = [
    "GF_NAMES",
    "MultiPoly",
    "P1",
    "P2",
    "P3",
    "P4",
    "P5",
    "P6",
    "PathWord",
    "Series",
    "build",
    "build_by_recurrence",
    "enumerate_paths",
    "exactly_k",
    "expectation",
    "joint_distribution",
    "match_count",
    "match_profile",
    "parity",
    "parse_word",
    "pattern",
    "verify",
]
