"""Paths, paired patterns and what the six two-column patterns measure.

Run with ``python3 demos/01_paths_and_patterns.py``.
"""
from pairedpaths import P1, P2, enumerate_paths, match_count, match_profile, parse_word
from pairedpaths.geometry import bounce_minus, east_below_subdiagonal, touch_events
from pairedpaths.paths import ascii_grid, paired_subword, to_array

L = parse_word("NEEENNEN")
print("path", L.word, "semisize", L.n)
print(ascii_grid(L))
print()

# the 2 x n array: bottom row holds E positions, top row N positions
T = to_array(L)
print("bottom", T.bottom)
print("top   ", T.top)

# pair the i-th E with the i-th N, keep columns 2 and 3
print("paired subword on {2, 3}:", paired_subword(L, {2, 3}).word)
print()

print("match profile:", match_profile(L).counts)
print("P1 matches", match_count(L, P1), "= east steps below y = x - 1:", east_below_subdiagonal(L))
print("P2 matches", match_count(L, P2), "= right bounces:", bounce_minus(L))
print("touch events:", [(e.point, e.kind) for e in touch_events(L)])
print()

# every path of semisize n has exactly n - 1 matches of the six patterns together
for n in range(1, 6):
    sizes = {sum(match_profile(M).counts.values()) for M in enumerate_paths(n)}
    print(n, sizes)
