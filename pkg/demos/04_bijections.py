"""Reflection maps between touch statistics.

cross_to_bounce flips the rest of the path at each touch and swaps the
number of bounces with the number of crossings. touch_to_cross carries
the number of north touches to the number of crossings.
"""
from pairedpaths import enumerate_paths, parse_word
from pairedpaths.bijections import check_bijection, cross_to_bounce, joint_symmetry_defect, touch_to_cross
from pairedpaths.geometry import bounces, crossings, north_touches
from pairedpaths.paths import ascii_grid

L = parse_word("ENNEENNEEN")
M = cross_to_bounce(L)
print(L.word, "bounces", bounces(L), "crossings", crossings(L))
print(M.word, "bounces", bounces(M), "crossings", crossings(M))
print(ascii_grid(M))
print()

for name in ("cross-to-bounce", "touch-to-cross"):
    for n in (4, 7):
        rep = check_bijection(name, n)
        print(f"{name} n={n}: injective {rep.injective}, transfer failures {len(rep.transfer_failures)},"
              f" reverse failures {rep.reverse_failures}, involution {rep.involution}")
print()

# one path whose touch and crossing counts are swapped by touch_to_cross
for P in enumerate_paths(7):
    Q = touch_to_cross(P)
    if (north_touches(P), crossings(P), north_touches(Q), crossings(Q)) == (3, 2, 2, 3):
        print(P.word, "->", Q.word)
        break

# no map can swap the pair on every path: the joint counts are not symmetric
print("asymmetric cells at n = 3:", joint_symmetry_defect(3, north_touches, crossings))
