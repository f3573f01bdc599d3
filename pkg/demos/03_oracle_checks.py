"""Brute force against the catalog.

The oracle enumerates every path, tabulates the joint distribution of the
pattern counts and compares it with the series coefficient by coefficient.
"""
from pairedpaths import joint_distribution, verify
from pairedpaths.oracle import CapExceededError, total_statistic
from pairedpaths.geometry import dyck_area, east_below_subdiagonal, is_dyck

table = joint_distribution(4, ["P2", "P5"])
print("n = 4, (P2, P5) counts:", dict(sorted(table.counts.items())))
print("as a polynomial:", table.to_poly(["x2", "x5"]))
print()

for name in ("F1", "F25", "F2345", "FS4"):
    n_max = 6 if name == "FS4" else 7
    rep = verify(name, n_max, jobs=2)
    print(f"{name:<6} n <= {n_max}: {'pass' if rep.passed else 'FAIL'}")
print()

# total P1 matches over all paths equals total area over Dyck paths
for n in range(1, 8):
    print(n, total_statistic(n, east_below_subdiagonal), total_statistic(n, dyck_area, where=is_dyck))
print()

try:
    joint_distribution(12)
except CapExceededError as exc:
    print("refused:", exc)
