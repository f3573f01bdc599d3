"""Truncated generating functions, built two ways.

Each catalog entry is expanded from its closed form and, independently,
from a functional equation solved by fixed-point iteration.
"""
import time

from pairedpaths import build, build_by_recurrence, exactly_k, expectation, parity
from pairedpaths.poly import X

F1 = build("F1", 8)
print("F1 =", F1)
print("t^4 coefficient:", F1.coeff(4))
print()

F2345 = build("F2345", 7)
print("all four touch patterns at t^4:", F2345.coeff(4))
print()

t0 = time.perf_counter()
a = build("F2345", 16)
t1 = time.perf_counter()
b = build_by_recurrence("F2345", 16)
t2 = time.perf_counter()
print(f"closed form {t1 - t0:.2f}s, recurrence {t2 - t1:.2f}s, equal: {a == b}")
print()

print("exactly one P1 match:", exactly_k("F1", "x", 1, 10).coeffs[2:])
even, odd = parity("F3", N=9)
print("even number of horizontal crossings:", even.coeffs)
print("odd:", odd.coeffs)
print()

# the diagonal specializations of three different two-variable functions agree
x = X("x")
f25 = build("F25", 10).substitute({"x2": x, "x5": x})
f34 = build("F34", 10).substitute({"x3": x, "x4": x})
print("F25(x, x, t) == F34(x, x, t):", f25 == f34)

ex = expectation("F2", N=10)
print("mean number of right bounces:", [str(ex[n]) for n in range(1, 10)])
