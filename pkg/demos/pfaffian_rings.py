"""Pfaffians and the classification of Pfaffian rings B_m(n).

B_m(n) is cut out by the 2m-Pfaffians of a generic antisymmetric n x n
matrix. It is a complete intersection -- equivalently a Roberts ring --
exactly when n = 2m (a hypersurface) or m = 1.
"""

from fractions import Fraction
from random import Random

from grasstodd import (
    AntisymmetricMatrix,
    classify_B,
    cross_check_B2,
    determinant,
    pfaffian,
)

print("A 4x4 Pfaffian and its square:")
rows = [
    [0, 2, 3, 5],
    [-2, 0, 7, 11],
    [-3, -7, 0, 13],
    [-5, -11, -13, 0],
]
z = AntisymmetricMatrix.from_rows(rows)
pf = pfaffian(z)
print(f"  Pf = 2*13 - 3*11 + 5*7 = {pf}")
print(f"  det = {determinant(rows)} = Pf^2: {pf ** 2 == determinant(rows)}")

print("\nRandom rational matrices, Pf^2 = det every time:")
rng = Random(7)
for size in (2, 4, 6, 8):
    ok = 0
    for _ in range(20):
        sample = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                v = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                sample[i][j], sample[j][i] = v, -v
        m = AntisymmetricMatrix.from_rows(sample)
        ok += pfaffian(m) ** 2 == determinant(sample)
    print(f"  size {size}: {ok}/20")

print("\nClassification of B_m(n):")
print(f"  {'m':>2} {'n':>2}  {'gens':>5} {'height':>6}  CI    Roberts")
for m in (1, 2, 3):
    for n in range(2 * m, 2 * m + 4):
        c = classify_B(m, n)
        print(
            f"  {c.m:>2} {c.n:>2}  {c.generators:>5} {c.height:>6}  "
            f"{'yes' if c.is_complete_intersection else 'no ':4}  "
            f"{'yes' if c.is_roberts else 'no'}"
        )

print("\nB_2(n) is the cone ring over G_2(n); the verdicts must agree:")
for n in range(4, 10):
    print(f"  n = {n}: {'consistent' if cross_check_B2(n) else 'MISMATCH'}")
