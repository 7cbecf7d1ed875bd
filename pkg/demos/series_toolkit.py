"""The graded-series layer on its own, in a free polynomial algebra.

Newton's identities, graded exp/log, and the Todd-logarithm coefficients
are all ring-agnostic; here they run with formal Chern classes c_1..c_4,
reproducing the universal expansions of ch and td through degree 4.
"""

from fractions import Fraction
from math import factorial

from grasstodd import (
    PolynomialAlgebra,
    bernoulli,
    exp_graded,
    power_sums_from_elementary,
    todd_log_coeffs,
)

alg = PolynomialAlgebra({"c1": 1, "c2": 2, "c3": 3, "c4": 4}, 4)
ctx = alg.context()
c = [alg.generator(f"c{i}") for i in range(1, 5)]

print("Bernoulli numbers feed the Todd logarithm a_m = -B_m/(m*m!):")
a = todd_log_coeffs(4)
for m in range(1, 5):
    print(f"  B_{m} = {bernoulli(m)},  a_{m} = {a[m]}")

print("\nChern character from Newton power sums (ch_m = p_m / m!):")
p = power_sums_from_elementary(c, 4, ctx)
ch = [alg.scale(Fraction(1, factorial(m)), p[m - 1]) for m in range(1, 5)]
for m, val in enumerate(ch, start=1):
    print(f"  ch_{m} = {val}")

print("\nTodd class as exp(sum a_m m! ch_m):")
x = alg.zero()
for m in range(1, 5):
    x = x + a[m] * factorial(m) * ch[m - 1]
td = exp_graded(x, ctx)
for m in range(5):
    print(f"  td_{m} = {alg.component(td, m)}")

print("\nThe degree-2 piece (c1^2 + c2)/12 is the one that decides the")
print("Roberts question in degree 2 once the Chow ring is plugged in.")
