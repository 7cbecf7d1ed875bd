"""Characteristic classes of the tangent bundle, with two global sanity
checks: the Todd class integrates to 1, and Riemann-Roch for the Plucker
line bundle counts semistandard tableaux.
"""

from grasstodd import (
    GrassmannShape,
    ch_tangent,
    chern_tangent,
    multiply,
    scale,
    sigma,
    ssyt_count,
    todd_tangent,
)
from grasstodd.chow import graded_context
from grasstodd.series import exp_graded

s = GrassmannShape(2, 5)
box = tuple([s.cols] * s.d)

print(f"Tangent bundle of G_{s.d}({s.n}), rank {s.dim}")

print("\nChern character, low degrees:")
cht = ch_tangent(s, max_degree=3)
for k in range(4):
    print(f"  ch_{k} = {cht.component(k)}")

print("\nChern classes:")
ct = chern_tangent(s, max_degree=3)
for k in range(1, 4):
    print(f"  c_{k} = {ct.component(k)}")

print("\nTodd class, all degrees:")
td = todd_tangent(s)
for k in range(s.dim + 1):
    print(f"  td_{k} = {td.component(k)}")

genus = td.component(s.dim).coefficient(box)
print(f"\nIntegral of td = {genus} (arithmetic genus of a rational variety)")

print("\nHirzebruch-Riemann-Roch for O(k): chi = integral of e^(k h) td")
ctx = graded_context(s)
for k in range(4):
    twist = exp_graded(scale(k, sigma(s, 1)), ctx)
    chi = multiply(twist, td).component(s.dim).coefficient(box)
    sections = ssyt_count(tuple([k] * s.d), s.n) if k else 1
    print(f"  chi(O({k})) = {chi}   tableau count = {sections}")
