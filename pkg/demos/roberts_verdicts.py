"""Roberts-ring verdicts for cones over Grassmannians.

The cone over G_d(n) in its Plucker embedding is a Roberts ring exactly
when every Todd component of the tangent bundle, in degrees 1..t, is a
multiple of the hyperplane class. This script walks one negative and one
positive case, then prints the full classification grid.
"""

from grasstodd import GrassmannShape, roberts_verdict, tau_components, verdict_table

print("Case G_2(5): the smallest non-Roberts cone")
report = tau_components(GrassmannShape(2, 5))
print(f"  cone dimension {report.cone_dim}; Roberts: {report.verdict}")
for r in report.records:
    flag = "0" if r.is_zero else str(r.representative)
    print(f"  degree {r.degree} (tau index {r.tau_index}): {flag}")
print(f"  first obstruction in degree {report.witness}")

print("\nCase G_3(6): balanced, and one of the two exceptional Roberts cases")
report = tau_components(GrassmannShape(3, 6))
print(f"  Roberts: {report.verdict} (every reduced component vanishes)")

print("\nThe grid for n <= 9 - Roberts exactly at d=1, d=n-1, (2,4), (3,6):")
print(f"  {'d':>2} {'n':>2}  roberts  witness")
for e in verdict_table(9):
    w = "-" if e.witness is None else str(e.witness)
    print(f"  {e.d:>2} {e.n:>2}  {'yes' if e.roberts else 'no ':7} {w}")

print("\nThe witness pattern: degree 2 except for balanced shapes (degree 4),")
print("matching the (2d-n)/12 coefficient that kills degree 2 when n = 2d.")
