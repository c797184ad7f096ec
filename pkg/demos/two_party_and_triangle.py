"""Two starting points: the 2x2 inequality and the three-cycle.

Both have exact classical bound 1 by enumeration, and both are violated
by singlet measurements: the 2x2 form reaches sqrt(2) and the triangle
reaches 3/2 once perfect anticorrelations let the two sides share one
set of directions.
"""

import math

from bellbound import (
    chsh,
    chsh_settings,
    classical_bound,
    evaluate,
    planar_ring,
    quantum_value,
    triangle,
)

# the 2x2 inequality: coefficients (1/2, 1/2, 1/2, -1/2), rhs 1
ineq = chsh()
bound = classical_bound(ineq)
print(f"2x2 classical bound: {bound.max_value} at {bound.argmax.values}")
print(f"   checked {bound.evaluations} sign assignments")

report = quantum_value(ineq, chsh_settings())
print(f"2x2 quantum value:   {report.value:.12f} = sqrt(2) "
      f"(violated: {report.violated})")

# the triangle: -X1X2 - X1X3 - X2X3 <= 1 on one party's variables
tri = triangle()
bound = classical_bound(tri)
print(f"\ntriangle classical bound: {bound.max_value} at {bound.argmax.values}")

# three coplanar directions 120 degrees apart
ring = planar_ring(3)
report = quantum_value(tri, ring)
print(f"triangle quantum value:   {report.value:.12f} = 3/2 "
      f"(violated: {report.violated})")
print(f"   beats sqrt(2) = {math.sqrt(2):.12f}, the planar bipartite ceiling")

# the transport matters: raw singlet products on one side give -3/2
raw = quantum_value(tri, ring, transported=False)
print(f"   without transport the raw singlet value is {raw.value:.12f}")

# the bound is tight: every sign assignment stays at or below 1
worst = max(
    evaluate(tri, type(bound.argmax)(values=(1, s2, s3)))
    for s2 in (1, -1)
    for s3 in (1, -1)
)
print(f"   best deterministic assignment reaches {worst}")
