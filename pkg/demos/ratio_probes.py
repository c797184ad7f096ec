"""Vector optima versus sign optima over random coefficient patterns.

For any coefficients the unit-vector maximum of sum a_ij x_i . x_j is
at least the +-1 maximum, and the worst-case ratio measures how much
entangled measurements can gain.  Across a bipartite split in the
plane the ratio never passes sqrt(2); over the complete graph it
already reaches 3/2 at three variables and keeps growing slowly.
"""

import math

from bellbound import GROTHENDIECK, gram_ascent, ratio_probe

# coordinate ascent on the triangle coefficients reaches 3/2 in the plane
result = gram_ascent({(0, 1): -1.0, (0, 2): -1.0, (1, 2): -1.0}, 3, dim=2, restarts=8)
print(f"triangle ascent: objective {result.objective:.12f} "
      f"(converged {result.converged}, monotone {result.monotone}, "
      f"{result.sweeps} sweeps)")

# all 8 sign patterns on three variables: frustrated triangles give 1.5
summary = ratio_probe(3, exhaustive=True, dim=3)
print(f"\nn = 3 exhaustive: max ratio {summary.max_ratio:.9f} "
      f"over {summary.instances} patterns, "
      f"{summary.violating_count} above 1")
print(f"  worst pattern {summary.max_coefficients}")

# random patterns at n = 5 in full dimension
summary = ratio_probe(5, instances=100, seed=20260818, dim=5)
print(f"\nn = 5 sampled:    max ratio {summary.max_ratio:.9f}, "
      f"mean {summary.mean_ratio:.6f}, "
      f"{summary.violating_count}/{summary.instances} above 1")

# bipartite coefficients with planar vectors stay below sqrt(2)
summary = ratio_probe(6, instances=200, seed=11, restarts=8, bipartite_planar=True)
print(f"\nplanar bipartite: max ratio {summary.max_ratio:.9f} "
      f"<= sqrt(2) = {math.sqrt(2):.9f}")

# known bounds on the limiting constants, for context
print(f"\nreference constants: rank 2 = {GROTHENDIECK.kg2:.6f}, "
      f"rank 3 in [{GROTHENDIECK.kg3_lower:.6f}, {GROTHENDIECK.kg3_upper}], "
      f"general in [{GROTHENDIECK.kg_lower}, {GROTHENDIECK.kg_upper:.6f}]")
