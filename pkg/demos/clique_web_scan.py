"""Clique-web inequalities and their bouquet violation curves.

A web on p vertices plus a q-clique gives an inequality with exact
classical bound q(r+1).  Putting the p ring vectors on a cone of
opening angle theta around the q poles produces a one-parameter value
curve; the (12, 3, 4) member peaks at 1.5209, above the 1.5163 upper
bound for the rank-3 constant.
"""

import math

from bellbound import (
    WebSpec,
    antiweb_edges,
    bouquet,
    classical_bound,
    clique_web_inequality,
    quantum_value,
    scan_theta,
    v2k1_formula,
    v12_formula,
    web_edges,
)

# the web W(12, 4): offsets 5..7 on a 12-cycle, 18 edges
spec = WebSpec(12, 3, 4)
web = web_edges(spec)
anti = antiweb_edges(spec)
print(f"web({spec.p}, {spec.r}): {len(web.edges)} edges, "
      f"antiweb {len(anti.edges)} edges, together K_{spec.p}")

# the inequality on 15 variables, bound q(r+1) = 15
ineq = clique_web_inequality(spec)
bound = classical_bound(ineq)
print(f"clique-web (12,3,4) classical bound: {bound.max_value} "
      f"over {bound.evaluations} assignments")

# evaluate the bouquet at the reported peak angle
theta = 0.32477 * math.pi
report = quantum_value(ineq, bouquet(spec.p, spec.q, theta))
print(f"\nbouquet value at theta = 0.32477 pi: {report.value:.10f}")
print(f"closed form agrees:                  {v12_formula(theta):.10f}")

# scan the whole curve and refine the peak
scan = scan_theta("bouquet12")
lo, hi = scan.violation_interval
print(f"scan peak {scan.best_value:.10f} at theta = {scan.best_theta:.10f}")
print(f"violation window: theta in ({lo:.6f}, {hi:.6f})")
print(f"peak beats the rank-3 upper bound 1.5163: {scan.best_value > 1.5163}")

# the (2k+1)-vector family approaches 2cos(t) - cos(2t), peak 3/2
for k in (5, 50, 500):
    scan = scan_theta("bouquet2k1", k=k)
    print(f"k = {k:4d}: peak {scan.best_value:.8f} at theta {scan.best_theta:.6f}")
print(f"limit value at pi/3 for k = 1000: {v2k1_formula(1000, math.pi / 3):.8f}")
