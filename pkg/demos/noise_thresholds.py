"""How much white noise a violation survives.

Mixing the singlet with noise at visibility eta scales correlations by
eta and breaks the perfect anticorrelations the transport relies on.
The surviving violation of a bound-1 inequality is
eta |Q| - (1 - eta) N, with N the minimum coefficient weight any
two-block partition keeps inside a block; the critical visibility is
(N + 1) / (N + |Q|).
"""

import math

from bellbound import (
    WebSpec,
    chsh,
    chsh_embedded,
    chsh_settings,
    cliqueweb_threshold,
    golden_section_max,
    noise_quantity,
    noisy_violation,
    partitioned_threshold,
    planar_ring,
    symmetry_band,
    triangle,
    triangle_threshold,
    v2k1_formula,
)

# imperfect anticorrelation leaves a band instead of a point
lo, hi = symmetry_band(0.8, -0.4)
print(f"eta = 0.8, E(XY) = -0.4: same-side product lies in [{lo:.2f}, {hi:.2f}]")
lo, hi = symmetry_band(1.0, -0.4)
print(f"eta = 1.0 collapses it to the transported point [{lo:.2f}, {hi:.2f}]")

# the triangle needs eta > 0.8
report = triangle_threshold()
print(f"\ntriangle threshold: {report.eta_threshold} "
      f"(Q = {report.quantum_sum}, N = {report.noise_quantity})")
for eta in (0.75, 0.8, 0.85, 0.9, 1.0):
    value = noisy_violation(triangle(), planar_ring(3), eta)
    marker = "violated" if value > 1.0 + 1e-12 else "classical"
    print(f"  eta = {eta:4.2f}: value {value:.6f}  {marker}")

# the 2x2 family needs only eta > 1/sqrt(2) since its support is bipartite
print(f"\n2x2 noise quantity: {noise_quantity(chsh()).value}")
ineq, config = chsh_embedded()
report = partitioned_threshold(ineq, config)
print(f"embedded 2x2 threshold: {report.eta_threshold:.12f} = 1/sqrt(2)")
report = partitioned_threshold(chsh(), chsh_settings())
print(f"bipartite 2x2 threshold: {report.eta_threshold:.12f}")

# the large clique-web members come back to 0.8 despite the bigger violation
k = 500
_, peak = golden_section_max(lambda t: v2k1_formula(k, t), 0.5, 1.5)
report = cliqueweb_threshold(WebSpec(2 * k + 1, 2, k - 1), peak)
print(f"\n(2k+1)-family at k = {k}: peak value {peak:.8f}, "
      f"threshold {report.eta_threshold:.8f}")
print(f"separable below 1/3, undetected by 2x2 forms below "
      f"{1 / math.sqrt(2):.6f}, these need {report.eta_threshold:.6f}")
