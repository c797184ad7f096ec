"""Explicit operators reproducing any unit-vector correlation matrix.

Anticommuting generators turn each unit vector x into an observable
A = sum_k x_k g_k with A^2 = I; on the maximally entangled state the
joint correlations of A_i with B_j = A_j^T equal the Gram matrix
x_i . x_j exactly, with all marginals zero.
"""

import numpy as np

from bellbound import (
    bouquet,
    chsh_settings,
    clifford_generators,
    realize,
    verify_realization,
)

np.set_printoptions(precision=4, suppress=True)

# three generators acting on two qubits
gens = clifford_generators(3)
print(f"3 generators of dimension {gens[0].shape[0]}")
print(f"g0 g1 + g1 g0 = 0: {np.allclose(gens[0] @ gens[1] + gens[1] @ gens[0], 0)}")
print(f"g0^2 = I:          {np.allclose(gens[0] @ gens[0], np.eye(4))}")

# realize the standard 2x2 measurement directions
config = chsh_settings()
realization = realize(config)
print(f"\nrealized {len(config)} vectors on dimension {realization.dimension}")
print("correlation matrix:")
print(realization.correlation_matrix())
print("gram matrix:")
print(config.gram())

report = verify_realization(realization, config)
print(f"\nworst deviations: correlation {report.correlation:.2e}, "
      f"involution {report.involution:.2e}, marginals {report.marginals:.2e}")
print(f"all within {report.tolerance}: {report.passed}")

# a bigger configuration works the same way
config = bouquet(12, 3, 1.02)
report = verify_realization(realize(config), config)
print(f"\n15-vector bouquet: dimension {realize(config).dimension}, "
      f"passed: {report.passed}")
