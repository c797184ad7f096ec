"""Correlation polytopes: membership certificates and exact facet checks.

The singlet correlations of the standard 2x2 settings sit strictly
outside the polytope of classical correlations, at distance sqrt(2)-1;
the projection returns a separating hyperplane checked against every
vertex.  Facets are decided in exact integer arithmetic.
"""

import math

import numpy as np

from bellbound import (
    PolytopeSpec,
    ambient_coefficients,
    bell_to_cut,
    chsh,
    cut_to_bell,
    facet_check,
    membership,
    triangle,
    vertices,
)

s = math.sqrt(2.0) / 2.0

# the 2x2 polytope has 8 vertices in R^4
spec = PolytopeSpec.bell_bipartite(2, 2)
verts = vertices(spec)
print(f"bell(2,2): {verts.shape[0]} vertices in R^{spec.ambient_dim}")

# the singlet point and its certificate
point = np.array([s, s, s, -s])
cert = membership(spec, point)
print(f"singlet point inside: {cert.inside}, distance {cert.distance:.12f}")
print(f"  sqrt(2) - 1       = {math.sqrt(2) - 1:.12f}")
print(f"  separating normal {cert.separating.normal}, offset {cert.separating.offset}")
margins = verts @ cert.separating.normal
print(f"  every vertex below the offset: {bool(np.all(margins <= cert.separating.offset + 1e-12))}")

# vertices themselves are inside at distance zero
inside = membership(spec, verts[3].astype(float))
print(f"a vertex: inside {inside.inside}, distance {inside.distance:.2e}")

# the 2x2 inequality is a facet: its tight vertices span codimension one
vec, rhs = ambient_coefficients(spec, chsh())
report = facet_check(spec, vec, rhs)
print(f"\n2x2 inequality on bell(2,2): valid {report.valid}, "
      f"tight {report.tight_count}, affine rank {report.affine_rank} "
      f"of ambient {report.ambient_dim} -> facet {report.is_facet}")

# same exact machinery on the one-party polytope
spec3 = PolytopeSpec.bell(3)
vec, rhs = ambient_coefficients(spec3, triangle())
report = facet_check(spec3, vec, rhs)
print(f"triangle on bell(3):         valid {report.valid}, "
      f"tight {report.tight_count}, affine rank {report.affine_rank} "
      f"of ambient {report.ambient_dim} -> facet {report.is_facet}")

# a valid inequality that is not a facet: X0X1 <= 1
report = facet_check(spec3, np.array([1.0, 0.0, 0.0]), 1.0)
print(f"X0X1 <= 1 on bell(3):        valid {report.valid}, "
      f"affine rank {report.affine_rank} -> facet {report.is_facet}")

# the +-1 and 0/1 coordinates are a linear change of variables
u = np.array([-0.5, -0.5, -0.5])
print(f"\ncut_to_bell(bell_to_cut(u)) == u: {np.allclose(cut_to_bell(bell_to_cut(u)), u, atol=0)}")
cut_point = bell_to_cut(u)
print(f"bell point {u} maps to cut point {cut_point}")
