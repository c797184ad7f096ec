"""Correlation polytopes: vertices, membership, and exact facet checks.

Four families, each the convex hull of finitely many deterministic
vertices:

  bell(n)            pairwise products X_i X_j, i < j, in R^(n(n-1)/2)
  bell(n, m)         cross products X_i Y_j in R^(nm)
  cut(n)             binary xors a_i ^ a_j over the same pair order
  cor(n)             products b_i b_j for i <= j, diagonal included

Membership is decided by projecting onto the hull with Wolfe's
min-norm-point algorithm (a support-oracle method: each iteration only
asks which vertex is extreme in a direction); outside points get a
separating hyperplane that is verified against every vertex before the
certificate is returned.  Facet checks are exact: coefficients are
rationalized, validity and tightness are decided in integer arithmetic,
and the affine rank of the tight set is computed by fraction-free
elimination.  Bipartite cut and correlation variants are not provided;
nothing downstream consumes them.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConvergenceError, DimensionError, ParameterError, ResourceLimitError
from .inequalities import (
    MODE_BIPARTITE,
    MODE_COMPLETE,
    CutInequality,
    PairwiseInequality,
)

KIND_BELL = "bell"
KIND_BELL_BIPARTITE = "bell_bipartite"
KIND_CUT = "cut"
KIND_COR = "cor"

VERTEX_GUARD = 16
MEMBERSHIP_TOLERANCE = 1e-7
MEMBERSHIP_ITERATION_CAP = 100_000


@dataclass(frozen=True)
class PolytopeSpec:
    """One of the four polytope families, with its size parameters."""

    kind: str
    n: int
    m: int = 0

    def __post_init__(self):
        if self.kind not in (KIND_BELL, KIND_BELL_BIPARTITE, KIND_CUT, KIND_COR):
            raise ParameterError(f"unknown polytope kind {self.kind!r}")
        if self.kind == KIND_BELL_BIPARTITE:
            if self.n < 1 or self.m < 1:
                raise DimensionError("bipartite polytope needs n >= 1 and m >= 1")
        else:
            if self.n < 2:
                raise DimensionError("one-sided polytopes need n >= 2")
            if self.m != 0:
                raise DimensionError("m is only meaningful for the bipartite kind")

    @classmethod
    def bell(cls, n: int) -> "PolytopeSpec":
        return cls(KIND_BELL, n)

    @classmethod
    def bell_bipartite(cls, n: int, m: int) -> "PolytopeSpec":
        return cls(KIND_BELL_BIPARTITE, n, m)

    @classmethod
    def cut(cls, n: int) -> "PolytopeSpec":
        return cls(KIND_CUT, n)

    @classmethod
    def cor(cls, n: int) -> "PolytopeSpec":
        return cls(KIND_COR, n)

    @property
    def ambient_dim(self) -> int:
        if self.kind == KIND_BELL_BIPARTITE:
            return self.n * self.m
        if self.kind == KIND_COR:
            return self.n * (self.n + 1) // 2
        return self.n * (self.n - 1) // 2

    def coordinate_pairs(self) -> list[tuple[int, int]]:
        """Index pairs in the lexicographic order of the coordinates."""
        if self.kind == KIND_BELL_BIPARTITE:
            return [(i, j) for i in range(self.n) for j in range(self.m)]
        if self.kind == KIND_COR:
            return [(i, j) for i in range(self.n) for j in range(i, self.n)]
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]


def vertices(spec: PolytopeSpec, guard: int = VERTEX_GUARD) -> np.ndarray:
    """All vertices as an integer array, one row per vertex.

    Sign polytopes are deduplicated by pinning the first variable
    (global flips fix every product), the cut polytope by pinning the
    first bit (complements give the same cut); cor keeps all 2^n
    assignments since the diagonal separates them.
    """
    total = spec.n + spec.m if spec.kind == KIND_BELL_BIPARTITE else spec.n
    if total > guard:
        raise ResourceLimitError(
            f"{total} variables exceeds the guard of {guard}; "
            "raise the guard explicitly for a deliberate larger run"
        )
    pairs = spec.coordinate_pairs()
    rows = []
    if spec.kind == KIND_BELL:
        for bits in itertools.product([1, -1], repeat=spec.n - 1):
            x = (1,) + bits
            rows.append([x[i] * x[j] for i, j in pairs])
    elif spec.kind == KIND_BELL_BIPARTITE:
        for bits in itertools.product([1, -1], repeat=spec.n + spec.m - 1):
            x = (1,) + bits[: spec.n - 1]
            y = bits[spec.n - 1 :]
            rows.append([x[i] * y[j] for i, j in pairs])
    elif spec.kind == KIND_CUT:
        for bits in itertools.product([0, 1], repeat=spec.n - 1):
            a = (0,) + bits
            rows.append([a[i] ^ a[j] for i, j in pairs])
    else:
        for b in itertools.product([0, 1], repeat=spec.n):
            rows.append([b[i] * b[j] for i, j in pairs])
    return np.array(rows, dtype=np.int64)


# ============================================================================
# membership
# ============================================================================


@dataclass
class SeparatingHyperplane:
    """normal . v <= offset for every vertex, normal . point > offset."""

    normal: np.ndarray
    offset: float


@dataclass
class MembershipCertificate:
    """Outcome of a hull membership query.

    distance is the Euclidean distance from the query to the hull,
    witness is the nearest hull point found, and separating is present
    exactly when the query is outside.
    """

    inside: bool
    distance: float
    witness: np.ndarray
    separating: SeparatingHyperplane | None
    iterations: int

    def to_json_dict(self) -> dict:
        sep = None
        if self.separating is not None:
            sep = {
                "normal": [float(c) for c in self.separating.normal],
                "offset": float(self.separating.offset),
            }
        return {"inside": self.inside, "distance": float(self.distance), "separating": sep}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)


def _affine_least_squares(points: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Weights summing to one that bring the combination nearest target."""
    k = points.shape[0]
    system = np.zeros((k + 1, k + 1))
    system[:k, :k] = points @ points.T
    system[:k, k] = 1.0
    system[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[:k] = points @ target
    rhs[k] = 1.0
    solution = np.linalg.lstsq(system, rhs, rcond=None)[0]
    return solution[:k]


def _project_to_hull(point: np.ndarray, verts: np.ndarray, cap: int):
    """Wolfe's min-norm-point projection of point onto conv(verts).

    Maintains a corral of vertices and its convex weights; each major
    cycle adds the vertex most extreme in the direction of the residual
    and minor cycles restore feasibility of the affine minimizer.
    Returns (projection, iterations).
    """
    distances = ((verts - point) ** 2).sum(axis=1)
    corral = [int(np.argmin(distances))]
    weights = np.array([1.0])
    # absolute duality-gap cutoff; coordinates here are O(1) integers
    eps = 1e-12
    for iteration in range(1, cap + 1):
        x = weights @ verts[corral]
        g = point - x
        scores = verts @ g
        candidate = int(np.argmax(scores))
        if scores[candidate] <= g @ x + eps:
            return x, iteration
        if candidate not in corral:
            corral.append(candidate)
            weights = np.append(weights, 0.0)
        while True:
            affine = _affine_least_squares(verts[corral].astype(float), point)
            if (affine >= -1e-14).all():
                weights = np.clip(affine, 0.0, None)
                weights /= weights.sum()
                break
            negative = affine < -1e-14
            steps = [
                weights[t] / (weights[t] - affine[t])
                for t in range(len(corral))
                if negative[t]
            ]
            theta = min(steps)
            weights = (1.0 - theta) * weights + theta * affine
            weights[weights < 1e-15] = 0.0
            keep = weights > 0.0
            corral = [c for c, k in zip(corral, keep) if k]
            weights = weights[keep]
            weights /= weights.sum()
    raise ConvergenceError(
        f"hull projection did not converge within {cap} iterations"
    )


def membership(
    spec: PolytopeSpec,
    point: np.ndarray,
    tolerance: float = MEMBERSHIP_TOLERANCE,
    max_iterations: int = MEMBERSHIP_ITERATION_CAP,
    guard: int = VERTEX_GUARD,
) -> MembershipCertificate:
    """Decide whether a point lies in the polytope.

    Outside points come with a unit separating normal, with the offset
    set to the exhaustive maximum of the normal over all vertices, so
    the certificate is checked against the whole vertex set rather than
    trusted from the projection.
    """
    point = np.asarray(point, dtype=float)
    if point.shape != (spec.ambient_dim,):
        raise DimensionError(
            f"point has shape {point.shape}, ambient dimension is {spec.ambient_dim}"
        )
    verts = vertices(spec, guard=guard).astype(float)
    projection, iterations = _project_to_hull(point, verts, max_iterations)
    distance = float(np.linalg.norm(point - projection))
    if distance <= tolerance:
        return MembershipCertificate(
            inside=True,
            distance=distance,
            witness=projection,
            separating=None,
            iterations=iterations,
        )
    normal = (point - projection) / distance
    offset = float(np.max(verts @ normal))
    margin = float(normal @ point - offset)
    if margin <= 0.0:
        raise ConvergenceError(
            f"projection failed to separate: margin {margin:.3e} at distance {distance:.3e}"
        )
    return MembershipCertificate(
        inside=False,
        distance=distance,
        witness=projection,
        separating=SeparatingHyperplane(normal=normal, offset=offset),
        iterations=iterations,
    )


# ============================================================================
# exact facet checks
# ============================================================================


@dataclass
class FacetReport:
    """Validity and face dimension of an inequality on a polytope."""

    valid: bool
    tight_count: int
    affine_rank: int
    ambient_dim: int

    @property
    def is_facet(self) -> bool:
        return self.valid and self.affine_rank == self.ambient_dim - 1


def ambient_coefficients(
    spec: PolytopeSpec, ineq: PairwiseInequality | CutInequality
) -> tuple[np.ndarray, float]:
    """Spread an inequality's coefficients over the polytope coordinates."""
    if isinstance(ineq, CutInequality):
        if spec.kind != KIND_CUT or spec.n != ineq.n:
            raise DimensionError("cut inequality does not match this polytope")
        coeffs = ineq.coefficients
    elif ineq.mode == MODE_COMPLETE:
        if spec.kind != KIND_BELL or spec.n != ineq.n_left:
            raise DimensionError("complete-mode inequality does not match this polytope")
        coeffs = ineq.coefficients
    elif ineq.mode == MODE_BIPARTITE:
        if spec.kind != KIND_BELL_BIPARTITE or (spec.n, spec.m) != (
            ineq.n_left,
            ineq.n_right,
        ):
            raise DimensionError("bipartite inequality does not match this polytope")
        coeffs = ineq.coefficients
    else:
        raise ParameterError(f"unsupported inequality mode {ineq.mode!r}")
    vector = np.zeros(spec.ambient_dim)
    index = {pair: k for k, pair in enumerate(spec.coordinate_pairs())}
    for pair, w in coeffs.items():
        vector[index[pair]] = w
    return vector, float(ineq.rhs)


def _integer_rank(rows: list[list[int]], stop_at: int) -> int:
    """Exact rank of integer rows by fraction-free elimination."""
    basis: list[tuple[int, list[int]]] = []
    for row in rows:
        row = list(row)
        for pivot_col, pivot_row in basis:
            if row[pivot_col] != 0:
                p = pivot_row[pivot_col]
                f = row[pivot_col]
                row = [p * a - f * b for a, b in zip(row, pivot_row)]
                g = 0
                for a in row:
                    g = math.gcd(g, a)
                if g > 1:
                    row = [a // g for a in row]
        lead = next((c for c, a in enumerate(row) if a != 0), None)
        if lead is not None:
            basis.append((lead, row))
            basis.sort(key=lambda t: t[0])
            if len(basis) >= stop_at:
                break
    return len(basis)


def facet_check(
    spec: PolytopeSpec,
    coefficients: np.ndarray,
    rhs: float,
    guard: int = VERTEX_GUARD,
) -> FacetReport:
    """Exact validity and facet decision for coefficients . v <= rhs.

    Floats are binary rationals, so rationalizing them and scaling by
    the common denominator reduces everything to integer arithmetic:
    validity and the tight set are decided exactly, and the affine rank
    of the tight vertices decides whether the face has codimension one.
    """
    coefficients = np.asarray(coefficients, dtype=float)
    if coefficients.shape != (spec.ambient_dim,):
        raise DimensionError(
            f"coefficient vector has shape {coefficients.shape}, "
            f"ambient dimension is {spec.ambient_dim}"
        )
    fractions = [Fraction(float(c)) for c in coefficients]
    rhs_fraction = Fraction(float(rhs))
    scale = 1
    for f in fractions + [rhs_fraction]:
        scale = scale * f.denominator // math.gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fractions]
    rhs_int = int(rhs_fraction * scale)

    verts = vertices(spec, guard=guard)
    values = [sum(c * int(v) for c, v in zip(ints, row)) for row in verts.tolist()]
    valid = all(v <= rhs_int for v in values)
    tight = [row for row, v in zip(verts.tolist(), values) if v == rhs_int]
    if not tight:
        return FacetReport(
            valid=valid, tight_count=0, affine_rank=-1, ambient_dim=spec.ambient_dim
        )
    base = tight[0]
    diffs = [[a - b for a, b in zip(row, base)] for row in tight[1:]]
    rank = _integer_rank(diffs, stop_at=spec.ambient_dim)
    return FacetReport(
        valid=valid,
        tight_count=len(tight),
        affine_rank=rank,
        ambient_dim=spec.ambient_dim,
    )


# ============================================================================
# coordinate maps
# ============================================================================


def cut_to_bell(point: np.ndarray) -> np.ndarray:
    """Coordinatewise v = 1 - 2c, sending cut(n) onto bell(n)."""
    return 1.0 - 2.0 * np.asarray(point, dtype=float)


def bell_to_cut(point: np.ndarray) -> np.ndarray:
    """Inverse map c = (1 - v) / 2."""
    return (1.0 - np.asarray(point, dtype=float)) / 2.0


def bell_embed(point: np.ndarray, n: int) -> np.ndarray:
    """Embed a bell(n) point into bell(n, n) coordinates.

    The image has v_ij = v_ji = u_{ij} off the diagonal and v_ii = 1;
    a point outside bell(n) stays outside bell(n, n) because any
    representation of the image forces X = Y on every vertex used.
    """
    point = np.asarray(point, dtype=float)
    expected = n * (n - 1) // 2
    if point.shape != (expected,):
        raise DimensionError(f"expected {expected} coordinates for n = {n}")
    pairs = PolytopeSpec.bell(n).coordinate_pairs()
    image = np.eye(n)
    for k, (i, j) in enumerate(pairs):
        image[i, j] = point[k]
        image[j, i] = point[k]
    return image.reshape(n * n)
