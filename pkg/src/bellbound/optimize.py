"""Search over measurement directions and coefficient instances.

Two searches: a one-parameter scan of the bouquet opening angle using
the closed-form value curves, and a block-coordinate ascent over unit
vectors for arbitrary pairwise coefficients.  The ascent's fixed points
are the stationary configurations of sum a_ij x_i . x_j on the product
of spheres; the ratio of the vector optimum to the sign optimum is the
quantity the Grothendieck constants bound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import enumeration
from .enumeration import DEFAULT_GUARD
from .errors import ParameterError
from .quantum import v12_formula, v2k1_formula

FAMILY_BOUQUET12 = "bouquet12"
FAMILY_BOUQUET2K1 = "bouquet2k1"

GOLDEN_RATIO = (math.sqrt(5.0) - 1.0) / 2.0
THETA_TOLERANCE = 1e-10
ASCENT_TOLERANCE = 1e-10
ASCENT_SWEEP_CAP = 2000
RATIO_VIOLATION_TOL = 1e-9


@dataclass(frozen=True)
class GrothendieckBounds:
    """Known bounds on the ratio constants, for reporting context."""

    kg2: float
    kg3_lower: float
    kg3_upper: float
    kg_lower: float
    kg_upper: float


GROTHENDIECK = GrothendieckBounds(
    kg2=math.sqrt(2.0),
    kg3_lower=math.sqrt(2.0),
    kg3_upper=1.5163,
    kg_lower=1.6770,
    kg_upper=math.pi / (2.0 * math.log(1.0 + math.sqrt(2.0))),
)


def golden_section_max(f, lo: float, hi: float, tol: float = THETA_TOLERANCE):
    """Maximize a unimodal function on [lo, hi] to width tol."""
    a, b = lo, hi
    c = b - GOLDEN_RATIO * (b - a)
    d = a + GOLDEN_RATIO * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN_RATIO * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN_RATIO * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    return x, f(x)


def _bisect_crossing(f, lo: float, hi: float, tol: float = THETA_TOLERANCE) -> float:
    """Locate a sign change of f - 1 bracketed by [lo, hi]."""
    flo = f(lo) - 1.0
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2.0
        fm = f(mid) - 1.0
        if (flo > 0.0) == (fm > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2.0


@dataclass
class ThetaScanResult:
    """Grid scan of a bouquet value curve, refined around the peak."""

    family: str
    k: int | None
    grid: tuple[tuple[float, float], ...]
    best_theta: float
    best_value: float
    violation_interval: tuple[float, float] | None


def scan_theta(
    family: str,
    k: int | None = None,
    grid_points: int = 1024,
    tol: float = THETA_TOLERANCE,
) -> ThetaScanResult:
    """Scan the opening angle over (0, pi/2) for one bouquet family.

    The best grid point is refined by golden-section search, and the
    region where the value exceeds 1 is reported with its endpoints
    bisected to the same tolerance.  The curves open at exactly 1 as
    theta goes to 0, so a violation already present at the first grid
    point reports 0 as its lower endpoint.
    """
    if family == FAMILY_BOUQUET12:
        if k is not None:
            raise ParameterError("the 12-vector family takes no k")
        f = v12_formula
    elif family == FAMILY_BOUQUET2K1:
        if k is None or k < 1:
            raise ParameterError("the (2k+1)-vector family needs k >= 1")
        f = lambda theta: v2k1_formula(k, theta)
    else:
        raise ParameterError(f"unknown family {family!r}")
    if grid_points < 10:
        raise ParameterError("need at least 10 grid points")

    hi_edge = math.pi / 2.0
    step = hi_edge / (grid_points + 1)
    thetas = [(i + 1) * step for i in range(grid_points)]
    values = [f(t) for t in thetas]
    grid = tuple(zip(thetas, values))

    best = max(range(grid_points), key=lambda i: values[i])
    lo = thetas[best - 1] if best > 0 else step * 1e-6
    hi = thetas[best + 1] if best < grid_points - 1 else hi_edge - step * 1e-6
    best_theta, best_value = golden_section_max(f, lo, hi, tol)
    if values[best] > best_value:
        best_theta, best_value = thetas[best], values[best]

    interval = None
    above = [v > 1.0 for v in values]
    if any(above):
        first = above.index(True)
        last = len(above) - 1 - above[::-1].index(True)
        lo_end = 0.0
        if first > 0:
            lo_end = _bisect_crossing(f, thetas[first - 1], thetas[first], tol)
        hi_end = hi_edge
        if last < grid_points - 1:
            hi_end = _bisect_crossing(f, thetas[last], thetas[last + 1], tol)
        interval = (lo_end, hi_end)

    return ThetaScanResult(
        family=family,
        k=k,
        grid=grid,
        best_theta=best_theta,
        best_value=best_value,
        violation_interval=interval,
    )


@dataclass
class GramAscentResult:
    """Best configuration found by block-coordinate ascent."""

    objective: float
    vectors: np.ndarray
    converged: bool
    sweeps: int
    monotone: bool
    restart_objectives: tuple[float, ...]


def _symmetric_matrix(n: int, coefficients: dict[tuple[int, int], float]) -> np.ndarray:
    a = np.zeros((n, n))
    for (i, j), w in coefficients.items():
        if not (0 <= i < j < n):
            raise ParameterError(f"bad pair ({i}, {j}) for {n} variables")
        a[i, j] = w
        a[j, i] = w
    return a


def gram_ascent(
    coefficients: dict[tuple[int, int], float],
    n: int,
    dim: int,
    restarts: int = 32,
    seed: int = 0,
    tol: float = ASCENT_TOLERANCE,
    sweep_cap: int = ASCENT_SWEEP_CAP,
) -> GramAscentResult:
    """Maximize sum a_ij x_i . x_j over unit vectors in R^dim.

    Round-robin updates x_i to the normalized gradient sum a_ij x_j,
    which can only raise the objective (the terms containing x_i are
    linear in it and everything else is untouched); zero gradients keep
    the current vector.  Restart streams are split from the seed per
    restart index, so results do not depend on evaluation order.
    """
    if dim < 1 or dim > n:
        raise ParameterError(f"dim must lie in 1..{n}, got {dim}")
    if restarts < 1:
        raise ParameterError("need at least one restart")
    a = _symmetric_matrix(n, coefficients)

    def objective(x: np.ndarray) -> float:
        return 0.5 * float(np.sum(a * (x @ x.T)))

    best: GramAscentResult | None = None
    monotone = True
    restart_objectives = []
    children = np.random.SeedSequence(seed).spawn(restarts)
    for child in children:
        rng = np.random.default_rng(child)
        x = rng.normal(size=(n, dim))
        norms = np.linalg.norm(x, axis=1)
        degenerate = norms < 1e-12
        norms[degenerate] = 1.0
        x /= norms[:, None]
        x[degenerate] = np.eye(1, dim)[0]

        value = objective(x)
        converged = False
        sweeps = 0
        for sweeps in range(1, sweep_cap + 1):
            for i in range(n):
                g = a[i] @ x
                norm = np.linalg.norm(g)
                if norm > 1e-14:
                    x[i] = g / norm
            new_value = objective(x)
            if new_value < value - 1e-12:
                monotone = False
            improvement = new_value - value
            value = new_value
            if improvement < tol:
                converged = True
                break
        restart_objectives.append(value)
        if best is None or value > best.objective:
            best = GramAscentResult(
                objective=value,
                vectors=x.copy(),
                converged=converged,
                sweeps=sweeps,
                monotone=True,
                restart_objectives=(),
            )

    assert best is not None
    return GramAscentResult(
        objective=best.objective,
        vectors=best.vectors,
        converged=best.converged,
        sweeps=best.sweeps,
        monotone=monotone,
        restart_objectives=tuple(restart_objectives),
    )


@dataclass
class RatioProbeSummary:
    """Vector-to-sign optimum ratios over a set of coefficient instances."""

    n: int
    dim: int
    instances: int
    seed: int | None
    exhaustive: bool
    ratios: tuple[float, ...]
    max_ratio: float
    mean_ratio: float
    max_coefficients: dict[tuple[int, int], float]
    violating_count: int
    bounds: GrothendieckBounds


def _instance_ratio(
    coefficients: dict[tuple[int, int], float],
    n: int,
    dim: int,
    restarts: int,
    seed: int,
    guard: int,
) -> float:
    sign_best, _, _ = enumeration.max_over_signs(
        n, [(i, j, w) for (i, j), w in coefficients.items()], guard=guard
    )
    if sign_best <= 0.0:
        raise ParameterError("instance has nonpositive sign optimum; ratio undefined")
    ascent = gram_ascent(coefficients, n, dim, restarts=restarts, seed=seed)
    return ascent.objective / sign_best


def ratio_probe(
    n: int,
    instances: int = 100,
    seed: int = 0,
    dim: int | None = None,
    restarts: int = 16,
    guard: int = DEFAULT_GUARD,
    exhaustive: bool = False,
    bipartite_planar: bool = False,
) -> RatioProbeSummary:
    """Ratios for random (or exhaustively enumerated) +-1 coefficients.

    With bipartite_planar the instances put coefficients only across a
    half/half split of the variables and the ascent runs in the plane,
    the regime where the ratio is bounded by kg2 = sqrt(2).  Exhaustive
    mode walks every +-1 pattern on the n(n-1)/2 pairs instead of
    sampling; each sampled instance draws from a stream split per
    instance index.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if bipartite_planar:
        half = n // 2
        pairs = [(i, j) for i in range(half) for j in range(half, n)]
        dim = 2
    if dim is None:
        dim = n

    patterns: list[dict[tuple[int, int], float]] = []
    if exhaustive:
        for signs in itertools.product([1.0, -1.0], repeat=len(pairs)):
            patterns.append(dict(zip(pairs, signs)))
        seed_values = [seed] * len(patterns)
    else:
        children = np.random.SeedSequence(seed).spawn(instances)
        seed_values = []
        for child in children:
            rng = np.random.default_rng(child)
            signs = rng.integers(0, 2, size=len(pairs)) * 2.0 - 1.0
            patterns.append(dict(zip(pairs, signs)))
            seed_values.append(int(rng.integers(0, 2**31 - 1)))

    ratios = []
    max_ratio = -math.inf
    max_coefficients: dict[tuple[int, int], float] = {}
    for coeffs, inst_seed in zip(patterns, seed_values):
        ratio = _instance_ratio(coeffs, n, dim, restarts, inst_seed, guard)
        ratios.append(ratio)
        if ratio > max_ratio:
            max_ratio = ratio
            max_coefficients = dict(coeffs)

    return RatioProbeSummary(
        n=n,
        dim=dim,
        instances=len(patterns),
        seed=None if exhaustive else seed,
        exhaustive=exhaustive,
        ratios=tuple(ratios),
        max_ratio=max_ratio,
        mean_ratio=sum(ratios) / len(ratios),
        max_coefficients=max_coefficients,
        violating_count=sum(1 for r in ratios if r > 1.0 + RATIO_VIOLATION_TOL),
        bounds=GROTHENDIECK,
    )
