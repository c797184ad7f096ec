"""Pairwise correlation inequalities over +-1 variables.

An inequality is a linear form in products of two-valued variables,
sum of c_ij * X_i * X_j (one party, "complete" mode) or
sum of c_ij * X_i * Y_j (two parties, "bipartite" mode), bounded by a
right-hand side.  Local hidden-variable models can only produce
correlations inside the convex hull of deterministic sign assignments,
so the tight classical bound is the maximum of the form over that
finite cube, computed here by exact enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from . import enumeration
from .enumeration import DEFAULT_GUARD
from .errors import DimensionError, ParameterError

MODE_COMPLETE = "complete"
MODE_BIPARTITE = "bipartite"


@dataclass(frozen=True)
class SignAssignment:
    """A deterministic +-1 value for every variable."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not all(v in (-1, 1) for v in self.values):
            raise ParameterError("assignment values must be -1 or +1")

    def __len__(self):
        return len(self.values)


@dataclass
class PairwiseInequality:
    """A bounded linear form in pairwise products.

    Attributes:
        mode: MODE_COMPLETE (pairs X_i X_j, i < j) or MODE_BIPARTITE
            (pairs X_i Y_j across the two blocks).
        n_left: number of X variables.
        n_right: number of Y variables (0 in complete mode).
        coefficients: map from index pair to coefficient.  Complete mode
            keys satisfy 0 <= i < j < n_left; bipartite keys satisfy
            0 <= i < n_left, 0 <= j < n_right.
        rhs: the bound.
    """

    mode: str
    n_left: int
    n_right: int
    coefficients: dict[tuple[int, int], float] = field(default_factory=dict)
    rhs: float = 0.0

    def __post_init__(self):
        if self.mode not in (MODE_COMPLETE, MODE_BIPARTITE):
            raise ParameterError(f"unknown mode {self.mode!r}")
        if self.mode == MODE_COMPLETE:
            if self.n_right != 0:
                raise DimensionError("complete mode requires n_right == 0")
            if self.n_left < 1:
                raise DimensionError("need at least one variable")
            for i, j in self.coefficients:
                if not (0 <= i < j < self.n_left):
                    raise DimensionError(f"bad complete-mode pair ({i}, {j})")
        else:
            if self.n_left < 1 or self.n_right < 1:
                raise DimensionError("bipartite mode requires variables on both sides")
            for i, j in self.coefficients:
                if not (0 <= i < self.n_left and 0 <= j < self.n_right):
                    raise DimensionError(f"bad bipartite pair ({i}, {j})")
        if not _finite(self.rhs) or not all(_finite(v) for v in self.coefficients.values()):
            raise ParameterError("coefficients and rhs must be finite")

    @property
    def variable_count(self) -> int:
        return self.n_left + self.n_right

    def engine_pairs(self) -> list[tuple[int, int, float]]:
        """Coefficients reindexed over the joint variable list.

        Bipartite Y_j becomes variable n_left + j, so both modes reduce
        to one pairwise form on variable_count signs.
        """
        if self.mode == MODE_COMPLETE:
            items = [(i, j, w) for (i, j), w in self.coefficients.items()]
        else:
            items = [(i, self.n_left + j, w) for (i, j), w in self.coefficients.items()]
        return sorted(items, key=lambda t: (t[0], t[1]))

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n_left": self.n_left,
            "n_right": self.n_right,
            "coefficients": [
                {"i": i, "j": j, "value": w}
                for (i, j), w in sorted(self.coefficients.items())
            ],
            "rhs": self.rhs,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PairwiseInequality":
        try:
            coeffs = {
                (int(c["i"]), int(c["j"])): float(c["value"])
                for c in data["coefficients"]
            }
            return cls(
                mode=str(data["mode"]),
                n_left=int(data["n_left"]),
                n_right=int(data["n_right"]),
                coefficients=coeffs,
                rhs=float(data["rhs"]),
            )
        except KeyError as exc:
            raise ParameterError(f"inequality JSON is missing field {exc}") from exc

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PairwiseInequality":
        return cls.from_json_dict(json.loads(text))


@dataclass
class ClassicalBoundResult:
    """Outcome of exhaustive maximization over sign assignments."""

    max_value: float
    argmax: SignAssignment
    evaluations: int


def chsh() -> PairwiseInequality:
    """The 2x2 bipartite inequality with coefficients (1/2, 1/2, 1/2, -1/2)."""
    return PairwiseInequality(
        mode=MODE_BIPARTITE,
        n_left=2,
        n_right=2,
        coefficients={(0, 0): 0.5, (0, 1): 0.5, (1, 0): 0.5, (1, 1): -0.5},
        rhs=1.0,
    )


def triangle() -> PairwiseInequality:
    """-X1X2 - X1X3 - X2X3 <= 1, the smallest one-party inequality here."""
    return PairwiseInequality(
        mode=MODE_COMPLETE,
        n_left=3,
        n_right=0,
        coefficients={(0, 1): -1.0, (0, 2): -1.0, (1, 2): -1.0},
        rhs=1.0,
    )


def evaluate(ineq: PairwiseInequality, assignment: SignAssignment) -> float:
    """Value of the form at one deterministic assignment.

    Bipartite assignments list the X block first, then the Y block.
    """
    if len(assignment) != ineq.variable_count:
        raise DimensionError(
            f"assignment has {len(assignment)} values, inequality has "
            f"{ineq.variable_count} variables"
        )
    s = assignment.values
    total = 0.0
    for i, j, w in ineq.engine_pairs():
        total += w * s[i] * s[j]
    return total


def classical_bound(
    ineq: PairwiseInequality,
    guard: int = DEFAULT_GUARD,
    fold_symmetry: bool = True,
    use_exact: bool | None = None,
) -> ClassicalBoundResult:
    """Tight local bound: max of the form over all sign assignments.

    The form is invariant under a global flip, so by default the first
    variable is pinned to +1.  Half-integer coefficient families are
    accumulated in exact integers (scaled by 2); ties are broken by the
    first maximizer in Gray-code order.
    """
    best, arg, evals = enumeration.max_over_signs(
        ineq.variable_count,
        ineq.engine_pairs(),
        guard=guard,
        fold_symmetry=fold_symmetry,
        use_exact=use_exact,
    )
    return ClassicalBoundResult(
        max_value=best, argmax=SignAssignment(arg), evaluations=evals
    )


# ============================================================================
# 0/1 cut form
# ============================================================================
#
# With X_i = 2 a_i - 1 the product transforms as X_i X_j = 1 - 2 (a_i xor a_j),
# so every +-1 inequality has an equivalent form in cut variables.  The
# convention here divides out the constant factor 2: coefficients are negated
# and the rhs becomes (rhs - sum of coefficients) / 2, which sends the
# clique-web family to its usual 0/1 shape with rhs 0.


@dataclass
class CutInequality:
    """sum of c_ij * (a_i xor a_j) <= rhs over 0/1 assignments."""

    n: int
    coefficients: dict[tuple[int, int], float] = field(default_factory=dict)
    rhs: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("need at least one variable")
        for i, j in self.coefficients:
            if not (0 <= i < j < self.n):
                raise DimensionError(f"bad pair ({i}, {j}) for {self.n} variables")


def evaluate_cut(ineq: CutInequality, assignment: Iterable[int]) -> float:
    bits = tuple(assignment)
    if len(bits) != ineq.n:
        raise DimensionError(f"expected {ineq.n} bits, got {len(bits)}")
    if not all(b in (0, 1) for b in bits):
        raise ParameterError("cut assignments take values 0 or 1")
    return sum(w * (bits[i] ^ bits[j]) for (i, j), w in ineq.coefficients.items())


def to_cut_form(ineq: PairwiseInequality) -> CutInequality:
    """Rewrite a complete-mode inequality in cut variables.

    Both forms accept exactly the same assignments under a_i = (X_i+1)/2.
    """
    if ineq.mode != MODE_COMPLETE:
        raise ParameterError("cut form is defined for complete-mode inequalities")
    total = sum(ineq.coefficients.values())
    return CutInequality(
        n=ineq.n_left,
        coefficients={pair: -w for pair, w in ineq.coefficients.items()},
        rhs=(ineq.rhs - total) / 2.0,
    )


def from_cut_form(cut: CutInequality) -> PairwiseInequality:
    """Inverse of to_cut_form; the round trip is the identity."""
    total = sum(cut.coefficients.values())
    return PairwiseInequality(
        mode=MODE_COMPLETE,
        n_left=cut.n,
        n_right=0,
        coefficients={pair: -w for pair, w in cut.coefficients.items()},
        rhs=2.0 * cut.rhs - total,
    )


def embed_in_complete(ineq: PairwiseInequality) -> PairwiseInequality:
    """View a bipartite inequality as one on the joint variable list.

    Y_j becomes variable n_left + j; values agree assignment for
    assignment, so the classical bound is unchanged.
    """
    if ineq.mode != MODE_BIPARTITE:
        raise ParameterError("embedding applies to bipartite inequalities")
    return PairwiseInequality(
        mode=MODE_COMPLETE,
        n_left=ineq.variable_count,
        n_right=0,
        coefficients={(i, j): w for i, j, w in ineq.engine_pairs()},
        rhs=ineq.rhs,
    )


def collapse_bipartite(ineq: PairwiseInequality) -> PairwiseInequality:
    """Identify Y with X in a square bipartite inequality.

    Cross coefficients c_ij and c_ji merge onto the unordered pair {i, j};
    diagonal terms become the constant 1 and move into the rhs.  The
    result is valid for one party whenever the input is valid for two.
    """
    if ineq.mode != MODE_BIPARTITE:
        raise ParameterError("collapse applies to bipartite inequalities")
    if ineq.n_left != ineq.n_right:
        raise DimensionError(
            f"collapse needs a square inequality, got {ineq.n_left}x{ineq.n_right}"
        )
    n = ineq.n_left
    merged: dict[tuple[int, int], float] = {}
    diagonal = 0.0
    for (i, j), w in ineq.coefficients.items():
        if i == j:
            diagonal += w
        else:
            pair = (i, j) if i < j else (j, i)
            merged[pair] = merged.get(pair, 0.0) + w
    merged = {pair: w for pair, w in merged.items() if w != 0.0}
    return PairwiseInequality(
        mode=MODE_COMPLETE,
        n_left=n,
        n_right=0,
        coefficients=merged,
        rhs=ineq.rhs - diagonal,
    )


def _finite(x: float) -> bool:
    return x == x and abs(x) != float("inf")
