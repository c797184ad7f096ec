"""Web and antiweb graphs and the clique-web inequality family.

A web W(p, r) with deficiency q = p - 2r - 1 is the circulant graph on
vertices 0..p-1 whose edges join vertices at circular distance r+1
through floor(p/2); the antiweb is its complement in K_p, the circulant
at distances 1 through r.  Attaching a q-clique to the web by all cross
pairs yields a one-party inequality with tight classical bound q(r+1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DimensionError, ParameterError, ResourceLimitError
from .inequalities import MODE_COMPLETE, PairwiseInequality

ALON_GUARD = 20


@dataclass(frozen=True)
class WebSpec:
    """Parameters (p, q, r) with p = q + 2r + 1 and q >= 2."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"q must be at least 2, got {self.q}")
        if self.r < 0:
            raise ParameterError(f"r must be nonnegative, got {self.r}")
        if self.p != self.q + 2 * self.r + 1:
            raise ParameterError(
                f"(p, q, r) = ({self.p}, {self.q}, {self.r}) violates p = q + 2r + 1"
            )

    @property
    def rhs(self) -> int:
        return self.q * (self.r + 1)


@dataclass(frozen=True)
class EdgeSet:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise DimensionError(f"bad edge ({i}, {j}) on {self.n} vertices")
            if (i, j) in seen:
                raise ParameterError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[i, j] for i, j in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "EdgeSet":
        try:
            edges = tuple(
                (min(int(i), int(j)), max(int(i), int(j))) for i, j in data["edges"]
            )
            return cls(n=int(data["n"]), edges=tuple(sorted(set(edges))))
        except KeyError as exc:
            raise ParameterError(f"edge-set JSON is missing field {exc}") from exc

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)


def web_edges(spec: WebSpec) -> EdgeSet:
    """Edges of W(p, r): offsets r+1 .. r+q from every vertex, deduplicated.

    The offset range is symmetric around p/2, so each undirected edge is
    produced twice and the set has exactly p*q/2 members.
    """
    edges = set()
    for i in range(spec.p):
        for off in range(spec.r + 1, spec.r + spec.q + 1):
            j = (i + off) % spec.p
            edges.add((min(i, j), max(i, j)))
    return EdgeSet(n=spec.p, edges=tuple(sorted(edges)))


def antiweb_edges(spec: WebSpec) -> EdgeSet:
    """Complement of the web in K_p: circular distances 1 .. r."""
    web = set(web_edges(spec).edges)
    edges = tuple(
        (i, j)
        for i in range(spec.p)
        for j in range(i + 1, spec.p)
        if (i, j) not in web
    )
    return EdgeSet(n=spec.p, edges=edges)


def cut_edges(edges: EdgeSet, subset: frozenset[int] | set[int]) -> tuple[tuple[int, int], ...]:
    """Edges with exactly one endpoint in the subset."""
    for v in subset:
        if not (0 <= v < edges.n):
            raise DimensionError(f"vertex {v} outside 0..{edges.n - 1}")
    s = set(subset)
    return tuple((i, j) for i, j in edges.edges if (i in s) != (j in s))


def clique_web_inequality(spec: WebSpec) -> PairwiseInequality:
    """The inequality on p + q variables (X block first, then Z block).

    Coefficient +1 on every cross pair (X_i, Z_j), -1 on every web edge
    inside the X block, -1 on every pair inside the Z block; rhs q(r+1).
    The all-ones assignment attains the bound.
    """
    p, q = spec.p, spec.q
    coeffs: dict[tuple[int, int], float] = {}
    for i in range(p):
        for j in range(q):
            coeffs[(i, p + j)] = 1.0
    for i, j in web_edges(spec).edges:
        coeffs[(i, j)] = coeffs.get((i, j), 0.0) - 1.0
    for a in range(q):
        for b in range(a + 1, q):
            coeffs[(p + a, p + b)] = -1.0
    return PairwiseInequality(
        mode=MODE_COMPLETE,
        n_left=p + q,
        n_right=0,
        coefficients=coeffs,
        rhs=float(spec.rhs),
    )


@dataclass
class AlonViolation:
    """One subset where the cut-size bound or its equality test failed."""

    subset: tuple[int, ...]
    cut_size: int
    bound: int
    equality_condition: bool


@dataclass
class AlonReport:
    """Exhaustive check of the antiweb cut-size lower bounds.

    For every nonempty S with |S| = s <= p/2 the antiweb cut obeys
    |cut(S)| >= s(2r+1-s) when s <= r, with equality exactly when S
    induces a clique in the antiweb, and |cut(S)| >= r(r+1) when
    r+1 <= s <= p/2, with equality exactly when S is a circular
    interval.  Both directions of each equivalence are tested.
    """

    spec: WebSpec
    subsets_checked: int
    equality_small: int
    equality_large: int
    violations: tuple[AlonViolation, ...] = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return not self.violations


def verify_alon_theorem(spec: WebSpec, guard: int = ALON_GUARD) -> AlonReport:
    """Check the antiweb cut bounds over all subsets up to size p/2."""
    p, r = spec.p, spec.r
    if r < 1:
        raise ParameterError("the cut-size bounds require r >= 1")
    if p < 2 * r + 3:
        raise ParameterError("the cut-size bounds require p >= 2r + 3")
    if p > guard:
        raise ResourceLimitError(
            f"p = {p} exceeds the guard of {guard}; raise it for a deliberate run"
        )

    full = (1 << p) - 1
    adjacency = []
    for i in range(p):
        mask = 0
        for d in range(1, r + 1):
            mask |= 1 << ((i + d) % p)
            mask |= 1 << ((i - d) % p)
        adjacency.append(mask)

    checked = 0
    equality_small = 0
    equality_large = 0
    violations: list[AlonViolation] = []

    for s_mask in range(1, 1 << p):
        size = s_mask.bit_count()
        if size > p // 2:
            continue
        checked += 1
        cut = 0
        rest = s_mask
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            cut += (adjacency[i] & ~s_mask & full).bit_count()

        if size <= r:
            bound = size * (2 * r + 1 - size)
            condition = all(
                (s_mask & ~(1 << i)) & ~adjacency[i] == 0
                for i in range(p)
                if s_mask >> i & 1
            )
            if cut == bound:
                equality_small += 1
        else:
            bound = r * (r + 1)
            rotated = ((s_mask << 1) | (s_mask >> (p - 1))) & full
            condition = (s_mask ^ rotated).bit_count() == 2
            if cut == bound:
                equality_large += 1

        if cut < bound or (cut == bound) != condition:
            if len(violations) < 32:
                subset = tuple(i for i in range(p) if s_mask >> i & 1)
                violations.append(AlonViolation(subset, cut, bound, condition))

    return AlonReport(
        spec=spec,
        subsets_checked=checked,
        equality_small=equality_small,
        equality_large=equality_large,
        violations=tuple(violations),
    )
