"""Correlation inequalities for two-qubit singlet experiments.

The package builds pairwise correlation inequalities (the 2x2 form, odd
cycles, clique-web families), computes their exact local bounds by sign
enumeration, evaluates singlet-state quantum values on unit-vector
configurations, constructs explicit operator realizations for any
correlation matrix that is a Gram matrix, runs membership and facet
checks against the correlation polytopes, and locates Werner-state
visibility thresholds.
"""

from .enumeration import max_over_signs, min_over_signs
from .errors import (
    BellboundError,
    ConvergenceError,
    DimensionError,
    ParameterError,
    ResourceLimitError,
)
from .inequalities import (
    MODE_BIPARTITE,
    MODE_COMPLETE,
    ClassicalBoundResult,
    CutInequality,
    PairwiseInequality,
    SignAssignment,
    chsh,
    classical_bound,
    collapse_bipartite,
    embed_in_complete,
    evaluate,
    evaluate_cut,
    from_cut_form,
    to_cut_form,
    triangle,
)
from .noise import (
    CHSH_CRITICAL_ETA,
    SEPARABILITY_ETA,
    NoiseQuantity,
    ThresholdReport,
    WernerParams,
    cliqueweb_threshold,
    noise_quantity,
    noisy_violation,
    partitioned_threshold,
    symmetry_band,
    triangle_threshold,
    werner_correlation,
)
from .optimize import (
    FAMILY_BOUQUET12,
    FAMILY_BOUQUET2K1,
    GROTHENDIECK,
    GramAscentResult,
    GrothendieckBounds,
    RatioProbeSummary,
    ThetaScanResult,
    golden_section_max,
    gram_ascent,
    ratio_probe,
    scan_theta,
)
from .polytopes import (
    FacetReport,
    MembershipCertificate,
    PolytopeSpec,
    SeparatingHyperplane,
    ambient_coefficients,
    bell_embed,
    bell_to_cut,
    cut_to_bell,
    facet_check,
    membership,
    vertices,
)
from .quantum import (
    UnitVectorConfig,
    ViolationReport,
    bouquet,
    planar_ring,
    quantum_value,
    singlet_correlation,
    v12_formula,
    v2k1_formula,
)
from .reproduce import ReproductionRow, chsh_embedded, chsh_settings, claim_ids, run_claims
from .tsirelson import (
    OperatorRealization,
    RealizationReport,
    clifford_generators,
    maximally_entangled_state,
    pair_expectation,
    realize,
    verify_realization,
)
from .webs import (
    AlonReport,
    AlonViolation,
    EdgeSet,
    WebSpec,
    antiweb_edges,
    clique_web_inequality,
    cut_edges,
    verify_alon_theorem,
    web_edges,
)

__version__ = "0.1.0"

__all__ = [
    "AlonReport",
    "AlonViolation",
    "BellboundError",
    "CHSH_CRITICAL_ETA",
    "ClassicalBoundResult",
    "ConvergenceError",
    "CutInequality",
    "DimensionError",
    "EdgeSet",
    "FacetReport",
    "FAMILY_BOUQUET12",
    "FAMILY_BOUQUET2K1",
    "GROTHENDIECK",
    "GramAscentResult",
    "GrothendieckBounds",
    "MODE_BIPARTITE",
    "MODE_COMPLETE",
    "MembershipCertificate",
    "NoiseQuantity",
    "OperatorRealization",
    "PairwiseInequality",
    "ParameterError",
    "PolytopeSpec",
    "RatioProbeSummary",
    "RealizationReport",
    "ReproductionRow",
    "ResourceLimitError",
    "SEPARABILITY_ETA",
    "SeparatingHyperplane",
    "SignAssignment",
    "ThetaScanResult",
    "ThresholdReport",
    "UnitVectorConfig",
    "ViolationReport",
    "WebSpec",
    "WernerParams",
    "ambient_coefficients",
    "antiweb_edges",
    "bell_embed",
    "bell_to_cut",
    "bouquet",
    "chsh",
    "chsh_embedded",
    "chsh_settings",
    "claim_ids",
    "classical_bound",
    "clifford_generators",
    "clique_web_inequality",
    "collapse_bipartite",
    "cut_edges",
    "cut_to_bell",
    "embed_in_complete",
    "evaluate",
    "evaluate_cut",
    "facet_check",
    "from_cut_form",
    "golden_section_max",
    "gram_ascent",
    "max_over_signs",
    "maximally_entangled_state",
    "membership",
    "min_over_signs",
    "noise_quantity",
    "noisy_violation",
    "pair_expectation",
    "partitioned_threshold",
    "planar_ring",
    "quantum_value",
    "ratio_probe",
    "realize",
    "run_claims",
    "scan_theta",
    "singlet_correlation",
    "symmetry_band",
    "to_cut_form",
    "triangle",
    "triangle_threshold",
    "v12_formula",
    "v2k1_formula",
    "verify_alon_theorem",
    "verify_realization",
    "vertices",
    "web_edges",
    "werner_correlation",
]
