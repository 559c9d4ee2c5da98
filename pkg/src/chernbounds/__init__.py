"""Exact Chern-class inequalities for varieties with very ample (anti)canonical
twist, via Schubert calculus on the Gauss-map pullback of the universal
subbundle, plus the rational polytope those inequalities cut out."""

from .chern import (
    ChernPoly,
    Monomial,
    banded_determinant,
    chern_s_to_schubert,
    cmono,
    cvar,
    determinant_recursion_check,
    gauss_pullback_chern,
    line_symbol,
    schubert_class_in_chern_s,
    schubert_class_in_chern_s_dual,
    special_to_chern_s,
    substitute,
    tangent_twisted_chern,
    twisted_chern,
)
from .inequalities import (
    Inequality,
    Provenance,
    comparison_inequalities,
    effective_inequality,
    generate_all,
    schubert_class_inequality,
    specialize,
    upper_inequality,
)
from .lp import SimplexResult, simplex_max
from .mpoly import M, MPoly, rational_content
from .partitions import (
    Partition,
    alphabet_compare,
    enumerate_partitions,
    hardy_ramanujan_estimate,
    partition_count,
)
from .polytope import (
    FANO,
    GENERAL_TYPE,
    BoundsCertificate,
    ChiBounds,
    CoordinateBound,
    LpResult,
    RatioInequality,
    boundedness_certificate,
    build_polytope,
    chi_bounds,
    lp_optimize,
    normalize_to_ratio,
    ratio_coordinates,
)
from .schubert import (
    BoxSpec,
    SchubertExpr,
    dual_pairing,
    giambelli_matrix,
    is_effective,
    multiply,
    pieri_multiply,
    sigma,
    special_expansion,
)
from .todd import (
    ToddPolynomial,
    chi_structure_sheaf_functional,
    log_todd_series,
    power_sum,
    todd_components,
    todd_polynomial,
)
from .verify import CheckResult, run_section

__version__ = "0.1.0"

__all__ = [
    "BoundsCertificate",
    "BoxSpec",
    "CheckResult",
    "ChernPoly",
    "ChiBounds",
    "CoordinateBound",
    "FANO",
    "GENERAL_TYPE",
    "Inequality",
    "LpResult",
    "M",
    "MPoly",
    "Monomial",
    "Partition",
    "Provenance",
    "RatioInequality",
    "SchubertExpr",
    "SimplexResult",
    "ToddPolynomial",
    "alphabet_compare",
    "banded_determinant",
    "boundedness_certificate",
    "build_polytope",
    "chern_s_to_schubert",
    "chi_bounds",
    "chi_structure_sheaf_functional",
    "cmono",
    "comparison_inequalities",
    "cvar",
    "determinant_recursion_check",
    "dual_pairing",
    "effective_inequality",
    "enumerate_partitions",
    "gauss_pullback_chern",
    "generate_all",
    "giambelli_matrix",
    "hardy_ramanujan_estimate",
    "is_effective",
    "line_symbol",
    "log_todd_series",
    "lp_optimize",
    "multiply",
    "normalize_to_ratio",
    "partition_count",
    "pieri_multiply",
    "power_sum",
    "ratio_coordinates",
    "rational_content",
    "run_section",
    "schubert_class_in_chern_s",
    "schubert_class_in_chern_s_dual",
    "schubert_class_inequality",
    "sigma",
    "simplex_max",
    "special_expansion",
    "special_to_chern_s",
    "specialize",
    "substitute",
    "tangent_twisted_chern",
    "todd_components",
    "todd_polynomial",
    "twisted_chern",
    "upper_inequality",
]
