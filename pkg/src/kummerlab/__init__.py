"""Exact-arithmetic toolkit for natural automorphisms of generalized
Kummer varieties: fixed-point decisions with certificates, Lefschetz
numbers via generating series, and quotient classification."""

from .enriques import (
    FactorDecomposition,
    FactorKind,
    QuotientClassification,
    QuotientVerdict,
    classify_free_quotient,
    decomposition_search,
    holomorphic_euler_ihs,
    is_irreducible_feasible,
)
from .fixedpoint import (
    CertificateOutcome,
    FixedPointReport,
    FreenessCertificate,
    FreenessReport,
    NotNTorsionError,
    OrbitType,
    brute_force_fixed_point,
    group_acts_freely,
    has_fixed_point,
    orbit_system,
    orbit_types,
    verify_certificate,
)
from .lattice import (
    DimensionMismatchError,
    SolvabilityResult,
    solvable_by_enumeration,
    torus_system_solvable,
    verify_obstruction,
    verify_witness,
)
from .lefschetz import (
    CharacterCounts,
    DegenerateActionError,
    NonIntegralLefschetzError,
    companion_matrix,
    det_one_minus_power,
    invariant_character_counts,
    kummer_series,
    lefschetz_kummer,
    lefschetz_torus,
    matrix_order,
    supertrace_sym_series,
)
from .linalg import (
    IntMatrix,
    elementary_divisors_via_minors,
    hermite_normal_form,
    smith_normal_form,
)
from .rings import (
    FieldElem,
    RingElem,
    RingId,
    RingMismatchError,
    units,
    zeta6,
)
from .search import SearchResult, run_search
from .series import TruncatedSeries
from .torus import (
    TORSION_LEVEL_CAP,
    TorusAuto,
    TorusEndo,
    TorusPoint,
    UnsupportedAutomorphismError,
    automorphism_order,
    induced_h1_matrix,
    orbit_sum_data,
    symplectic_multiplier,
)

__version__ = "0.1.0"

__all__ = [
    "CertificateOutcome",
    "CharacterCounts",
    "DegenerateActionError",
    "DimensionMismatchError",
    "FactorDecomposition",
    "FactorKind",
    "FieldElem",
    "FixedPointReport",
    "FreenessCertificate",
    "FreenessReport",
    "IntMatrix",
    "NonIntegralLefschetzError",
    "NotNTorsionError",
    "OrbitType",
    "QuotientClassification",
    "QuotientVerdict",
    "RingElem",
    "RingId",
    "RingMismatchError",
    "SearchResult",
    "SolvabilityResult",
    "TORSION_LEVEL_CAP",
    "TorusAuto",
    "TorusEndo",
    "TorusPoint",
    "TruncatedSeries",
    "UnsupportedAutomorphismError",
    "automorphism_order",
    "brute_force_fixed_point",
    "classify_free_quotient",
    "companion_matrix",
    "decomposition_search",
    "det_one_minus_power",
    "elementary_divisors_via_minors",
    "group_acts_freely",
    "has_fixed_point",
    "hermite_normal_form",
    "holomorphic_euler_ihs",
    "induced_h1_matrix",
    "invariant_character_counts",
    "is_irreducible_feasible",
    "kummer_series",
    "lefschetz_kummer",
    "lefschetz_torus",
    "matrix_order",
    "orbit_sum_data",
    "orbit_system",
    "orbit_types",
    "run_search",
    "smith_normal_form",
    "solvable_by_enumeration",
    "supertrace_sym_series",
    "symplectic_multiplier",
    "torus_system_solvable",
    "units",
    "verify_certificate",
    "verify_obstruction",
    "verify_witness",
    "zeta6",
]
