"""Positive integral friezes of Dynkin type: verification, analysis,
bounds, and exhaustive enumeration with exact arithmetic."""

from .bounds import (
    BoundsCheck,
    BoundsReport,
    IntervalCertificate,
    LogVector,
    a_vector,
    bounds_report,
    check_pattern_against_bounds,
    floor_pow2,
    integer_root,
    interval_certificate,
    refined_min2_report,
    row_products,
)
from .catalog import (
    CATALOG_SAMPLE,
    CartanMatrix,
    DynkinType,
    InverseCartan,
    TypeProfile,
    cartan_matrix,
    inverse_cartan,
    leading_principal_minors,
    repetition_arrows,
    type_profile,
)
from .fixtures import a2_orbit_pattern, e8_example_pattern
from .formats import (
    JSON_SCHEMAS,
    FriezeFormatError,
    emit_frieze,
    emit_quiver_dot,
    parse_frieze,
)
from .mesh import (
    DeadEndError,
    FriezePattern,
    FriezeSlice,
    IndivisibleError,
    MeshViolation,
    NoRecurrenceError,
    detect_period,
    mesh_product,
    pattern_from_columns,
    propagate_backward,
    propagate_forward,
    verify_pattern,
)
from .search import (
    Orbit,
    SearchConfig,
    SearchOutcome,
    column_dfs,
    default_strategy,
    enumerate_friezes,
    entry_caps,
    row_seeded,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsCheck",
    "BoundsReport",
    "CATALOG_SAMPLE",
    "CartanMatrix",
    "DeadEndError",
    "DynkinType",
    "FriezeFormatError",
    "FriezePattern",
    "FriezeSlice",
    "IndivisibleError",
    "InverseCartan",
    "JSON_SCHEMAS",
    "IntervalCertificate",
    "LogVector",
    "MeshViolation",
    "NoRecurrenceError",
    "Orbit",
    "SearchConfig",
    "SearchOutcome",
    "TypeProfile",
    "a2_orbit_pattern",
    "a_vector",
    "bounds_report",
    "cartan_matrix",
    "check_pattern_against_bounds",
    "column_dfs",
    "default_strategy",
    "detect_period",
    "e8_example_pattern",
    "emit_frieze",
    "emit_quiver_dot",
    "enumerate_friezes",
    "floor_pow2",
    "integer_root",
    "inverse_cartan",
    "leading_principal_minors",
    "interval_certificate",
    "mesh_product",
    "parse_frieze",
    "pattern_from_columns",
    "propagate_backward",
    "propagate_forward",
    "entry_caps",
    "refined_min2_report",
    "repetition_arrows",
    "row_products",
    "row_seeded",
    "type_profile",
    "verify_pattern",
]
