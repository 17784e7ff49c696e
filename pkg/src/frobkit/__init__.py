"""p-Frobenius numbers, p-Sylvester numbers, denumerants and Apery sets for
numerical semigroups, with closed-form fast paths for shifted geometric
generator families and a closed-form-vs-oracle verification harness."""

from .errors import (
    FrobkitError,
    GcdNotOneError,
    InvalidInputError,
    NoClosedFormCaseError,
    OutOfValidityRangeError,
    ResourceLimitError,
    UnsupportedCaseError,
)
from .families import (
    ABGDecomposition,
    AperyGridTriple,
    CaseConditions,
    ClosedFormCase,
    QRDecomposition,
    ShiftedGeometricQuad,
    ShiftedGeometricTriple,
    abg_decompose,
    apery_grid_triple,
    closed_form_case,
    g_p_closed_quad,
    g_p_closed_triple,
    g_p_two_gens,
    make_quad,
    make_triple,
    n_p_closed_triple,
    qr_decompose,
)
from .semigroup import (
    DEFAULT_TABLE_CAP,
    AperyTable,
    DenumerantTable,
    GeneratorTuple,
    apery_set,
    denumerant,
    denumerant_table,
    gcd_of,
    p_frobenius_scan,
    p_frobenius_via_apery,
    p_sylvester_count,
    p_sylvester_via_apery,
)
from .verify import (
    PointResult,
    SweepSpec,
    SweepSummary,
    VerificationReport,
    discover_validity,
    theorem_p_range,
    verify_grid,
    verify_point,
)

__version__ = "0.1.0"

__all__ = [
    "ABGDecomposition",
    "AperyGridTriple",
    "AperyTable",
    "CaseConditions",
    "ClosedFormCase",
    "DEFAULT_TABLE_CAP",
    "DenumerantTable",
    "FrobkitError",
    "GcdNotOneError",
    "GeneratorTuple",
    "InvalidInputError",
    "NoClosedFormCaseError",
    "OutOfValidityRangeError",
    "PointResult",
    "QRDecomposition",
    "ResourceLimitError",
    "ShiftedGeometricQuad",
    "ShiftedGeometricTriple",
    "SweepSpec",
    "SweepSummary",
    "UnsupportedCaseError",
    "VerificationReport",
    "abg_decompose",
    "apery_grid_triple",
    "apery_set",
    "closed_form_case",
    "denumerant",
    "denumerant_table",
    "discover_validity",
    "g_p_closed_quad",
    "g_p_closed_triple",
    "g_p_two_gens",
    "gcd_of",
    "make_quad",
    "make_triple",
    "n_p_closed_triple",
    "p_frobenius_scan",
    "p_frobenius_via_apery",
    "p_sylvester_count",
    "p_sylvester_via_apery",
    "qr_decompose",
    "theorem_p_range",
    "verify_grid",
    "verify_point",
]
