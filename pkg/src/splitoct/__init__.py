"""Split octonions, octonions, and the operator form of Maxwell's equations.

The package verifies one algebraic fact from four directions: writing the
electromagnetic field as an element F of the split octonions and applying
the operator d = e1*d_x + e2*d_y + e4*d_z + e7*d_t by left multiplication,
the equation dF = 0 is exactly the vacuum Maxwell system — and the same
construction over the ordinary octonions is not.

Layers: :mod:`splitoct.algebra` (exact products and identity checks),
:mod:`splitoct.symbolic` (formal expansion of the operator),
:mod:`splitoct.numeric` (floating-point evaluation on closed-form fields,
batched through a compiled kernel when available) and
:mod:`splitoct.derivations` (the 14-dimensional derivation algebra and
automorphism transport).  :mod:`splitoct.cli` exposes everything as
subcommands.
"""

from .algebra import (
    AlgebraKind,
    IdentityCheck,
    IdentityReport,
    Octonion,
    StructureTable,
    associator,
    associativity_witness,
    check_identities,
    conjugate,
    multiply,
    norm_form,
    random_octonion,
    search_null_pair,
    signature,
)
from .derivations import (
    LinearMap7,
    NotAutomorphismError,
    Verdict,
    derivation_dimension,
    derivation_space,
    is_automorphism,
    is_derivation,
    transport_maxwell,
)
from .numeric import (
    PlaneWave,
    PolynomialField,
    ResidualReport,
    cross_check,
    dirac_residuals,
    evaluate_dF,
    fd_derivatives,
    sample_points,
)
from .symbolic import (
    DerivAtom,
    ExpansionVerdict,
    FieldName,
    FieldOctonion,
    MaxwellDecomposition,
    SymbolicScalar,
    apply_dirac,
    expected_decomposition,
    sign_discrimination,
    verify_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraKind",
    "DerivAtom",
    "ExpansionVerdict",
    "FieldName",
    "FieldOctonion",
    "IdentityCheck",
    "IdentityReport",
    "LinearMap7",
    "MaxwellDecomposition",
    "NotAutomorphismError",
    "Octonion",
    "PlaneWave",
    "PolynomialField",
    "ResidualReport",
    "StructureTable",
    "SymbolicScalar",
    "Verdict",
    "apply_dirac",
    "associativity_witness",
    "associator",
    "check_identities",
    "conjugate",
    "cross_check",
    "derivation_dimension",
    "derivation_space",
    "dirac_residuals",
    "evaluate_dF",
    "expected_decomposition",
    "fd_derivatives",
    "is_automorphism",
    "is_derivation",
    "multiply",
    "norm_form",
    "random_octonion",
    "sample_points",
    "search_null_pair",
    "sign_discrimination",
    "signature",
    "transport_maxwell",
    "verify_expansion",
]
