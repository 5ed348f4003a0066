"""Exact rational basis solutions of the 3x3 two-pole Knizhnik-Zamolodchikov
system, with symbolic verification and a formula audit."""

from .audit import AuditItem, AuditReport, run_audit
from .errors import (
    DegenerateConfiguration,
    DegenerateScalar,
    DivisionByZero,
    EvaluationAtPole,
    InvalidPath,
    InvalidSeed,
    KzratError,
    ScalarSyntaxError,
    UnknownVariable,
    UnsolvableResonance,
    UnsupportedSpectrum,
)
from .residues import (
    RationalSolution,
    ResidueSet,
    assemble_solution,
    build_moment_matrix,
    moment_inverse_closed_form,
    moments_from_residues,
    reconstruct_residues,
)
from .scalars import (
    ParamPoly,
    ParamScalar,
    Rational,
    canonicalize,
    parse_scalar,
    render_scalar,
)
from .series import (
    CoefficientTable,
    ResonanceRecord,
    SeedSpec,
    canonical_seeds,
    generate,
    recurrence_rhs,
    solve_level,
)
from .solutions import BasisSolution, build_basis, build_solution
from .system import (
    EigenSystem,
    KZSystem,
    build_s3_system,
    eigensystem,
    series_matrix,
    symbolic_system,
    total_matrix,
    transposition_matrix,
)
from .verify import (
    ResidualReport,
    differentiate,
    independence,
    numeric_crosscheck,
    residual,
)

__version__ = "0.1.0"

__all__ = [
    "AuditItem",
    "AuditReport",
    "BasisSolution",
    "CoefficientTable",
    "DegenerateConfiguration",
    "DegenerateScalar",
    "DivisionByZero",
    "EigenSystem",
    "EvaluationAtPole",
    "InvalidPath",
    "InvalidSeed",
    "KZSystem",
    "KzratError",
    "ParamPoly",
    "ParamScalar",
    "Rational",
    "RationalSolution",
    "ResidualReport",
    "ResidueSet",
    "ResonanceRecord",
    "ScalarSyntaxError",
    "SeedSpec",
    "UnknownVariable",
    "UnsolvableResonance",
    "UnsupportedSpectrum",
    "assemble_solution",
    "build_basis",
    "build_moment_matrix",
    "build_s3_system",
    "build_solution",
    "canonical_seeds",
    "canonicalize",
    "differentiate",
    "eigensystem",
    "generate",
    "independence",
    "moment_inverse_closed_form",
    "moments_from_residues",
    "numeric_crosscheck",
    "parse_scalar",
    "reconstruct_residues",
    "recurrence_rhs",
    "render_scalar",
    "residual",
    "run_audit",
    "series_matrix",
    "solve_level",
    "symbolic_system",
    "total_matrix",
    "transposition_matrix",
]
