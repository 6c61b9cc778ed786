"""Contraction tests for triangular 3x3/4x4 complex matrices, corner-completion
feasibility disks, Mobius operator transforms, and an independent eigenvalue
oracle for cross-validation."""

from .core import (
    Disk,
    DomainError,
    ParseError,
    RangeError,
    Tolerances,
    TriMatrix3,
    TriMatrix4,
    Verdict,
    defect_product,
    parse_matrix,
    serialize_matrix,
    to_dense,
)
from .criteria import (
    beta_disk_3x3,
    check_4x4_omega3_zero,
    check_contraction_2x2,
    check_contraction_3x3,
    check_contraction_4x4,
    gamma_disk,
)
from .fuzz import FuzzReport, run_fuzz, sample_tri4
from .mobius import (
    DividedDifferenceTable,
    divided_differences,
    mobius_divided_closed_form,
    mobius_scalar,
    mobius_transform_dense,
    mobius_transform_triangular,
)
from .oracle import EigenDecomposition, hermitian_eigen, is_contraction_oracle, operator_norm
from .parrott import (
    ParrottBlocks,
    cholesky_upper,
    defect_operator,
    matrix_power_2x2,
    minimal_column_solution,
    minimal_row_solution,
    parrott_check,
    parrott_corner_disk,
)

__version__ = "0.1.0"

__all__ = [
    "Disk",
    "DomainError",
    "ParseError",
    "RangeError",
    "Tolerances",
    "TriMatrix3",
    "TriMatrix4",
    "Verdict",
    "defect_product",
    "parse_matrix",
    "serialize_matrix",
    "to_dense",
    "beta_disk_3x3",
    "check_4x4_omega3_zero",
    "check_contraction_2x2",
    "check_contraction_3x3",
    "check_contraction_4x4",
    "gamma_disk",
    "FuzzReport",
    "run_fuzz",
    "sample_tri4",
    "DividedDifferenceTable",
    "divided_differences",
    "mobius_divided_closed_form",
    "mobius_scalar",
    "mobius_transform_dense",
    "mobius_transform_triangular",
    "EigenDecomposition",
    "hermitian_eigen",
    "is_contraction_oracle",
    "operator_norm",
    "ParrottBlocks",
    "cholesky_upper",
    "defect_operator",
    "matrix_power_2x2",
    "minimal_column_solution",
    "minimal_row_solution",
    "parrott_check",
    "parrott_corner_disk",
]
