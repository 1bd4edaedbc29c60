"""Structure packs, metric algebra and covariant tensors"""
from .metric import identity_matrix, matmul, matrix_rank, metric_inverse, metric_signature, scalar_matrix
from .structure_pack import (
    StructurePack,
    ValidationReport,
    associated_metric,
    associated_pack,
    phi_rank,
    project_h,
    project_v,
    validate_structure,
)
from .tensor import Mismatch, Tensor, TensorRole, first_mismatch

__all__ = [
    "identity_matrix",
    "matmul",
    "matrix_rank",
    "metric_inverse",
    "metric_signature",
    "scalar_matrix",
    "StructurePack",
    "ValidationReport",
    "associated_metric",
    "associated_pack",
    "phi_rank",
    "project_h",
    "project_v",
    "validate_structure",
    "Mismatch",
    "Tensor",
    "TensorRole",
    "first_mismatch",
]
