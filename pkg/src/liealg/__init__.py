"""Lie algebras with exact structure constants"""
from .lie_algebra import (
    JacobiResult,
    LieAlgebraSpec,
    Vector,
    bracket,
    combination,
    format_combination,
    jacobi_check,
    non_abelian_structure_check,
    xi_central_check,
    zero_array,
)

__all__ = [
    "JacobiResult",
    "LieAlgebraSpec",
    "Vector",
    "bracket",
    "combination",
    "format_combination",
    "jacobi_check",
    "non_abelian_structure_check",
    "xi_central_check",
    "zero_array",
]
