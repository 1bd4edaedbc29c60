"""
Class conditions for non-Abelian structures in terms of the Lie bracket
"""
import logging
from typing import Optional

from pydantic import BaseModel, Field

from src.exceptions import NotNonAbelianError
from src.liealg import LieAlgebraSpec, bracket, non_abelian_structure_check
from src.structure import Mismatch, StructurePack, Tensor, first_mismatch

logger = logging.getLogger(__name__)


class LieClassConditions(BaseModel):
    """Bracket characterisation of the subclasses of F3⊕F7"""
    F3: bool = Field(..., description="η([X,Y]) = 0")
    F7: bool = Field(..., description="φ[φX,Y] = φ²[X,Y]")
    F0: bool = Field(..., description="[X,Y] = -φ[φX,Y]")


def _vector_condition(alg: LieAlgebraSpec, lhs, rhs) -> bool:
    n = alg.dim
    return all(lhs(alg.basis(i), alg.basis(j)) == rhs(alg.basis(i), alg.basis(j))
               for i in range(n) for j in range(n))


def lie_class_conditions(alg: LieAlgebraSpec, s: StructurePack) -> LieClassConditions:
    """Evaluate the bracket conditions; only meaningful for non-Abelian structures

    Raises:
        NotNonAbelianError: [φX, φY] = -[X, Y] fails
    """
    if not non_abelian_structure_check(alg, s):
        raise NotNonAbelianError()
    n = alg.dim
    f3 = all(s.eta_of(bracket(alg, alg.basis(i), alg.basis(j))).is_zero() for i in range(n) for j in range(n))
    f7 = _vector_condition(
        alg,
        lambda x, y: s.phi_vector(bracket(alg, s.phi_vector(x), y)),
        lambda x, y: s.phi_vector(s.phi_vector(bracket(alg, x, y))),
    )
    f0 = _vector_condition(
        alg,
        lambda x, y: bracket(alg, x, y),
        lambda x, y: -s.phi_vector(bracket(alg, s.phi_vector(x), y)),
    )
    return LieClassConditions(F3=f3, F7=f7, F0=f0)


def two_f_formula_mismatch(alg: LieAlgebraSpec, s: StructurePack, F: Tensor) -> Optional[Mismatch]:
    """2F(X,Y,Z) = g([X,φY] - φ[X,Y], Z) + g([X,φZ] - φ[X,Z], Y)"""
    def rhs(a, b, c):
        x, y, z = s.basis(a), s.basis(b), s.basis(c)
        first = bracket(alg, x, s.phi_vector(y)) - s.phi_vector(bracket(alg, x, y))
        second = bracket(alg, x, s.phi_vector(z)) - s.phi_vector(bracket(alg, x, z))
        return s.metric(first, z) + s.metric(second, y)

    return first_mismatch(alg.dim, 3, lambda a, b, c: F.comps[a, b, c] * 2, rhs)
