"""
Torsion 3-forms of the φKT-connection
"""
import logging
from fractions import Fraction
from typing import Callable

from pydantic import BaseModel, ConfigDict, Field

from src.classify import ClassMembership, ClassName
from src.exceptions import ClassConditionError
from src.levicivita import Connection, nabla_eta, nabla_phi_vector, nabla_xi, wedge_1_2, eta_form
from src.liealg import LieAlgebraSpec, Vector
from src.structure import StructurePack, Tensor, TensorRole

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def require_class(membership: ClassMembership, name: ClassName, what: str):
    """Raise ClassConditionError unless the structure belongs to the class"""
    if not membership.member_of(name):
        if name == ClassName.F3_PLUS_F7:
            raise ClassConditionError("φKT-connection does not exist: structure is not in F3⊕F7")
        raise ClassConditionError(f"{what} requires class {name.value}")


def torsion_vector(T: Tensor, s: StructurePack, x: Vector, y: Vector) -> Vector:
    """T(x, y) as a vector: g(T(x, y), z) = T(x, y, z)"""
    return s.raise_index([T.apply(x, y, s.basis(k)) for k in range(s.dim)])


def lowered(s: StructurePack, fn: Callable[[Vector, Vector], Vector], role=TensorRole.T) -> Tensor:
    """(0,3) tensor g(fn(E_a, E_b), E_c) from a (1,2) formula"""
    table = {}
    for a in range(s.dim):
        for b in range(s.dim):
            table[a, b] = fn(s.basis(a), s.basis(b))
    return Tensor.from_function(s.space, s.dim, 3, lambda a, b, c: s.metric(table[a, b], s.basis(c)), role)


def torsion_T37(alg: LieAlgebraSpec, s: StructurePack, F: Tensor, membership: ClassMembership) -> Tensor:
    """T(x,y,z) = -½ 𝔖 {F(x,y,φz) - 3η(x)F(y,φz,ξ)}

    Raises:
        ClassConditionError: the structure is not in F3⊕F7
    """
    require_class(membership, ClassName.F3_PLUS_F7, "torsion")

    def term(a, b, c):
        x, y, z = s.basis(a), s.basis(b), s.basis(c)
        value = F.apply(x, y, s.phi_vector(z))
        if not s.eta[a].is_zero():
            value = value - s.eta[a] * F.apply(y, s.phi_vector(z), s.xi) * 3
        return value

    return Tensor.from_function(
        s.space, alg.dim, 3,
        lambda a, b, c: (term(a, b, c) + term(b, c, a) + term(c, a, b)) * -HALF,
        TensorRole.T,
    )


class WedgeTorsion(BaseModel):
    """Torsion assembled from η∧dη and the cyclic sum of N"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    wedge_term: Tensor = Field(..., description="½(η∧dη)")
    nijenhuis_term: Tensor = Field(..., description="¼ cyclic sum of N")
    total: Tensor = Field(..., description="Sum of both summands")


def torsion_T37_wedge(s: StructurePack, N: Tensor, d_eta: Tensor, membership: ClassMembership) -> WedgeTorsion:
    """T = ½(η∧dη) + ¼𝔖N"""
    require_class(membership, ClassName.F3_PLUS_F7, "torsion")
    wedge = wedge_1_2(eta_form(s), d_eta).scaled(HALF)
    cyclic = Tensor.from_function(
        s.space, s.dim, 3,
        lambda a, b, c: (N.comps[a, b, c] + N.comps[b, c, a] + N.comps[c, a, b]) * QUARTER,
    )
    return WedgeTorsion(wedge_term=wedge, nijenhuis_term=cyclic, total=(wedge + cyclic).with_role(TensorRole.T))


def torsion_T3(s: StructurePack, conn: Connection, membership: ClassMembership) -> Tensor:
    """T(x,y) = ½{2(∇_xφ)φy - (∇_yφ)φx + (∇_{φy}φ)x}"""
    require_class(membership, ClassName.F3, "horizontal torsion form")

    def vector(x, y):
        return (nabla_phi_vector(s, conn, x, s.phi_vector(y)).scale(2)
                - nabla_phi_vector(s, conn, y, s.phi_vector(x))
                + nabla_phi_vector(s, conn, s.phi_vector(y), x)).scale(HALF)

    return lowered(s, vector)


def torsion_T7(s: StructurePack, conn: Connection, membership: ClassMembership) -> Tensor:
    """T(x,y) = 2{η(x)∇_yξ - η(y)∇_xξ + (∇_xη)y ξ}"""
    require_class(membership, ClassName.F7, "vertical torsion form")
    return lowered(s, lambda x, y: _vertical_part(s, conn, x, y, 1, 1).scale(2))


def _vertical_part(s, conn, x, y, first, second) -> Vector:
    """first·η(x)∇_yξ - second·η(y)∇_xξ + (∇_xη)y ξ with integer weights"""
    result = s.xi.scale(nabla_eta(s, conn, x, y))
    eta_x, eta_y = s.eta_of(x), s.eta_of(y)
    if not eta_x.is_zero():
        result = result + _nabla_along(s, conn, y).scale(eta_x * first)
    if not eta_y.is_zero():
        result = result - _nabla_along(s, conn, x).scale(eta_y * second)
    return result


def _nabla_along(s: StructurePack, conn: Connection, x: Vector) -> Vector:
    """∇_x ξ for a general vector x"""
    total = Vector.zero(s.space, s.dim)
    for i in range(s.dim):
        if not x[i].is_zero():
            total = total + nabla_xi(s, conn, i).scale(x[i])
    return total


def torsion_T37a(s: StructurePack, conn: Connection, membership: ClassMembership) -> Tensor:
    """(1,2) form ½{2(∇_xφ)φy - (∇_yφ)φx + (∇_{φy}φ)x + 3η(x)∇_yξ - 4η(y)∇_xξ + 2(∇_xη)y ξ}, lowered"""
    require_class(membership, ClassName.F3_PLUS_F7, "torsion")

    def vector(x, y):
        horizontal = (nabla_phi_vector(s, conn, x, s.phi_vector(y)).scale(2)
                      - nabla_phi_vector(s, conn, y, s.phi_vector(x))
                      + nabla_phi_vector(s, conn, s.phi_vector(y), x))
        vertical = _vertical_part(s, conn, x, y, 3, 4) + s.xi.scale(nabla_eta(s, conn, x, y))
        return (horizontal + vertical).scale(HALF)

    return lowered(s, vector)
