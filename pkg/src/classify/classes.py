"""
Class predicates for the fundamental tensor F
"""
import logging
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field

from src.exact import Scalar
from src.levicivita import Connection, killing_mismatch
from src.structure import Mismatch, StructurePack, Tensor, first_mismatch

logger = logging.getLogger(__name__)


class ClassName(str, Enum):
    F0 = "F0"
    F3 = "F3"
    F7 = "F7"
    F3_PLUS_F7 = "F3plusF7"


class ClassMembership(BaseModel):
    """Membership in the classes relevant for the φKT-connection"""
    F0: bool = Field(..., description="F vanishes identically")
    F3: bool = Field(..., description="Cyclic sum of F vanishes and F(ξ,y,z) = F(x,y,ξ) = 0")
    F7: bool = Field(..., description="Cyclic sum vanishes and F = -F(φx,φy,z) - F(φx,y,φz)")
    F3plusF7: bool = Field(..., description="Cyclic sum vanishes and ξ is Killing")
    mode: str = Field(..., description="'symbolic' for identities in the parameters, 'specialized' otherwise")

    def member_of(self, name: ClassName) -> bool:
        return getattr(self, name.value)


def cyclic_F(F: Tensor, a: int, b: int, c: int) -> Scalar:
    return F.comps[a, b, c] + F.comps[b, c, a] + F.comps[c, a, b]


def _zero(s: StructurePack):
    zero = s.space.zero()
    return lambda *_: zero


def cyclic_mismatch(F: Tensor, s: StructurePack) -> Optional[Mismatch]:
    return first_mismatch(s.dim, 3, lambda a, b, c: cyclic_F(F, a, b, c), _zero(s))


def f3_mismatch(F: Tensor, s: StructurePack) -> Optional[Mismatch]:
    """First failure of 𝔖F = 0, F(ξ,y,z) = 0, F(x,y,ξ) = 0"""
    mismatch = cyclic_mismatch(F, s)
    if mismatch is not None:
        return mismatch
    mismatch = first_mismatch(s.dim, 3, lambda a, b, c: F.apply(s.xi, s.basis(b), s.basis(c)), _zero(s))
    if mismatch is not None:
        return mismatch
    return first_mismatch(s.dim, 3, lambda a, b, c: F.apply(s.basis(a), s.basis(b), s.xi), _zero(s))


def f7_mismatch(F: Tensor, s: StructurePack) -> Optional[Mismatch]:
    """First failure of 𝔖F = 0 and F(x,y,z) = -F(φx,φy,z) - F(φx,y,φz)"""
    mismatch = cyclic_mismatch(F, s)
    if mismatch is not None:
        return mismatch

    def rhs(a, b, c):
        x, y, z = s.basis(a), s.basis(b), s.basis(c)
        phi_x = s.phi_vector(x)
        return -F.apply(phi_x, s.phi_vector(y), z) - F.apply(phi_x, y, s.phi_vector(z))

    return first_mismatch(s.dim, 3, lambda a, b, c: F.comps[a, b, c], rhs)


def f3_plus_f7_mismatch(F: Tensor, s: StructurePack, conn: Connection) -> Optional[Mismatch]:
    return cyclic_mismatch(F, s) or killing_mismatch(s, conn)


def class_membership(F: Tensor, s: StructurePack, conn: Connection) -> ClassMembership:
    """Evaluate the class predicates as polynomial identities"""
    symbolic = any(not value.is_constant() for value in F.comps.flat)
    membership = ClassMembership(
        F0=F.is_zero(),
        F3=f3_mismatch(F, s) is None,
        F7=f7_mismatch(F, s) is None,
        F3plusF7=f3_plus_f7_mismatch(F, s, conn) is None,
        mode="symbolic" if symbolic else "specialized",
    )
    logger.debug(f"Class membership: {membership}")
    return membership


def isotropic_F0_check(norm: Scalar) -> bool:
    """‖∇φ‖² vanishes as a polynomial (or rational)"""
    return norm.is_zero()
