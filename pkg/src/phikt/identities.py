"""
Identities relating the φKT torsion to F, N, dη and ∇
"""
import logging
from typing import Dict, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.exact import Scalar
from src.levicivita import Connection, nabla_eta_tensor, nabla_phi_vector
from src.phikt.torsion import torsion_vector
from src.structure import Mismatch, StructurePack, Tensor, first_mismatch

logger = logging.getLogger(__name__)


def naturality_mismatches(Q: Tensor, F: Tensor, s: StructurePack) -> Dict[str, Optional[Mismatch]]:
    """Naturality conditions for D = ∇ + Q

    (1a) Q(x,y,φz) - Q(x,φy,z) = F(x,y,z)
    (1b) Q(x,y,z) = -Q(x,z,y)
    """
    def lhs_1a(a, b, c):
        x, y, z = s.basis(a), s.basis(b), s.basis(c)
        return Q.apply(x, y, s.phi_vector(z)) - Q.apply(x, s.phi_vector(y), z)

    return {
        "1a": first_mismatch(s.dim, 3, lhs_1a, lambda a, b, c: F.comps[a, b, c]),
        "1b": first_mismatch(s.dim, 3, lambda a, b, c: Q.comps[a, b, c], lambda a, b, c: -Q.comps[a, c, b]),
    }


def corollary_mismatches(T: Tensor, nabla: Connection, s: StructurePack) -> Dict[str, Optional[Mismatch]]:
    """T(x,φy) = φT(x,y) - 2(∇_xφ)y and T(φx,y) = φT(x,y) + 2(∇_yφ)x, compared after lowering"""
    def left_slot(a, b, c):
        x, y = s.basis(a), s.basis(b)
        return s.metric(torsion_vector(T, s, x, s.phi_vector(y)), s.basis(c))

    def left_rhs(a, b, c):
        x, y = s.basis(a), s.basis(b)
        vector = s.phi_vector(torsion_vector(T, s, x, y)) - nabla_phi_vector(s, nabla, x, y).scale(2)
        return s.metric(vector, s.basis(c))

    def right_slot(a, b, c):
        x, y = s.basis(a), s.basis(b)
        return s.metric(torsion_vector(T, s, s.phi_vector(x), y), s.basis(c))

    def right_rhs(a, b, c):
        x, y = s.basis(a), s.basis(b)
        vector = s.phi_vector(torsion_vector(T, s, x, y)) + nabla_phi_vector(s, nabla, y, x).scale(2)
        return s.metric(vector, s.basis(c))

    return {
        "T(x,phi y)": first_mismatch(s.dim, 3, left_slot, left_rhs),
        "T(phi x,y)": first_mismatch(s.dim, 3, right_slot, right_rhs),
    }


def _phi_terms(T: Tensor, s: StructurePack, a: int, b: int, c: int) -> Tuple[Scalar, Scalar, Scalar]:
    """T(x,φy,φz), T(φx,y,φz), T(φx,φy,z)"""
    x, y, z = s.basis(a), s.basis(b), s.basis(c)
    px, py, pz = s.phi_vector(x), s.phi_vector(y), s.phi_vector(z)
    return T.apply(x, py, pz), T.apply(px, y, pz), T.apply(px, py, z)


def lemma_NT_mismatch(T: Tensor, N: Tensor, s: StructurePack) -> Optional[Mismatch]:
    """N(x,y,z) = T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) - T(φx,φy,z)"""
    def rhs(a, b, c):
        first, second, third = _phi_terms(T, s, a, b, c)
        return T.comps[a, b, c] + first + second - third

    return first_mismatch(s.dim, 3, lambda a, b, c: N.comps[a, b, c], rhs)


def cyclic_N_mismatch(T: Tensor, N: Tensor, s: StructurePack) -> Optional[Mismatch]:
    """𝔖N = 3T + T(x,φy,φz) + T(φx,y,φz) + T(φx,φy,z)"""
    def lhs(a, b, c):
        return N.comps[a, b, c] + N.comps[b, c, a] + N.comps[c, a, b]

    def rhs(a, b, c):
        return T.comps[a, b, c] * 3 + sum(_phi_terms(T, s, a, b, c), s.space.zero())

    return first_mismatch(s.dim, 3, lhs, rhs)


def deta_torsion_mismatches(T: Tensor, d_eta: Tensor, F: Tensor, nabla: Connection,
                            s: StructurePack) -> Dict[str, Optional[Mismatch]]:
    """dη(x,y) = 2(∇_xη)y = T(x,y,ξ) = 2F(x,φy,ξ)"""
    nabla_eta = nabla_eta_tensor(s, nabla)
    n = s.dim

    def deta(a, b):
        return d_eta.comps[a, b]

    return {
        "2 nabla eta": first_mismatch(n, 2, deta, lambda a, b: nabla_eta.comps[a, b] * 2),
        "T(x,y,xi)": first_mismatch(n, 2, deta, lambda a, b: T.apply(s.basis(a), s.basis(b), s.xi)),
        "2F(x,phi y,xi)": first_mismatch(
            n, 2, deta, lambda a, b: F.apply(s.basis(a), s.phi_vector(s.basis(b)), s.xi) * 2),
    }


def inner_T(T: Tensor, s: StructurePack, i: int, k: int, j: int, m: int) -> Scalar:
    """g(T(E_i,E_k), T(E_j,E_m)) = T_ik· g^-1 T_jm·"""
    total = s.space.zero()
    n = s.dim
    for a in range(n):
        left = T.comps[i, k, a]
        if left.is_zero():
            continue
        for b in range(n):
            if not s.g_inv[a, b].is_zero() and not T.comps[j, m, b].is_zero():
                total = total + left * s.g_inv[a, b] * T.comps[j, m, b]
    return total


def norm_T(T: Tensor, s: StructurePack) -> Scalar:
    """‖T‖² = g^{ij} g^{ks} g(T(e_i,e_k), T(e_j,e_s))"""
    n = s.dim
    total = s.space.zero()
    for i in range(n):
        for j in range(n):
            if s.g_inv[i, j].is_zero():
                continue
            for k in range(n):
                for m in range(n):
                    if not s.g_inv[k, m].is_zero():
                        total = total + s.g_inv[i, j] * s.g_inv[k, m] * inner_T(T, s, i, k, j, m)
    return total


class TorsionDiscrepancy(BaseModel):
    """Tabulated torsion component that differs from the computed one"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    index: Tuple[int, int, int] = Field(..., description="1-based component index")
    tabulated: Scalar = Field(..., description="Value as tabulated")
    computed: Scalar = Field(..., description="Value computed from T")
    kind: str = Field(..., description="'sign' when computed = -tabulated, otherwise 'value'")


def torsion_table_discrepancies(T: Tensor, tabulated: Mapping[Tuple[int, int, int], Scalar]) -> List[TorsionDiscrepancy]:
    """Compare 1-based tabulated components with T"""
    discrepancies = []
    for index, value in tabulated.items():
        computed = T.comps[tuple(i - 1 for i in index)]
        if computed != value:
            kind = "sign" if computed == -value else "value"
            logger.debug(f"Torsion component T{index} tabulated {value}, computed {computed}")
            discrepancies.append(TorsionDiscrepancy(index=index, tabulated=value, computed=computed, kind=kind))
    return discrepancies
