"""
Curvature, Ricci and scalar curvature of left-invariant connections
"""
import logging
from typing import Optional

import numpy as np

from src.exact import Scalar
from src.levicivita import Connection, ConnectionKind
from src.liealg import LieAlgebraSpec
from src.structure import Mismatch, StructurePack, Tensor, TensorRole, first_mismatch

logger = logging.getLogger(__name__)


def curvature_tensor(alg: LieAlgebraSpec, conn: Connection, s: StructurePack) -> Tensor:
    """L(x,y,z,w) = g(∇_x∇_y z - ∇_y∇_x z - ∇_[x,y] z, w); role R for ∇, K for D"""
    n = alg.dim
    gamma, c = conn.gamma, alg.c
    zero = s.space.zero()
    comps = np.empty((n, n, n, n), dtype=object)
    for i, j, k in np.ndindex(n, n, n):
        vector = [zero] * n
        for m in range(n):
            g_jk, g_ik, c_ij = gamma[j, k, m], gamma[i, k, m], c[i, j, m]
            for l in range(n):
                term = zero
                if not g_jk.is_zero() and not gamma[i, m, l].is_zero():
                    term = term + g_jk * gamma[i, m, l]
                if not g_ik.is_zero() and not gamma[j, m, l].is_zero():
                    term = term - g_ik * gamma[j, m, l]
                if not c_ij.is_zero() and not gamma[m, k, l].is_zero():
                    term = term - c_ij * gamma[m, k, l]
                if not term.is_zero():
                    vector[l] = vector[l] + term
        for l in range(n):
            total = zero
            for a in range(n):
                if not vector[a].is_zero() and not s.g[a, l].is_zero():
                    total = total + vector[a] * s.g[a, l]
            comps[i, j, k, l] = total
    role = TensorRole.R if conn.kind == ConnectionKind.LEVI_CIVITA else TensorRole.K
    logger.debug(f"Curvature tensor computed for {conn.kind.value}")
    return Tensor(s.space, n, comps, role)


def curvature_K_table(alg: LieAlgebraSpec, D: Connection, s: StructurePack) -> Tensor:
    return curvature_tensor(alg, D, s)


def ricci(L: Tensor, s: StructurePack) -> Tensor:
    """ρ(y,z) = g^{ij} L(e_i, y, z, e_j)"""
    n = s.dim

    def component(y, z):
        total = s.space.zero()
        for i, j in np.ndindex(n, n):
            if not s.g_inv[i, j].is_zero() and not L.comps[i, y, z, j].is_zero():
                total = total + s.g_inv[i, j] * L.comps[i, y, z, j]
        return total

    role = TensorRole.RHO if L.role == TensorRole.R else TensorRole.RHO_D
    return Tensor.from_function(s.space, n, 2, component, role)


def scalar_curv(rho: Tensor, s: StructurePack) -> Scalar:
    """τ = g^{ij} ρ(e_i, e_j)"""
    total = s.space.zero()
    for i, j in np.ndindex(s.dim, s.dim):
        if not s.g_inv[i, j].is_zero():
            total = total + s.g_inv[i, j] * rho.comps[i, j]
    return total


def bianchi_mismatch(L: Tensor) -> Optional[Mismatch]:
    """First Bianchi identity 𝔖_{x,y,z} L(x,y,z,w) = 0"""
    zero = L.space.zero()
    c = L.comps
    return first_mismatch(L.dim, 4, lambda x, y, z, w: c[x, y, z, w] + c[y, z, x, w] + c[z, x, y, w],
                          lambda *_: zero)


def antisymmetry_mismatch(L: Tensor) -> Optional[Mismatch]:
    """L(x,y,z,w) = -L(y,x,z,w) = -L(x,y,w,z)"""
    c = L.comps
    mismatch = first_mismatch(L.dim, 4, lambda x, y, z, w: c[x, y, z, w], lambda x, y, z, w: -c[y, x, z, w])
    if mismatch is not None:
        return mismatch
    return first_mismatch(L.dim, 4, lambda x, y, z, w: c[x, y, z, w], lambda x, y, z, w: -c[x, y, w, z])


def phi_invariance_mismatch(L: Tensor, s: StructurePack) -> Optional[Mismatch]:
    """L(x,y,φz,φw) = -L(x,y,z,w)"""
    def lhs(x, y, z, w):
        return L.apply(s.basis(x), s.basis(y), s.phi_basis(z), s.phi_basis(w))

    return first_mismatch(L.dim, 4, lhs, lambda x, y, z, w: -L.comps[x, y, z, w])


def phi_kaehler_mismatch(L: Tensor, s: StructurePack) -> Optional[Mismatch]:
    """Bianchi identity together with L(x,y,φz,φw) = -L(x,y,z,w)"""
    return bianchi_mismatch(L) or phi_invariance_mismatch(L, s)


def phi_kaehler_check(L: Tensor, s: StructurePack) -> bool:
    return phi_kaehler_mismatch(L, s) is None
