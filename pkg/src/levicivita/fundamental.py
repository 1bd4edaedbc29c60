"""
Covariant derivatives of the structure tensors: ∇φ, ∇ξ, ∇η and the fundamental tensor F
"""
import logging
from typing import Optional

import numpy as np

from src.exact import Scalar
from src.liealg import LieAlgebraSpec, Vector
from src.levicivita.connection import Connection, nabla_vector
from src.structure import Mismatch, StructurePack, Tensor, TensorRole, first_mismatch

logger = logging.getLogger(__name__)


def nabla_phi_vector(s: StructurePack, conn: Connection, x: Vector, y: Vector) -> Vector:
    """(∇_x φ) y = ∇_x(φy) - φ(∇_x y)"""
    return nabla_vector(conn, x, s.phi_vector(y)) - s.phi_vector(nabla_vector(conn, x, y))


def nabla_phi(s: StructurePack, conn: Connection) -> np.ndarray:
    """Table of vectors (∇_{E_i} φ) E_j"""
    n = s.dim
    table = np.empty((n, n), dtype=object)
    for i, j in np.ndindex(n, n):
        table[i, j] = nabla_phi_vector(s, conn, s.basis(i), s.basis(j))
    return table


def fundamental_F(alg: LieAlgebraSpec, s: StructurePack, conn: Connection) -> Tensor:
    """F(x, y, z) = g((∇_x φ) y, z)"""
    table = nabla_phi(s, conn)
    return Tensor.from_function(s.space, alg.dim, 3,
                                lambda a, b, c: s.metric(table[a, b], s.basis(c)),
                                TensorRole.F)


def nabla_xi(s: StructurePack, conn: Connection, i: int) -> Vector:
    """∇_{E_i} ξ (0-based i)"""
    return nabla_vector(conn, s.basis(i), s.xi)


def nabla_eta(s: StructurePack, conn: Connection, x: Vector, y: Vector) -> Scalar:
    """(∇_x η) y = -η(∇_x y) for invariant η"""
    return -s.eta_of(nabla_vector(conn, x, y))


def nabla_eta_tensor(s: StructurePack, conn: Connection) -> Tensor:
    return Tensor.from_function(s.space, s.dim, 2,
                                lambda a, b: nabla_eta(s, conn, s.basis(a), s.basis(b)))


def square_norm_nabla_phi(s: StructurePack, conn: Connection) -> Scalar:
    """‖∇φ‖² = g^{ij} g^{ks} g((∇_i φ) e_k, (∇_j φ) e_s)"""
    table = nabla_phi(s, conn)
    n = s.dim
    total = s.space.zero()
    for i, j in np.ndindex(n, n):
        if s.g_inv[i, j].is_zero():
            continue
        for k, m in np.ndindex(n, n):
            weight = s.g_inv[k, m]
            if weight.is_zero():
                continue
            value = s.metric(table[i, k], table[j, m])
            if not value.is_zero():
                total = total + s.g_inv[i, j] * weight * value
    return total


def xi_norm_form(s: StructurePack, conn: Connection) -> Scalar:
    """-2 g^{ij} g(∇_i ξ, ∇_j ξ), equal to ‖∇φ‖² on F7"""
    n = s.dim
    derivatives = [nabla_xi(s, conn, i) for i in range(n)]
    total = s.space.zero()
    for i, j in np.ndindex(n, n):
        if not s.g_inv[i, j].is_zero():
            total = total + s.g_inv[i, j] * s.metric(derivatives[i], derivatives[j])
    return total * -2


def killing_mismatch(s: StructurePack, conn: Connection) -> Optional[Mismatch]:
    """First pair where (∇_x η) y + (∇_y η) x is nonzero"""
    table = nabla_eta_tensor(s, conn)
    zero = s.space.zero()
    return first_mismatch(s.dim, 2, lambda a, b: table.comps[a, b] + table.comps[b, a], lambda *_: zero)


def killing_check(s: StructurePack, conn: Connection) -> bool:
    return killing_mismatch(s, conn) is None


def f_symmetry_mismatch(s: StructurePack, F: Tensor) -> Optional[Mismatch]:
    """F(x,y,z) = F(x,z,y) = F(x,φy,φz) + η(y)F(x,ξ,z) + η(z)F(x,y,ξ)"""
    mismatch = first_mismatch(s.dim, 3, lambda a, b, c: F.comps[a, b, c], lambda a, b, c: F.comps[a, c, b])
    if mismatch is not None:
        return mismatch

    def rhs(a, b, c):
        x, y, z = s.basis(a), s.basis(b), s.basis(c)
        return (F.apply(x, s.phi_vector(y), s.phi_vector(z))
                + s.eta[b] * F.apply(x, s.xi, z)
                + s.eta[c] * F.apply(x, y, s.xi))

    return first_mismatch(s.dim, 3, lambda a, b, c: F.comps[a, b, c], rhs)


def deta_nabla_eta_mismatch(s: StructurePack, conn: Connection, d_eta: Tensor) -> Optional[Mismatch]:
    """dη(x, y) = 2(∇_x η) y, valid when ξ is Killing"""
    table = nabla_eta_tensor(s, conn)
    return first_mismatch(s.dim, 2, lambda a, b: d_eta.comps[a, b], lambda a, b: table.comps[a, b] * 2)
