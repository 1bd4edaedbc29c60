"""
Left-invariant linear connections and the Levi-Civita connection
"""
import logging
from enum import Enum
from typing import Optional

import numpy as np

from src.exact import ParamSpace
from src.exceptions import DimensionMismatchError
from src.liealg import LieAlgebraSpec, Vector, bracket, zero_array
from src.structure import Mismatch, StructurePack, Tensor, TensorRole, first_mismatch

logger = logging.getLogger(__name__)


class ConnectionKind(str, Enum):
    LEVI_CIVITA = "levi_civita"
    PHIKT = "phikt"


class Connection:
    """Christoffel table: gamma[i, j, k] is the E_k component of ∇_{E_i} E_j"""

    def __init__(self, space: ParamSpace, gamma: np.ndarray, kind: ConnectionKind):
        dim = gamma.shape[0]
        if gamma.shape != (dim, dim, dim):
            raise DimensionMismatchError(f"connection table has shape {gamma.shape}")
        self.space = space
        self.gamma = gamma
        self.kind = ConnectionKind(kind)

    @property
    def dim(self) -> int:
        return self.gamma.shape[0]

    def along(self, i: int, j: int) -> Vector:
        """∇_{E_i} E_j"""
        return Vector(self.space, self.gamma[i, j, :])

    def substitute(self, values) -> "Connection":
        gamma = np.empty_like(self.gamma)
        for index in np.ndindex(gamma.shape):
            gamma[index] = self.gamma[index].substitute(values)
        return Connection(self.space, gamma, self.kind)


def levi_civita(alg: LieAlgebraSpec, s: StructurePack) -> Connection:
    """Koszul formula 2g(∇_X Y, Z) = g([X,Y],Z) + g([Z,X],Y) + g([Z,Y],X), raised with g^-1"""
    n = alg.dim
    space = alg.params
    lowered = zero_array(space, (n, n, n))
    for i, j, k in np.ndindex(n, n, n):
        total = space.zero()
        for m in range(n):
            if not alg.c[i, j, m].is_zero() and not s.g[m, k].is_zero():
                total = total + alg.c[i, j, m] * s.g[m, k]
        lowered[i, j, k] = total

    gamma = zero_array(space, (n, n, n))
    for i, j in np.ndindex(n, n):
        koszul = [(lowered[i, j, k] + lowered[k, i, j] + lowered[k, j, i]) / 2 for k in range(n)]
        for k, value in enumerate(s.raise_index(koszul).comps):
            gamma[i, j, k] = value
    logger.debug(f"Levi-Civita connection computed for dimension {n}")
    return Connection(space, gamma, ConnectionKind.LEVI_CIVITA)


def nabla_vector(conn: Connection, x: Vector, y: Vector) -> Vector:
    """Bilinear extension ∇_x y of the basis table"""
    if x.dim != conn.dim or y.dim != conn.dim:
        raise DimensionMismatchError(f"vectors must have dimension {conn.dim}")
    result = [conn.space.zero()] * conn.dim
    for i in range(conn.dim):
        if x[i].is_zero():
            continue
        for j in range(conn.dim):
            if y[j].is_zero():
                continue
            factor = x[i] * y[j]
            for k in range(conn.dim):
                if not conn.gamma[i, j, k].is_zero():
                    result[k] = result[k] + factor * conn.gamma[i, j, k]
    return Vector(conn.space, result)


def covariant_derivative(conn: Connection, t: Tensor) -> Tensor:
    """(∇t)(a, b_1..b_p) = -Σ_s t(b_1, .., ∇_{E_a} E_{b_s}, .., b_p) for invariant t"""
    n = conn.dim
    valence = t.valence
    comps = np.empty((n,) * (valence + 1), dtype=object)
    for index in np.ndindex(comps.shape):
        a, rest = index[0], list(index[1:])
        total = conn.space.zero()
        for slot in range(valence):
            b = rest[slot]
            for m in range(n):
                coeff = conn.gamma[a, b, m]
                if coeff.is_zero():
                    continue
                rest[slot] = m
                value = t.comps[tuple(rest)]
                if not value.is_zero():
                    total = total - coeff * value
            rest[slot] = b
        comps[index] = total
    return Tensor(conn.space, n, comps, TensorRole.GENERIC, validate=False)


def metric_tensor(s: StructurePack) -> Tensor:
    return Tensor(s.space, s.dim, s.g.copy(), TensorRole.GENERIC, validate=False)


def torsion_vector(alg: LieAlgebraSpec, conn: Connection, x: Vector, y: Vector) -> Vector:
    """∇_x y - ∇_y x - [x, y]"""
    return nabla_vector(conn, x, y) - nabla_vector(conn, y, x) - bracket(alg, x, y)


def metric_compatibility_mismatch(conn: Connection, s: StructurePack) -> Optional[Mismatch]:
    """First nonzero component of ∇g"""
    nabla_g = covariant_derivative(conn, metric_tensor(s))
    zero = s.space.zero()
    return first_mismatch(s.dim, 3, lambda a, b, c: nabla_g.comps[a, b, c], lambda *_: zero)


def torsion_free_mismatch(alg: LieAlgebraSpec, conn: Connection) -> Optional[Mismatch]:
    """First (i, j, k) where ∇ has nonzero torsion"""
    n = alg.dim

    def torsion(i, j, k):
        return conn.gamma[i, j, k] - conn.gamma[j, i, k] - alg.c[i, j, k]

    zero = alg.params.zero()
    return first_mismatch(n, 3, torsion, lambda *_: zero)
