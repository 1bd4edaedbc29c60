"""
The φKT-connection D = ∇ + ½T
"""
import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from src.exceptions import NaturalityError
from src.levicivita import Connection, ConnectionKind, covariant_derivative, metric_tensor, nabla_vector
from src.liealg import LieAlgebraSpec, zero_array
from src.structure import Mismatch, StructurePack, Tensor, first_mismatch

logger = logging.getLogger(__name__)


def build_D(alg: LieAlgebraSpec, s: StructurePack, nabla: Connection, T: Tensor) -> Connection:
    """g(D_x y, z) = g(∇_x y, z) + ½T(x, y, z)

    Raises:
        NaturalityError: D does not preserve (φ, ξ, η, g) or its torsion is not T
    """
    n = alg.dim
    gamma = zero_array(s.space, (n, n, n))
    for i in range(n):
        for j in range(n):
            shift = s.raise_index([T.comps[i, j, k] * Fraction(1, 2) for k in range(n)])
            for k in range(n):
                gamma[i, j, k] = nabla.gamma[i, j, k] + shift[k]
    D = Connection(s.space, gamma, ConnectionKind.PHIKT)

    failure = naturality_failure(alg, s, D, T)
    if failure is not None:
        raise NaturalityError(failure)
    logger.debug("φKT-connection built and verified natural")
    return D


def naturality_failure(alg: LieAlgebraSpec, s: StructurePack, D: Connection, T: Tensor) -> Optional[str]:
    """Description of the first violated property of D, None when natural with torsion T"""
    n = alg.dim
    for i in range(n):
        x = s.basis(i)
        if not nabla_vector(D, x, s.xi).is_zero():
            return f"D xi != 0 along E{i + 1}"
        for j in range(n):
            y = s.basis(j)
            d_phi = nabla_vector(D, x, s.phi_vector(y)) - s.phi_vector(nabla_vector(D, x, y))
            if not d_phi.is_zero():
                return f"D phi != 0 at (E{i + 1}, E{j + 1})"
            if not s.eta_of(nabla_vector(D, x, y)).is_zero():
                return f"D eta != 0 at (E{i + 1}, E{j + 1})"

    d_g = covariant_derivative(D, metric_tensor(s))
    if not d_g.is_zero():
        return "D g != 0"

    mismatch = torsion_mismatch(alg, s, D, T)
    if mismatch is not None:
        return f"torsion of D differs from T at {mismatch.one_based()}"
    return None


def torsion_mismatch(alg: LieAlgebraSpec, s: StructurePack, D: Connection, T: Tensor) -> Optional[Mismatch]:
    """g(D_x y - D_y x - [x, y], z) against T(x, y, z)"""
    n = alg.dim
    vectors = np.empty((n, n), dtype=object)
    for i, j in np.ndindex(n, n):
        x, y = s.basis(i), s.basis(j)
        vectors[i, j] = nabla_vector(D, x, y) - nabla_vector(D, y, x) - alg.basis_bracket(i, j)
    return first_mismatch(n, 3, lambda a, b, c: s.metric(vectors[a, b], s.basis(c)), lambda a, b, c: T.comps[a, b, c])
