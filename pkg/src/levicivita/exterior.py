"""
Exterior calculus of left-invariant forms (Chevalley-Eilenberg, no prefactor)
"""
import itertools
import logging

import numpy as np

from src.exceptions import NotAlternatingError
from src.liealg import LieAlgebraSpec
from src.structure import StructurePack, Tensor, TensorRole

logger = logging.getLogger(__name__)


def exterior_derivative(alg: LieAlgebraSpec, t: Tensor, role: TensorRole = TensorRole.GENERIC) -> Tensor:
    """dt(x_0..x_p) = Σ_{i<j} (-1)^{i+j} t([x_i, x_j], x_0..x̂_i..x̂_j..x_p)

    Raises:
        NotAlternatingError: t is not an alternating form
    """
    if not t.is_alternating():
        raise NotAlternatingError(f"exterior derivative needs an alternating form (role {t.role.value})")
    n = alg.dim
    p = t.valence
    comps = np.empty((n,) * (p + 1), dtype=object)
    for index in np.ndindex(comps.shape):
        total = alg.params.zero()
        for i, j in itertools.combinations(range(p + 1), 2):
            rest = [index[k] for k in range(p + 1) if k != i and k != j]
            sign = -1 if (i + j) % 2 else 1
            for m in range(n):
                coeff = alg.c[index[i], index[j], m]
                if coeff.is_zero():
                    continue
                value = t.comps[tuple([m] + rest)]
                if not value.is_zero():
                    total = total + coeff * value * sign
        comps[index] = total
    return Tensor(alg.params, n, comps, role)


def wedge_1_2(alpha: Tensor, beta: Tensor) -> Tensor:
    """(α∧β)(x,y,z) = α(x)β(y,z) + α(y)β(z,x) + α(z)β(x,y)"""
    a, b = alpha.comps, beta.comps
    return Tensor.from_function(
        alpha.space, alpha.dim, 3,
        lambda x, y, z: a[x] * b[y, z] + a[y] * b[z, x] + a[z] * b[x, y],
    )


def wedge_2_2(alpha: Tensor, beta: Tensor) -> Tensor:
    """Six-term shuffle sum of two 2-forms"""
    a, b = alpha.comps, beta.comps
    return Tensor.from_function(
        alpha.space, alpha.dim, 4,
        lambda x, y, z, w: (a[x, y] * b[z, w] - a[x, z] * b[y, w] + a[x, w] * b[y, z]
                            + a[y, z] * b[x, w] - a[y, w] * b[x, z] + a[z, w] * b[x, y]),
    )


def eta_form(s: StructurePack) -> Tensor:
    comps = np.empty((s.dim,), dtype=object)
    for i, value in enumerate(s.eta):
        comps[i] = value
    return Tensor(s.space, s.dim, comps)


def d_eta(alg: LieAlgebraSpec, s: StructurePack) -> Tensor:
    """dη(x, y) = -η([x, y])"""
    return exterior_derivative(alg, eta_form(s), TensorRole.D_ETA)
