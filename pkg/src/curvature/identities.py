"""
Identities between R, K, T and DT, the D-parallel equivalences and the Einstein condition
"""
import logging
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.exact import Scalar
from src.liealg import LieAlgebraSpec
from src.levicivita import Connection, covariant_derivative, exterior_derivative
from src.phikt import inner_T
from src.structure import Mismatch, StructurePack, Tensor, TensorRole, first_mismatch
from src.curvature.tensors import phi_kaehler_check

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def torsion_gram(T: Tensor, s: StructurePack) -> Tensor:
    """gTT(x,y,z,w) = g(T(x,y), T(z,w))"""
    return Tensor.from_function(s.space, s.dim, 4, lambda x, y, z, w: inner_T(T, s, x, y, z, w))


def cyclic_gram(gTT: Tensor, x: int, y: int, z: int, w: int) -> Scalar:
    """𝔖_{x,y,z} g(T(x,y), T(z,w))"""
    c = gTT.comps
    return c[x, y, z, w] + c[y, z, x, w] + c[z, x, y, w]


def torsion_derivative(D: Connection, T: Tensor) -> Tensor:
    """DT with the direction as first slot"""
    return covariant_derivative(D, T)


def krt_mismatch(R: Tensor, K: Tensor, DT: Tensor, gTT: Tensor) -> Optional[Mismatch]:
    """K = R + ½(D_xT)(y,z,w) - ½(D_yT)(x,z,w) + ¼g(T(x,y),T(z,w)) + ¼𝔖g(T(x,y),T(z,w))"""
    d = DT.comps

    def rhs(x, y, z, w):
        return (R.comps[x, y, z, w] + (d[x, y, z, w] - d[y, x, z, w]) * HALF
                + (gTT.comps[x, y, z, w] + cyclic_gram(gTT, x, y, z, w)) * QUARTER)

    return first_mismatch(K.dim, 4, lambda *i: K.comps[i], rhs)


def tdt_mismatch(tau: Scalar, tau_D: Scalar, norm: Scalar) -> Optional[Mismatch]:
    """τ^D = τ - ¼‖T‖²"""
    rhs = tau - norm * QUARTER
    return None if tau_D == rhs else Mismatch((), tau_D, rhs)


def kr_sT_mismatch(R: Tensor, K: Tensor, gTT: Tensor) -> Optional[Mismatch]:
    """K = R + ¼g(T(x,y),T(z,w)) - 1/12 𝔖g(T(x,y),T(z,w))"""
    def rhs(x, y, z, w):
        return (R.comps[x, y, z, w] + gTT.comps[x, y, z, w] * QUARTER
                - cyclic_gram(gTT, x, y, z, w) * Fraction(1, 12))

    return first_mismatch(K.dim, 4, lambda *i: K.comps[i], rhs)


def krsT_equivalence(R: Tensor, K: Tensor, gTT: Tensor, s: StructurePack) -> bool:
    """φ-Kähler type of K holds exactly when K has the KRsT form"""
    return phi_kaehler_check(K, s) == (kr_sT_mismatch(R, K, gTT) is None)


def kr_dt0_mismatch(R: Tensor, K: Tensor, gTT: Tensor) -> Optional[Mismatch]:
    """K = R + ¼g(T(x,y),T(z,w)) + ¼𝔖g(T(x,y),T(z,w)) for D-parallel T"""
    def rhs(x, y, z, w):
        return R.comps[x, y, z, w] + (gTT.comps[x, y, z, w] + cyclic_gram(gTT, x, y, z, w)) * QUARTER

    return first_mismatch(K.dim, 4, lambda *i: K.comps[i], rhs)


def closed_T(alg: LieAlgebraSpec, T: Tensor) -> Tensor:
    """dT in the Chevalley-Eilenberg convention"""
    return exterior_derivative(alg, T, TensorRole.DT)


def closed_T_expression(DT: Tensor, gTT: Tensor) -> Tensor:
    """𝔖_{x,y,z}(D_xT)(y,z,w) - (D_wT)(x,y,z) + 2𝔖g(T(x,y),T(z,w))"""
    d = DT.comps

    def component(x, y, z, w):
        return (d[x, y, z, w] + d[y, z, x, w] + d[z, x, y, w] - d[w, x, y, z]
                + cyclic_gram(gTT, x, y, z, w) * 2)

    return Tensor.from_function(DT.space, DT.dim, 4, component, TensorRole.GENERIC)


def closed_T_mismatch(dT: Tensor, expression: Tensor) -> Optional[Mismatch]:
    difference = dT.first_difference(expression)
    return Mismatch(*difference) if difference else None


class DParallelEquivalences(BaseModel):
    """Equivalent conditions for a φKT-connection with D-parallel torsion"""
    applicable: bool = Field(..., description="DT = 0 holds")
    closed_T: Optional[bool] = Field(None, description="dT = 0 (Chevalley-Eilenberg)")
    closed_T_expression: Optional[bool] = Field(None, description="D-based expression of dT vanishes")
    sigma_TT_zero: Optional[bool] = Field(None, description="Cyclic sum of g(T(x,y),T(z,w)) vanishes")
    K_form3: Optional[bool] = Field(None, description="K is φ-Kähler and K = R + ¼g(T(x,y),T(z,w))")

    @property
    def consistent(self) -> bool:
        if not self.applicable:
            return True
        return len({self.closed_T, self.closed_T_expression, self.sigma_TT_zero, self.K_form3}) == 1


def dparallel_equivalences(alg: LieAlgebraSpec, DT: Tensor, T: Tensor, R: Tensor, K: Tensor,
                           gTT: Tensor, s: StructurePack) -> DParallelEquivalences:
    if not DT.is_zero():
        logger.debug("Torsion is not D-parallel; equivalences not applicable")
        return DParallelEquivalences(applicable=False)
    zero = s.space.zero()
    sigma_zero = first_mismatch(s.dim, 4, lambda *i: cyclic_gram(gTT, *i), lambda *_: zero) is None
    form3 = first_mismatch(s.dim, 4, lambda *i: K.comps[i],
                           lambda *i: R.comps[i] + gTT.comps[i] * QUARTER) is None
    return DParallelEquivalences(
        applicable=True,
        closed_T=closed_T(alg, T).is_zero(),
        closed_T_expression=closed_T_expression(DT, gTT).is_zero(),
        sigma_TT_zero=sigma_zero,
        K_form3=form3 and phi_kaehler_check(K, s),
    )


class EinsteinResult(BaseModel):
    """Einstein condition ρ = c·g"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    passed: bool = Field(..., description="ρ - c·g vanishes identically")
    constant: Optional[Scalar] = Field(None, description="c = ρ_ij / g_ij at a constant nonzero g_ij")
    obstructions: List[Scalar] = Field(default_factory=list, description="Distinct normalised residuals")


def einstein_check(rho: Tensor, s: StructurePack) -> EinsteinResult:
    """Einstein condition with the polynomial obstructions to it"""
    n = s.dim
    if rho.is_zero():
        return EinsteinResult(passed=True, constant=s.space.zero())
    entries = [(k, k) for k in range(n)] + [(i, j) for i in range(n) for j in range(n) if i != j]
    pivot = next((ij for ij in entries if s.g[ij].is_constant() and not s.g[ij].is_zero()), None)
    if pivot is None:
        logger.warning("No constant nonzero metric entry; Einstein constant undefined")
        return EinsteinResult(passed=False)
    constant = rho.comps[pivot] / s.g[pivot]
    obstructions: List[Scalar] = []
    for i in range(n):
        for j in range(i, n):
            residual = rho.comps[i, j] - constant * s.g[i, j]
            if residual.is_zero():
                continue
            normalized = residual.normalized()
            if normalized not in obstructions:
                obstructions.append(normalized)
    return EinsteinResult(passed=not obstructions, constant=constant, obstructions=obstructions)


def einstein_constant_mismatch(tau: Scalar, einstein: EinsteinResult, dim: int) -> Optional[Mismatch]:
    """τ = dim·c for an Einstein metric"""
    rhs = einstein.constant * dim
    return None if tau == rhs else Mismatch((), tau, rhs)


def sigma_nabla_eta(nabla_eta: Tensor, x: int, y: int, z: int, w: int) -> Scalar:
    """𝔖_{x,y,z} (∇_xη)y (∇_zη)w"""
    e = nabla_eta.comps
    return e[x, y] * e[z, w] + e[y, z] * e[x, w] + e[z, x] * e[y, w]
