"""
Curvature formula suites for the components F7 and F3 of F3⊕F7
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.classify import ClassMembership, ClassName, isotropic_F0_check
from src.exact import Scalar
from src.levicivita import Connection, covariant_derivative, nabla_phi_vector, nabla_xi, wedge_2_2, xi_norm_form
from src.phikt import require_class, torsion_T3, torsion_vector
from src.structure import Mismatch, StructurePack, Tensor, first_mismatch
from src.curvature.identities import cyclic_gram, sigma_nabla_eta
from src.curvature.tensors import phi_kaehler_check

logger = logging.getLogger(__name__)

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class FormulaOutcome(BaseModel):
    """One identity of a formula suite, possibly skipped for an unmet hypothesis"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str = Field(..., description="Short identifier of the identity")
    statement: str = Field(..., description="Identity as a formula")
    hypothesis: str = Field("", description="Extra hypothesis beyond the class gate")
    hypothesis_met: bool = Field(True, description="Whether the hypothesis holds for the input")
    mismatch: Optional[Mismatch] = Field(None, description="First failing component")

    @property
    def passed(self) -> bool:
        return self.hypothesis_met and self.mismatch is None


@dataclass
class SuiteInputs:
    """Everything the formula suites read"""
    s: StructurePack
    nabla: Connection
    membership: ClassMembership
    T: Tensor
    R: Tensor
    K: Tensor
    rho: Tensor
    rho_D: Tensor
    tau: Scalar
    tau_D: Scalar
    norm_phi: Scalar
    gTT: Tensor
    DT: Tensor
    nabla_eta: Tensor
    d_eta: Tensor

    @property
    def dt_zero(self) -> bool:
        return self.DT.is_zero()

    @property
    def phi_kaehler(self) -> bool:
        return phi_kaehler_check(self.K, self.s)


def _outcome(name: str, statement: str, compute: Callable[[], Optional[Mismatch]],
             hypothesis: str = "", met: bool = True) -> FormulaOutcome:
    if not met:
        logger.debug(f"{name}: hypothesis '{hypothesis}' not met")
        return FormulaOutcome(name=name, statement=statement, hypothesis=hypothesis, hypothesis_met=False)
    return FormulaOutcome(name=name, statement=statement, hypothesis=hypothesis, mismatch=compute())


def _equivalence(space, left: bool, right: bool) -> Optional[Mismatch]:
    """Both sides of an equivalence as truth values 1/0"""
    if left == right:
        return None
    return Mismatch((), space.const(int(left)), space.const(int(right)))


def _scalar_relation(lhs: Scalar, rhs: Scalar) -> Optional[Mismatch]:
    return None if lhs == rhs else Mismatch((), lhs, rhs)


def _xi_gram(inputs: SuiteInputs) -> np.ndarray:
    """G[a, b] = g(∇_a ξ, ∇_b ξ)"""
    s = inputs.s
    derivatives = [nabla_xi(s, inputs.nabla, i) for i in range(s.dim)]
    gram = np.empty((s.dim, s.dim), dtype=object)
    for a, b in np.ndindex(s.dim, s.dim):
        gram[a, b] = s.metric(derivatives[a], derivatives[b])
    return gram


def _xi_terms(eta, G, x, y, z, w) -> Scalar:
    """-η(y)η(z)G(x,w) + η(x)η(z)G(y,w) - η(x)η(w)G(y,z) + η(y)η(w)G(x,z)"""
    return (-eta[y] * eta[z] * G[x, w] + eta[x] * eta[z] * G[y, w]
            - eta[x] * eta[w] * G[y, z] + eta[y] * eta[w] * G[x, z])


def f7_formula_suite(inputs: SuiteInputs) -> List[FormulaOutcome]:
    """Curvature identities on F7

    Raises:
        ClassConditionError: the structure is not in F7
    """
    require_class(inputs.membership, ClassName.F7, "F7 formula suite")
    s, R, K = inputs.s, inputs.R, inputs.K
    eta, e = s.eta, inputs.nabla_eta.comps
    G = _xi_gram(inputs)
    n = s.dim
    dt_zero, phi_k = inputs.dt_zero, inputs.phi_kaehler

    def kr7(x, y, z, w):
        return (R.comps[x, y, z, w] + _xi_terms(eta, G, x, y, z, w)
                + (e[x, y] * e[z, w] * 2 - e[y, z] * e[x, w] - e[z, x] * e[y, w]) * THIRD)

    def kr7_dt0(x, y, z, w):
        return (R.comps[x, y, z, w] + _xi_terms(eta, G, x, y, z, w)
                + e[x, y] * e[z, w] * 2 + e[y, z] * e[x, w] + e[z, x] * e[y, w])

    H = covariant_derivative(inputs.nabla, inputs.nabla_eta).comps

    def kr7_all(x, y, z, w):
        # H[a, b, c] = (∇_a∇_b η)c
        return (kr7_dt0(x, y, z, w)
                - eta[x] * (H[y, z, w] - H[y, w, z]) + eta[y] * (H[x, z, w] - H[x, w, z])
                - eta[z] * (H[x, y, w] - H[y, x, w] + H[y, w, x] - H[x, w, y])
                + eta[w] * (H[x, y, z] - H[y, x, z] + H[y, z, x] - H[x, z, y]))

    def kr7_sk(x, y, z, w):
        return R.comps[x, y, z, w] + e[x, y] * e[z, w] + _xi_terms(eta, G, x, y, z, w)

    def eta_phi(a, b):
        return inputs.nabla_eta.apply(s.basis(a), s.phi_basis(b))

    def r_phi(x, y, z, w):
        return R.apply(s.basis(x), s.basis(y), s.phi_basis(z), s.phi_basis(w))

    def r7f(x, y, z, w):
        return (-R.comps[x, y, z, w] - _xi_terms(eta, G, x, y, z, w)
                + (e[x, z] * e[y, w] - e[x, w] * e[y, z]
                   + eta_phi(x, z) * eta_phi(y, w) - eta_phi(x, w) * eta_phi(y, z)) * THIRD)

    def r_xi(x, y, z):
        return R.apply(s.basis(x), s.basis(y), s.basis(z), s.xi)

    def ricci_relation(y, z):
        return inputs.rho.comps[y, z] - G[y, z] * 2 + eta[y] * eta[z] * inputs.norm_phi * HALF

    def rf37_phi(x, y, z, w):
        tz_w = torsion_vector(inputs.T, s, s.basis(z), s.basis(w))
        tpz_pw = torsion_vector(inputs.T, s, s.phi_basis(z), s.phi_basis(w))
        txy = torsion_vector(inputs.T, s, s.basis(x), s.basis(y))
        return -R.comps[x, y, z, w] - s.metric(txy, tz_w + tpz_pw) * QUARTER

    def rf37_xi(x, y, z):
        txy = torsion_vector(inputs.T, s, s.basis(x), s.basis(y))
        return s.metric(txy, nabla_xi(s, inputs.nabla, z)) * HALF

    def K_of(*index):
        return K.comps[index]

    dd = wedge_2_2(inputs.d_eta, inputs.d_eta)
    outcomes = [
        _outcome("snf7", "‖∇φ‖² = -2 g^{ij} g(∇_iξ, ∇_jξ)",
                 lambda: _scalar_relation(inputs.norm_phi, xi_norm_form(s, inputs.nabla))),
        _outcome("tau_relation_F7", "τ^D = τ + 3/2 ‖∇φ‖²",
                 lambda: _scalar_relation(inputs.tau_D, inputs.tau + inputs.norm_phi * Fraction(3, 2))),
        _outcome("isotropic_iff_equal_scalar_curvatures_F7", "‖∇φ‖² = 0 ⟺ τ = τ^D",
                 lambda: _equivalence(s.space, isotropic_F0_check(inputs.norm_phi), inputs.tau == inputs.tau_D)),
        _outcome("phi_kaehler_iff_KR7", "K φ-Kähler ⟺ K = R + ξ-terms + ⅓{2∇η∇η - ∇η∇η - ∇η∇η}",
                 lambda: _equivalence(s.space, phi_k, first_mismatch(n, 4, K_of, kr7) is None)),
        _outcome("KR7_all", "K = R + ξ-terms + 2(∇_xη)y(∇_zη)w + (∇_yη)z(∇_xη)w + (∇_zη)x(∇_yη)w + η∇∇η-terms",
                 lambda: first_mismatch(n, 4, K_of, kr7_all)),
        _outcome("KR7_DT0", "K = R + ξ-terms + 2(∇_xη)y(∇_zη)w + (∇_yη)z(∇_xη)w + (∇_zη)x(∇_yη)w",
                 lambda: first_mismatch(n, 4, K_of, kr7_dt0), "DT = 0", dt_zero),
        _outcome("KR7_sK_DT0", "K = R + (∇_xη)y(∇_zη)w + ξ-terms",
                 lambda: first_mismatch(n, 4, K_of, kr7_sk), "DT = 0 and K φ-Kähler", dt_zero and phi_k),
        _outcome("ricci_relation_F7", "ρ^D(y,z) = ρ(y,z) - 2g(∇_yξ,∇_zξ) + ½η(y)η(z)‖∇φ‖²",
                 lambda: first_mismatch(n, 2, lambda y, z: inputs.rho_D.comps[y, z], ricci_relation),
                 "K φ-Kähler", phi_k),
        _outcome("R7f", "R(x,y,φz,φw) = -R(x,y,z,w) - ξ-terms + ⅓{...}",
                 lambda: first_mismatch(n, 4, r_phi, r7f), "K φ-Kähler", phi_k),
        _outcome("R7xi", "R(x,y,z,ξ) = η(x)g(∇_yξ,∇_zξ) - η(y)g(∇_xξ,∇_zξ)",
                 lambda: first_mismatch(n, 3, r_xi, lambda x, y, z: eta[x] * G[y, z] - eta[y] * G[x, z]),
                 "K φ-Kähler", phi_k),
        _outcome("Rf37_phi", "R(x,y,φz,φw) = -R(x,y,z,w) - ¼g(T(x,y), T(z,w) + T(φz,φw))",
                 lambda: first_mismatch(n, 4, r_phi, rf37_phi), "DT = 0 and K φ-Kähler", dt_zero and phi_k),
        _outcome("Rf37_xi", "R(x,y,z,ξ) = ½g(T(x,y), ∇_zξ)",
                 lambda: first_mismatch(n, 3, r_xi, rf37_xi), "DT = 0 and K φ-Kähler", dt_zero and phi_k),
        _outcome("sgTT", "𝔖g(T(x,y),T(z,w)) = 4𝔖(∇_xη)y(∇_zη)w",
                 lambda: first_mismatch(n, 4, lambda *i: cyclic_gram(inputs.gTT, *i),
                                        lambda *i: sigma_nabla_eta(inputs.nabla_eta, *i) * 4)),
        _outcome("sgTT_wedge", "𝔖g(T(x,y),T(z,w)) = ½(dη∧dη)(x,y,z,w)",
                 lambda: first_mismatch(n, 4, lambda *i: cyclic_gram(inputs.gTT, *i),
                                        lambda *i: dd.comps[i] * HALF)),
    ]
    return outcomes


def f3_formula_suite(inputs: SuiteInputs) -> List[FormulaOutcome]:
    """Curvature identities on F3

    Raises:
        ClassConditionError: the structure is not in F3
    """
    require_class(inputs.membership, ClassName.F3, "F3 formula suite")
    s, R = inputs.s, inputs.R
    n = s.dim
    dt_zero, phi_k = inputs.dt_zero, inputs.phi_kaehler

    def r_phi(x, y, z, w):
        return R.apply(s.basis(x), s.basis(y), s.phi_basis(z), s.phi_basis(w))

    def r_phi_rhs(x, y, z, w):
        txy = torsion_vector(inputs.T, s, s.basis(x), s.basis(y))
        correction = (nabla_phi_vector(s, inputs.nabla, s.phi_basis(z), s.basis(w))
                      + nabla_phi_vector(s, inputs.nabla, s.basis(w), s.phi_basis(z)))
        return -R.comps[x, y, z, w] + s.metric(txy, correction) * HALF

    zero = s.space.zero()

    def t3_mismatch():
        difference = torsion_T3(s, inputs.nabla, inputs.membership).first_difference(inputs.T)
        return Mismatch(*difference) if difference else None

    return [
        _outcome("T3_equals_T37", "T = ½{2(∇_xφ)φy - (∇_yφ)φx + (∇_{φy}φ)x} on F3", t3_mismatch),
        _outcome("tau_relation_F3", "τ^D = τ + 3/8 ‖∇φ‖²",
                 lambda: _scalar_relation(inputs.tau_D, inputs.tau + inputs.norm_phi * Fraction(3, 8))),
        _outcome("isotropic_iff_equal_scalar_curvatures_F3", "‖∇φ‖² = 0 ⟺ τ = τ^D",
                 lambda: _equivalence(s.space, isotropic_F0_check(inputs.norm_phi), inputs.tau == inputs.tau_D),
                 "K φ-Kähler", phi_k),
        _outcome("R3xi", "R(x,y,z,ξ) = 0",
                 lambda: first_mismatch(n, 3, lambda x, y, z: R.apply(s.basis(x), s.basis(y), s.basis(z), s.xi),
                                        lambda *_: zero),
                 "DT = 0 and K φ-Kähler", dt_zero and phi_k),
        _outcome("R3f", "R(x,y,φz,φw) = -R(x,y,z,w) + ½g(T(x,y), (∇_{φz}φ)w + (∇_wφ)φz)",
                 lambda: first_mismatch(n, 4, r_phi, r_phi_rhs), "DT = 0 and K φ-Kähler", dt_zero and phi_k),
    ]
