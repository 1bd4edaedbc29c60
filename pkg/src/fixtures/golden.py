"""
Closed-form tables of the five-dimensional family, written as expression strings
over l1..l4, m1, m2 (the default FAMILY_PARAMS). Indices are 1-based.
"""
import logging
from typing import Dict, List, Tuple

from src.exact import Scalar
from src.fixtures.family import family_scalar

logger = logging.getLogger(__name__)

LAMBDA = "(l1^2 + l2^2 - l3^2 - l4^2)"
MU = "(m1^2 - m2^2)"
CROSS = "(l1*l3 + l2*l4)"

# ∇_{E_i} E_j
FAMILY_NABLA_TABLE: Dict[Tuple[int, int], str] = {
    (1, 1): "l1*E2 - l3*E4",
    (1, 2): "-l1*E1 + l3*E3 + m1*E5",
    (1, 3): "l3*E2 + l1*E4",
    (1, 4): "-l3*E1 - l1*E3 + m2*E5",
    (1, 5): "-m1*E2 + m2*E4",
    (2, 1): "l2*E2 - l4*E4 - m1*E5",
    (2, 2): "-l2*E1 + l4*E3",
    (2, 3): "l4*E2 + l2*E4 - m2*E5",
    (2, 4): "-l4*E1 - l2*E3",
    (2, 5): "m1*E1 - m2*E3",
    (3, 1): "l3*E2 + l1*E4",
    (3, 2): "-l3*E1 - l1*E3 + m2*E5",
    (3, 3): "-l1*E2 + l3*E4",
    (3, 4): "l1*E1 - l3*E3 - m1*E5",
    (3, 5): "-m2*E2 - m1*E4",
    (4, 1): "l4*E2 + l2*E4 - m2*E5",
    (4, 2): "-l4*E1 - l2*E3",
    (4, 3): "-l2*E2 + l4*E4 + m1*E5",
    (4, 4): "l2*E1 - l4*E3",
    (4, 5): "m2*E1 + m1*E3",
    (5, 1): "-m1*E2 + m2*E4",
    (5, 2): "m1*E1 - m2*E3",
    (5, 3): "-m2*E2 - m1*E4",
    (5, 4): "m2*E1 + m1*E3",
    (5, 5): "0",
}

# D_{E_i} E_j; D_{E_i} E_5 = 0
FAMILY_D_TABLE: Dict[Tuple[int, int], str] = {
    (1, 1): "l1*E2 - l3*E4",
    (1, 2): "-l1*E1 + l3*E3",
    (1, 3): "l3*E2 + l1*E4",
    (1, 4): "-l3*E1 - l1*E3",
    (2, 1): "l2*E2 - l4*E4",
    (2, 2): "-l2*E1 + l4*E3",
    (2, 3): "l4*E2 + l2*E4",
    (2, 4): "-l4*E1 - l2*E3",
    (3, 1): "l3*E2 + l1*E4",
    (3, 2): "-l3*E1 - l1*E3",
    (3, 3): "-l1*E2 + l3*E4",
    (3, 4): "l1*E1 - l3*E3",
    (4, 1): "l4*E2 + l2*E4",
    (4, 2): "-l4*E1 - l2*E3",
    (4, 3): "-l2*E2 + l4*E4",
    (4, 4): "l2*E1 - l4*E3",
    (5, 1): "-2*m1*E2 + 2*m2*E4",
    (5, 2): "2*m1*E1 - 2*m2*E3",
    (5, 3): "-2*m2*E2 - 2*m1*E4",
    (5, 4): "2*m2*E1 + 2*m1*E3",
}

FAMILY_R_COMPONENTS: Dict[Tuple[int, int, int, int], str] = {
    (1, 2, 1, 2): f"{LAMBDA} + 3*m1^2",
    (3, 4, 3, 4): f"{LAMBDA} + 3*m1^2",
    (1, 2, 3, 4): f"-{LAMBDA} - 2*m1^2 + m2^2",
    (3, 4, 1, 2): f"-{LAMBDA} - 2*m1^2 + m2^2",
    (1, 4, 1, 4): f"-{LAMBDA} + 3*m2^2",
    (2, 3, 2, 3): f"-{LAMBDA} + 3*m2^2",
    (1, 4, 2, 3): f"{LAMBDA} + m1^2 - 2*m2^2",
    (2, 3, 1, 4): f"{LAMBDA} + m1^2 - 2*m2^2",
    (1, 2, 1, 4): f"2*{CROSS} + 3*m1*m2",
    (1, 2, 2, 3): f"-2*{CROSS} - 3*m1*m2",
    (2, 3, 1, 2): f"-2*{CROSS} - 3*m1*m2",
    (2, 3, 3, 4): f"2*{CROSS} + 3*m1*m2",
    (1, 4, 1, 2): f"2*{CROSS} + 3*m1*m2",
    (1, 4, 3, 4): f"-2*{CROSS} - 3*m1*m2",
    (3, 4, 1, 4): f"-2*{CROSS} - 3*m1*m2",
    (3, 4, 2, 3): f"2*{CROSS} + 3*m1*m2",
    (1, 3, 2, 4): "-m1^2 - m2^2",
    (2, 4, 1, 3): "-m1^2 - m2^2",
    (1, 5, 3, 5): "-2*m1*m2",
    (2, 5, 4, 5): "-2*m1*m2",
    (1, 5, 1, 5): f"-{MU}",
    (2, 5, 2, 5): f"-{MU}",
    (3, 5, 3, 5): MU,
    (4, 5, 4, 5): MU,
}

FAMILY_K_COMPONENTS: Dict[Tuple[int, int, int, int], str] = {
    (1, 2, 1, 2): f"{LAMBDA} + 4*m1^2",
    (1, 2, 3, 4): f"-{LAMBDA} - 4*m1^2",
    (3, 4, 1, 2): f"-{LAMBDA} - 4*m1^2",
    (3, 4, 3, 4): f"{LAMBDA} + 4*m1^2",
    (1, 4, 1, 4): f"-{LAMBDA} + 4*m2^2",
    (1, 4, 2, 3): f"{LAMBDA} - 4*m2^2",
    (2, 3, 1, 4): f"{LAMBDA} - 4*m2^2",
    (2, 3, 2, 3): f"-{LAMBDA} + 4*m2^2",
    (1, 2, 1, 4): f"2*{CROSS} + 4*m1*m2",
    (1, 2, 2, 3): f"-2*{CROSS} - 4*m1*m2",
    (2, 3, 1, 2): f"-2*{CROSS} - 4*m1*m2",
    (2, 3, 3, 4): f"2*{CROSS} + 4*m1*m2",
    (1, 4, 1, 2): f"2*{CROSS} + 4*m1*m2",
    (1, 4, 3, 4): f"-2*{CROSS} - 4*m1*m2",
    (3, 4, 1, 4): f"-2*{CROSS} - 4*m1*m2",
    (3, 4, 2, 3): f"2*{CROSS} + 4*m1*m2",
}

# K vanishes unless both index pairs are among these
FAMILY_K_PAIRS: Tuple[Tuple[int, int], ...] = ((1, 2), (1, 4), (2, 3), (3, 4))

FAMILY_RHO_COMPONENTS: Dict[Tuple[int, int], str] = {
    (1, 1): f"-2*{LAMBDA} - 2*{MU}",
    (2, 2): f"-2*{LAMBDA} - 2*{MU}",
    (3, 3): f"2*{LAMBDA} + 2*{MU}",
    (4, 4): f"2*{LAMBDA} + 2*{MU}",
    (1, 3): f"-4*{CROSS} - 4*m1*m2",
    (2, 4): f"-4*{CROSS} - 4*m1*m2",
    (5, 5): f"4*{MU}",
}

FAMILY_RHO_D_COMPONENTS: Dict[Tuple[int, int], str] = {
    (1, 1): f"-2*{LAMBDA} - 4*{MU}",
    (2, 2): f"-2*{LAMBDA} - 4*{MU}",
    (3, 3): f"2*{LAMBDA} + 4*{MU}",
    (4, 4): f"2*{LAMBDA} + 4*{MU}",
    (1, 3): f"-4*{CROSS} - 8*m1*m2",
    (2, 4): f"-4*{CROSS} - 8*m1*m2",
    (5, 5): "0",
}

FAMILY_SCALARS: Dict[str, str] = {
    "tau": f"-8*{LAMBDA} - 4*{MU}",
    "tau_D": f"-8*{LAMBDA} - 16*{MU}",
    "norm_nabla_phi": f"-8*{MU}",
    "norm_T": f"48*{MU}",
    "dT_1234": "-8*m1^2 - 8*m2^2",
}

# Tabulated T(E_i,E_j,E_5); the computed T(E1,E2,E5) carries the opposite sign
FAMILY_TORSION_TABLE: Dict[Tuple[int, int, int], str] = {
    (1, 2, 5): "2*m1",
    (3, 4, 5): "2*m1",
    (2, 3, 5): "2*m2",
    (4, 1, 5): "2*m2",
}

# Tabulated entries whose sign is known to be misprinted
FAMILY_TORSION_SIGN_MISPRINTS: Tuple[Tuple[int, int, int], ...] = ((1, 2, 5),)


def golden_scalar(expression: str) -> Scalar:
    return family_scalar(expression)


def family_einstein_conditions() -> List[Scalar]:
    """Normalised polynomials whose simultaneous vanishing makes the family Einstein:
    μ1μ2 = -(λ1λ3 + λ2λ4) and μ1² - μ2² = -⅓(λ1² + λ2² - λ3² - λ4²)"""
    return [
        family_scalar(f"{CROSS} + m1*m2").normalized(),
        family_scalar(f"{LAMBDA} + 3*{MU}").normalized(),
    ]


def family_torsion_table() -> Dict[Tuple[int, int, int], Scalar]:
    return {index: family_scalar(text) for index, text in FAMILY_TORSION_TABLE.items()}


def family_isotropic_equivalences(pipeline) -> Dict[str, bool]:
    """Four conditions that coincide on the family: isotropic-F0, τ = τ^D,
    ∇_{E_i}ξ isotropic for i = 1..4, and μ1² - μ2² = 0"""
    from src.classify import isotropic_F0_check
    from src.levicivita import nabla_xi

    s = pipeline.structure
    xi_isotropic = all(s.metric(v, v).is_zero()
                       for v in (nabla_xi(s, pipeline.nabla, i) for i in range(4)))
    mu = golden_scalar(MU).substitute(pipeline.assignment)
    result = {
        "isotropic": isotropic_F0_check(pipeline.norm_nabla_phi),
        "equal_scalar_curvatures": pipeline.tau == pipeline.tau_D,
        "xi_derivatives_isotropic": xi_isotropic,
        "mu_condition": mu.is_zero(),
    }
    logger.debug(f"Isotropic equivalences: {result}")
    return result
