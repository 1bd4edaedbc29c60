"""Levi-Civita connection, fundamental tensor and exterior calculus"""
from .connection import (
    Connection,
    ConnectionKind,
    covariant_derivative,
    levi_civita,
    metric_compatibility_mismatch,
    metric_tensor,
    nabla_vector,
    torsion_free_mismatch,
    torsion_vector,
)
from .exterior import d_eta, eta_form, exterior_derivative, wedge_1_2, wedge_2_2
from .fundamental import (
    deta_nabla_eta_mismatch,
    f_symmetry_mismatch,
    fundamental_F,
    killing_check,
    killing_mismatch,
    nabla_eta,
    nabla_eta_tensor,
    nabla_phi,
    nabla_phi_vector,
    nabla_xi,
    square_norm_nabla_phi,
    xi_norm_form,
)

__all__ = [
    "Connection",
    "ConnectionKind",
    "covariant_derivative",
    "levi_civita",
    "metric_compatibility_mismatch",
    "metric_tensor",
    "nabla_vector",
    "torsion_free_mismatch",
    "torsion_vector",
    "d_eta",
    "eta_form",
    "exterior_derivative",
    "wedge_1_2",
    "wedge_2_2",
    "deta_nabla_eta_mismatch",
    "f_symmetry_mismatch",
    "fundamental_F",
    "killing_check",
    "killing_mismatch",
    "nabla_eta",
    "nabla_eta_tensor",
    "nabla_phi",
    "nabla_phi_vector",
    "nabla_xi",
    "square_norm_nabla_phi",
    "xi_norm_form",
]
