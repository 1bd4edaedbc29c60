"""Curvature of ∇ and D, curvature identities and formula suites"""
from .identities import (
    DParallelEquivalences,
    EinsteinResult,
    closed_T,
    closed_T_expression,
    closed_T_mismatch,
    cyclic_gram,
    dparallel_equivalences,
    einstein_check,
    einstein_constant_mismatch,
    kr_dt0_mismatch,
    kr_sT_mismatch,
    krsT_equivalence,
    krt_mismatch,
    sigma_nabla_eta,
    tdt_mismatch,
    torsion_derivative,
    torsion_gram,
)
from .suites import FormulaOutcome, SuiteInputs, f3_formula_suite, f7_formula_suite
from .tensors import (
    antisymmetry_mismatch,
    bianchi_mismatch,
    curvature_K_table,
    curvature_tensor,
    phi_invariance_mismatch,
    phi_kaehler_check,
    phi_kaehler_mismatch,
    ricci,
    scalar_curv,
)

__all__ = [
    "DParallelEquivalences",
    "EinsteinResult",
    "closed_T",
    "closed_T_expression",
    "closed_T_mismatch",
    "cyclic_gram",
    "dparallel_equivalences",
    "einstein_check",
    "einstein_constant_mismatch",
    "kr_dt0_mismatch",
    "kr_sT_mismatch",
    "krsT_equivalence",
    "krt_mismatch",
    "sigma_nabla_eta",
    "tdt_mismatch",
    "torsion_derivative",
    "torsion_gram",
    "FormulaOutcome",
    "SuiteInputs",
    "f3_formula_suite",
    "f7_formula_suite",
    "antisymmetry_mismatch",
    "bianchi_mismatch",
    "curvature_K_table",
    "curvature_tensor",
    "phi_invariance_mismatch",
    "phi_kaehler_check",
    "phi_kaehler_mismatch",
    "ricci",
    "scalar_curv",
]
