"""Built-in fixtures: the five-dimensional family, its golden tables and control inputs"""
from .family import (
    EINSTEIN_INSTANCE_VALUES,
    F0_VALUES,
    FIX_C_VALUES,
    Fixture,
    einstein_instance,
    f0_instance,
    family_scalar,
    family_space,
    fix_c,
    named_assignment,
    five_dim_family,
    standard_structure,
)
from .controls import (
    NEGATIVE_FIXTURES,
    abelian_fixture,
    broken_non_abelian_fixture,
    flipped_metric_fixture,
    jacobi_violation_fixture,
    killing_violation_fixture,
    zero_phi_fixture,
)
from .golden import (
    FAMILY_D_TABLE,
    FAMILY_K_COMPONENTS,
    FAMILY_K_PAIRS,
    FAMILY_NABLA_TABLE,
    FAMILY_R_COMPONENTS,
    FAMILY_RHO_COMPONENTS,
    FAMILY_RHO_D_COMPONENTS,
    FAMILY_SCALARS,
    FAMILY_TORSION_SIGN_MISPRINTS,
    FAMILY_TORSION_TABLE,
    family_einstein_conditions,
    family_isotropic_equivalences,
    family_torsion_table,
    golden_scalar,
)

FIXTURES = {
    "family": five_dim_family,
    "abelian": abelian_fixture,
    "fixc": fix_c,
    "einstein": einstein_instance,
}

__all__ = [
    "EINSTEIN_INSTANCE_VALUES",
    "F0_VALUES",
    "FIX_C_VALUES",
    "FIXTURES",
    "Fixture",
    "einstein_instance",
    "f0_instance",
    "family_scalar",
    "family_space",
    "fix_c",
    "named_assignment",
    "five_dim_family",
    "standard_structure",
    "NEGATIVE_FIXTURES",
    "abelian_fixture",
    "broken_non_abelian_fixture",
    "flipped_metric_fixture",
    "jacobi_violation_fixture",
    "killing_violation_fixture",
    "zero_phi_fixture",
    "FAMILY_D_TABLE",
    "FAMILY_K_COMPONENTS",
    "FAMILY_K_PAIRS",
    "FAMILY_NABLA_TABLE",
    "FAMILY_R_COMPONENTS",
    "FAMILY_RHO_COMPONENTS",
    "FAMILY_RHO_D_COMPONENTS",
    "FAMILY_SCALARS",
    "FAMILY_TORSION_SIGN_MISPRINTS",
    "FAMILY_TORSION_TABLE",
    "family_einstein_conditions",
    "family_isotropic_equivalences",
    "family_torsion_table",
    "golden_scalar",
]
