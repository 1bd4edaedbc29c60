"""Classification of almost contact B-metric structures"""
from .classes import (
    ClassMembership,
    ClassName,
    class_membership,
    cyclic_F,
    cyclic_mismatch,
    f3_mismatch,
    f3_plus_f7_mismatch,
    f7_mismatch,
    isotropic_F0_check,
)
from .lie_conditions import LieClassConditions, lie_class_conditions, two_f_formula_mismatch
from .nijenhuis import (
    nijenhuis,
    nijenhuis_bracket,
    nijenhuis_hv_split,
    nijenhuis_lemma_mismatches,
    nijenhuis_routes_mismatch,
    nijenhuis_vector,
)

__all__ = [
    "ClassMembership",
    "ClassName",
    "class_membership",
    "cyclic_F",
    "cyclic_mismatch",
    "f3_mismatch",
    "f3_plus_f7_mismatch",
    "f7_mismatch",
    "isotropic_F0_check",
    "LieClassConditions",
    "lie_class_conditions",
    "two_f_formula_mismatch",
    "nijenhuis",
    "nijenhuis_bracket",
    "nijenhuis_hv_split",
    "nijenhuis_lemma_mismatches",
    "nijenhuis_routes_mismatch",
    "nijenhuis_vector",
]
