"""φKT-connection: torsion forms, construction of D and torsion identities"""
from .connection_d import build_D, naturality_failure, torsion_mismatch
from .identities import (
    TorsionDiscrepancy,
    corollary_mismatches,
    cyclic_N_mismatch,
    deta_torsion_mismatches,
    inner_T,
    lemma_NT_mismatch,
    norm_T,
    naturality_mismatches,
    torsion_table_discrepancies,
)
from .torsion import (
    WedgeTorsion,
    lowered,
    require_class,
    torsion_T3,
    torsion_T7,
    torsion_T37,
    torsion_T37_wedge,
    torsion_T37a,
    torsion_vector,
)

__all__ = [
    "build_D",
    "naturality_failure",
    "torsion_mismatch",
    "TorsionDiscrepancy",
    "corollary_mismatches",
    "cyclic_N_mismatch",
    "deta_torsion_mismatches",
    "inner_T",
    "lemma_NT_mismatch",
    "norm_T",
    "naturality_mismatches",
    "torsion_table_discrepancies",
    "WedgeTorsion",
    "lowered",
    "require_class",
    "torsion_T3",
    "torsion_T7",
    "torsion_T37",
    "torsion_T37_wedge",
    "torsion_T37a",
    "torsion_vector",
]
