"""
Tests for the torsion and the φKT-connection
"""
from fractions import Fraction

import pytest

from src.exceptions import ClassConditionError
from src.fixtures import (
    FAMILY_D_TABLE,
    FAMILY_SCALARS,
    family_scalar,
    family_space,
    family_torsion_table,
    killing_violation_fixture,
)
from src.ingestion import parse_combination
from src.phikt import (
    corollary_mismatches,
    cyclic_N_mismatch,
    deta_torsion_mismatches,
    lemma_NT_mismatch,
    naturality_failure,
    naturality_mismatches,
    torsion_T37,
    torsion_T37_wedge,
    torsion_T37a,
    torsion_T7,
    torsion_mismatch,
    torsion_table_discrepancies,
)
from src.pipeline import GeometryPipeline


def test_torsion_components(fixc):
    T = fixc.T
    assert T.comps[0, 1, 4] == -2
    assert T.comps[2, 3, 4] == 2
    assert T.comps[1, 0, 4] == 2


def test_torsion_is_skew(family):
    assert family.T.is_alternating()


def test_torsion_formulas_agree(family):
    T = family.T
    assert torsion_T37a(family.structure, family.nabla, family.membership) == T
    assert torsion_T7(family.structure, family.nabla, family.membership) == T
    assert torsion_T37_wedge(family.structure, family.N, family.d_eta, family.membership).total == T


def test_wedge_torsion_summands_at_fixc(fixc):
    wedge = torsion_T37_wedge(fixc.structure, fixc.N, fixc.d_eta, fixc.membership)
    assert fixc.d_eta.comps[0, 1] == -2
    assert fixc.N.comps[0, 1, 4] == -4
    assert wedge.wedge_term.comps[0, 1, 4] == -1
    assert wedge.nijenhuis_term.comps[0, 1, 4] == -1
    assert fixc.T.comps[0, 1, 4] == -2


def test_torsion_requires_class():
    pipeline = GeometryPipeline.from_fixture(killing_violation_fixture())
    with pytest.raises(ClassConditionError):
        torsion_T37(pipeline.alg, pipeline.structure, pipeline.F, pipeline.membership)


def test_torsion_t7_requires_F7():
    pipeline = GeometryPipeline.from_fixture(killing_violation_fixture())
    with pytest.raises(ClassConditionError):
        torsion_T7(pipeline.structure, pipeline.nabla, pipeline.membership)


def test_phikt_connection_table(family):
    space = family_space()
    for i in range(5):
        for j in range(5):
            text = FAMILY_D_TABLE.get((i + 1, j + 1), "0")
            assert family.D.along(i, j) == parse_combination(text, space, 5, basis="E"), (i + 1, j + 1)


def test_phikt_connection_is_natural(family):
    assert naturality_failure(family.alg, family.structure, family.D, family.T) is None
    assert torsion_mismatch(family.alg, family.structure, family.D, family.T) is None


def test_naturality_conditions(family):
    mismatches = naturality_mismatches(family.T.scaled(Fraction(1, 2)), family.F, family.structure)
    assert all(m is None for m in mismatches.values())


def test_torsion_identities(family):
    assert all(m is None for m in corollary_mismatches(family.T, family.nabla, family.structure).values())
    assert lemma_NT_mismatch(family.T, family.N, family.structure) is None
    assert cyclic_N_mismatch(family.T, family.N, family.structure) is None
    mismatches = deta_torsion_mismatches(family.T, family.d_eta, family.F, family.nabla, family.structure)
    assert all(m is None for m in mismatches.values())


def test_norm_T(family, fixc):
    assert family.norm_T == family_scalar(FAMILY_SCALARS["norm_T"])
    assert fixc.norm_T == 48


def test_torsion_table_sign_discrepancy(family):
    discrepancies = torsion_table_discrepancies(family.T, family_torsion_table())
    assert [(d.index, d.kind) for d in discrepancies] == [((1, 2, 5), "sign")]
    assert discrepancies[0].computed == family_scalar("-2*m1")
