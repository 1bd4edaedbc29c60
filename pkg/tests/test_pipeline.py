"""
Tests for the geometry pipeline
"""
import pytest

from src.exceptions import ClassConditionError, StructureValidationError
from src.fixtures import FIX_C_VALUES, jacobi_violation_fixture, killing_violation_fixture, named_assignment
from src.pipeline import GeometryPipeline


def test_invalid_input_blocks_computation():
    pipeline = GeometryPipeline.from_fixture(jacobi_violation_fixture())
    assert not pipeline.jacobi.passed
    assert pipeline.validation.passed
    with pytest.raises(StructureValidationError) as excinfo:
        pipeline.nabla
    assert "Jacobi identity fails at (1, 2, 3, 3)" in str(excinfo.value)


def test_prepare_outside_F3_plus_F7():
    pipeline = GeometryPipeline.from_fixture(killing_violation_fixture())
    assert pipeline.prepare() is False
    with pytest.raises(ClassConditionError):
        pipeline.T


def test_prepare_family(fixc):
    assert fixc.prepare() is True
    stats = fixc.get_stats()
    assert stats["tau"] == "-12"
    assert stats["tau_D"] == "-24"
    assert stats["norm_T"] == "48"
    assert stats["DT_zero"] is True
    assert stats["membership"]["F7"] is True


def test_specialize_matches_fixture(family, fixc):
    specialised = family.specialize(named_assignment(FIX_C_VALUES))
    assert specialised.name == "family"
    assert specialised.assignment == named_assignment(FIX_C_VALUES)
    assert specialised.tau == fixc.tau
    assert specialised.R == fixc.R


def test_family_flags(family, abelian):
    assert family.is_family
    assert not abelian.is_family
    assert abelian.get_stats()["einstein"] is True
