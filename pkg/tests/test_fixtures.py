"""
Tests for the built-in fixtures
"""
import pytest

from src.fixtures import (
    FIX_C_VALUES,
    FIXTURES,
    NEGATIVE_FIXTURES,
    family_einstein_conditions,
    family_scalar,
    family_space,
    named_assignment,
    five_dim_family,
)
from src.liealg import jacobi_check


def test_family_space_needs_six_names():
    with pytest.raises(ValueError):
        family_space(["a", "b"])
    assert family_space(["p1", "p2", "p3", "p4", "q1", "q2"]).names[4] == "q1"


def test_unknown_assignment_parameter():
    with pytest.raises(KeyError):
        five_dim_family({"z": 1})


def test_named_assignment():
    assert named_assignment(FIX_C_VALUES) == {"l1": 1, "l2": 0, "l3": 0, "l4": 0, "m1": 1, "m2": 0}


def test_registry_names():
    assert set(FIXTURES) == {"family", "abelian", "fixc", "einstein"}
    for name, factory in FIXTURES.items():
        assert factory().name == name


def test_partial_assignment_keeps_other_parameters():
    fixture = five_dim_family({"m2": 0})
    assert fixture.assignment == {"m2": 0}
    assert fixture.alg.basis_bracket(0, 3)[4].is_zero()
    assert fixture.alg.basis_bracket(0, 1)[4] == family_scalar("2*m1")


@pytest.mark.parametrize("name", sorted(NEGATIVE_FIXTURES))
def test_negative_fixtures_build(name):
    fixture = NEGATIVE_FIXTURES[name]()
    assert fixture.name == name


def test_only_the_jacobi_fixture_breaks_jacobi():
    for name, factory in NEGATIVE_FIXTURES.items():
        assert jacobi_check(factory().alg).passed == (name != "jacobi_violation")


def test_einstein_conditions_are_normalised():
    for condition in family_einstein_conditions():
        assert condition.leading_coefficient() == 1
