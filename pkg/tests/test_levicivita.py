"""
Tests for the Levi-Civita connection, F and exterior derivatives
"""
import pytest

from src.exceptions import NotAlternatingError
from src.fixtures import FAMILY_NABLA_TABLE, FAMILY_SCALARS, family_scalar, family_space, killing_violation_fixture
from src.ingestion import parse_combination
from src.levicivita import (
    d_eta,
    exterior_derivative,
    f_symmetry_mismatch,
    killing_check,
    levi_civita,
    metric_compatibility_mismatch,
    nabla_xi,
    torsion_free_mismatch,
    xi_norm_form,
)
from src.structure import Tensor


def test_family_connection_table(family):
    space = family_space()
    for (i, j), text in FAMILY_NABLA_TABLE.items():
        assert family.nabla.along(i - 1, j - 1) == parse_combination(text, space, 5, basis="E"), (i, j)


def test_connection_is_metric_and_torsion_free(family):
    assert metric_compatibility_mismatch(family.nabla, family.structure) is None
    assert torsion_free_mismatch(family.alg, family.nabla) is None


def test_fixc_connection(fixc):
    space = fixc.structure.space
    assert fixc.nabla.along(0, 1) == parse_combination("-E1 + E5", space, 5, basis="E")
    assert fixc.nabla.along(4, 4).is_zero()


def test_abelian_connection_vanishes(abelian):
    n = abelian.alg.dim
    assert all(abelian.nabla.along(i, j).is_zero() for i in range(n) for j in range(n))
    assert abelian.F.is_zero()


def test_F_symmetries(family):
    assert f_symmetry_mismatch(family.structure, family.F) is None


def test_norm_nabla_phi(family, fixc):
    assert family.norm_nabla_phi == family_scalar(FAMILY_SCALARS["norm_nabla_phi"])
    assert fixc.norm_nabla_phi == -8


def test_xi_norm_form_matches_on_F7(family):
    assert xi_norm_form(family.structure, family.nabla) == family.norm_nabla_phi


def test_nabla_xi(fixc):
    space = fixc.structure.space
    assert nabla_xi(fixc.structure, fixc.nabla, 0) == parse_combination("-E2", space, 5, basis="E")


def test_d_eta(fixc, family):
    assert fixc.d_eta.comps[0, 1] == -2
    assert fixc.d_eta.comps[1, 0] == 2
    assert family.d_eta.comps[0, 3] == family_scalar("-2*m2")
    assert exterior_derivative(family.alg, family.d_eta).is_zero()


def test_killing():
    fixture = killing_violation_fixture()
    conn = levi_civita(fixture.alg, fixture.structure)
    assert not killing_check(fixture.structure, conn)


def test_xi_killing_on_family(family):
    assert killing_check(family.structure, family.nabla)


def test_exterior_derivative_needs_alternating_form(family):
    with pytest.raises(NotAlternatingError):
        exterior_derivative(family.alg, Tensor.from_function(
            family.alg.params, 5, 2, lambda i, j: family.alg.params.one()))


def test_d_eta_matches_direct_formula(fixc):
    assert d_eta(fixc.alg, fixc.structure) == fixc.d_eta
