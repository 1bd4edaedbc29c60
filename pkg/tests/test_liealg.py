"""
Tests for Lie algebras given by structure constants
"""
import pytest

from src.exact import ParamSpace
from src.exceptions import DimensionMismatchError
from src.fixtures import (
    abelian_fixture,
    broken_non_abelian_fixture,
    jacobi_violation_fixture,
    killing_violation_fixture,
    five_dim_family,
)
from src.liealg import (
    LieAlgebraSpec,
    Vector,
    bracket,
    format_combination,
    jacobi_check,
    non_abelian_structure_check,
    xi_central_check,
    zero_array,
)


@pytest.fixture(scope="module")
def family_fixture():
    return five_dim_family()


def test_from_brackets_is_antisymmetric(family_fixture):
    alg = family_fixture.alg
    for i in range(alg.dim):
        for j in range(alg.dim):
            assert alg.basis_bracket(i, j) == -alg.basis_bracket(j, i)


def test_rejects_non_antisymmetric_constants():
    space = ParamSpace()
    c = zero_array(space, (3, 3, 3))
    c[0, 1, 2] = space.one()
    with pytest.raises(ValueError):
        LieAlgebraSpec(3, space, c)


def test_rejects_wrong_shape():
    space = ParamSpace()
    with pytest.raises(DimensionMismatchError):
        LieAlgebraSpec(3, space, zero_array(space, (2, 2, 2)))


def test_bracket_is_bilinear(family_fixture):
    alg = family_fixture.alg
    x = alg.basis(0) + alg.basis(2)
    y = alg.basis(1)
    expected = alg.basis_bracket(0, 1) + alg.basis_bracket(2, 1)
    assert bracket(alg, x, y) == expected
    assert bracket(alg, x, x).is_zero()


def test_family_satisfies_jacobi(family_fixture):
    assert jacobi_check(family_fixture.alg).passed


def test_jacobi_witness():
    result = jacobi_check(jacobi_violation_fixture().alg)
    assert not result.passed
    assert result.witness == (1, 2, 3, 3)
    assert result.residual == -1


def test_non_abelian_structure(family_fixture):
    assert non_abelian_structure_check(family_fixture.alg, family_fixture.structure)
    broken = broken_non_abelian_fixture()
    assert not non_abelian_structure_check(broken.alg, broken.structure)


def test_xi_central(family_fixture):
    assert xi_central_check(family_fixture.alg, family_fixture.structure)
    fixture = killing_violation_fixture()
    assert not xi_central_check(fixture.alg, fixture.structure)


def test_abelian():
    alg = abelian_fixture().alg
    assert alg.is_abelian()
    assert alg.nonzero_brackets() == []


def test_nonzero_brackets_of_family(family_fixture):
    pairs = [(i + 1, j + 1) for i, j, _ in family_fixture.alg.nonzero_brackets()]
    assert pairs == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_substitute_specialises_constants(family_fixture):
    alg = family_fixture.alg.substitute({"l1": 1, "l2": 0, "l3": 0, "l4": 0, "m1": 1, "m2": 0})
    space = alg.params
    assert alg.basis_bracket(0, 1) == Vector(space, [space.const(v) for v in (-1, 0, 0, 0, 2)])


def test_format_combination():
    space = ParamSpace(["l1", "m1"])
    l1, m1 = space.variables()
    comps = [space.const(-1), space.zero(), l1 - m1, m1 * 2, space.one()]
    assert format_combination(comps) == "-E1 + (l1 - m1)*E3 + 2*m1*E4 + E5"
    assert format_combination([space.zero()] * 3, "e") == "0"


def test_vector_arithmetic():
    space = ParamSpace(["a"])
    a = space.var("a")
    x = Vector.basis(space, 3, 0).scale(a)
    y = Vector.basis(space, 3, 2)
    assert (x + y - x) == y
    assert (-x).substitute({"a": 2}) == Vector.basis(space, 3, 0).scale(-2)
