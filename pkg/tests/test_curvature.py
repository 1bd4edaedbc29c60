"""
Tests for curvature, Ricci and scalar curvature of ∇ and D and their identities
"""
import itertools

import pytest

from src.curvature import (
    antisymmetry_mismatch,
    bianchi_mismatch,
    closed_T,
    closed_T_expression,
    closed_T_mismatch,
    dparallel_equivalences,
    einstein_check,
    f3_formula_suite,
    f7_formula_suite,
    kr_dt0_mismatch,
    krsT_equivalence,
    krt_mismatch,
    phi_kaehler_check,
    tdt_mismatch,
)
from src.exact import ParamSpace
from src.exceptions import ClassConditionError
from src.fixtures import (
    FAMILY_K_COMPONENTS,
    FAMILY_K_PAIRS,
    FAMILY_R_COMPONENTS,
    FAMILY_RHO_COMPONENTS,
    FAMILY_RHO_D_COMPONENTS,
    FAMILY_SCALARS,
    family_einstein_conditions,
    family_scalar,
)
from src.levicivita import covariant_derivative
from src.liealg import Vector
from src.structure import StructurePack, Tensor, scalar_matrix


def _zero_based(index):
    return tuple(i - 1 for i in index)


@pytest.mark.parametrize("attribute, table", [
    ("R", FAMILY_R_COMPONENTS),
    ("K", FAMILY_K_COMPONENTS),
    ("rho", FAMILY_RHO_COMPONENTS),
    ("rho_D", FAMILY_RHO_D_COMPONENTS),
])
def test_family_closed_forms(family, attribute, table):
    tensor = getattr(family, attribute)
    for index, text in table.items():
        assert tensor.comps[_zero_based(index)] == family_scalar(text), index


def test_family_K_vanishes_outside_listed_pairs(family):
    for index in itertools.product(range(1, 6), repeat=4):
        if tuple(sorted(index[:2])) in FAMILY_K_PAIRS and tuple(sorted(index[2:])) in FAMILY_K_PAIRS:
            continue
        assert family.K.comps[_zero_based(index)].is_zero(), index


def test_family_scalar_curvatures(family):
    assert family.tau == family_scalar(FAMILY_SCALARS["tau"])
    assert family.tau_D == family_scalar(FAMILY_SCALARS["tau_D"])


def test_fixc_values(fixc):
    assert fixc.R.comps[0, 1, 0, 1] == 4
    assert fixc.R.comps[0, 1, 2, 3] == -3
    assert fixc.R.comps[0, 3, 0, 3] == -1
    assert fixc.K.comps[0, 1, 0, 1] == 5
    assert fixc.tau == -12
    assert fixc.tau_D == -24


def test_curvature_symmetries(family):
    assert antisymmetry_mismatch(family.R) is None
    assert bianchi_mismatch(family.R) is None
    assert antisymmetry_mismatch(family.K) is None


def test_k_is_not_phi_kaehler(fixc):
    assert not phi_kaehler_check(fixc.K, fixc.structure)
    assert krsT_equivalence(fixc.R, fixc.K, fixc.gTT, fixc.structure)


def test_krt_and_tdt(family):
    assert krt_mismatch(family.R, family.K, family.DT, family.gTT) is None
    assert tdt_mismatch(family.tau, family.tau_D, family.norm_T) is None


def test_torsion_is_parallel(family):
    assert family.DT.is_zero()
    assert kr_dt0_mismatch(family.R, family.K, family.gTT) is None


def test_closed_T(family, fixc):
    dT = closed_T(family.alg, family.T)
    assert dT.comps[0, 1, 2, 3] == family_scalar(FAMILY_SCALARS["dT_1234"])
    assert closed_T_mismatch(dT, closed_T_expression(family.DT, family.gTT)) is None
    fixc_dT = closed_T(fixc.alg, fixc.T)
    assert fixc_dT.comps[0, 1, 2, 3] == -8
    assert fixc_dT.comps[1, 2, 3, 4] == 0


def test_dparallel_equivalences(fixc):
    result = dparallel_equivalences(fixc.alg, fixc.DT, fixc.T, fixc.R, fixc.K, fixc.gTT, fixc.structure)
    assert result.applicable
    assert result.consistent
    assert result.closed_T is False


def test_einstein_obstructions(family):
    result = einstein_check(family.rho, family.structure)
    assert not result.passed
    assert set(result.obstructions) == set(family_einstein_conditions())
    assert {str(o) for o in result.obstructions} == {
        "l1*l3 + l2*l4 + m1*m2",
        "l1^2 + l2^2 - l3^2 - l4^2 + 3*m1^2 - 3*m2^2",
    }


def test_einstein_instance_is_ricci_flat(einstein):
    result = einstein.einstein
    assert result.passed
    assert result.constant == 0
    assert einstein.tau == 0
    assert einstein.rho.is_zero()


def test_formula_suites(family):
    outcomes = f7_formula_suite(family.suite_inputs())
    assert outcomes
    assert not [o.name for o in outcomes if o.hypothesis_met and o.mismatch is not None]
    with pytest.raises(ClassConditionError):
        f3_formula_suite(family.suite_inputs())


def test_f3_suite_on_abelian_control(abelian):
    outcomes = f3_formula_suite(abelian.suite_inputs())
    assert all(o.mismatch is None for o in outcomes)


@pytest.mark.parametrize("name", ["family", "fixc"])
def test_kr7_all_holds(request, name):
    pipeline = request.getfixturevalue(name)
    outcomes = {o.name: o for o in f7_formula_suite(pipeline.suite_inputs())}
    assert outcomes["KR7_all"].hypothesis_met
    assert outcomes["KR7_all"].mismatch is None


def test_second_derivative_of_eta_is_nonzero_at_fixc(fixc):
    # KR7_all then exercises its ∇∇η terms
    assert not covariant_derivative(fixc.nabla, fixc.nabla_eta).is_zero()


def test_einstein_ricci_flat_with_zero_diagonal_metric():
    space = ParamSpace()
    zero, one = space.zero(), space.const(1)
    g = scalar_matrix(space, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    phi = scalar_matrix(space, [[0] * 3] * 3)
    s = StructurePack.build(space, phi, Vector.basis(space, 3, 2), [zero, zero, one], g)
    result = einstein_check(Tensor.zeros(space, 3, 2), s)
    assert result.passed
    assert result.constant == 0
    assert result.obstructions == []


def test_einstein_constant_from_off_diagonal_entry():
    space = ParamSpace()
    zero, one = space.zero(), space.const(1)
    g = scalar_matrix(space, [[0, 1], [1, 0]])
    phi = scalar_matrix(space, [[0] * 2] * 2)
    s = StructurePack.build(space, phi, Vector.basis(space, 2, 0), [zero, one], g)
    rho = Tensor.from_function(space, 2, 2, lambda i, j: g[i, j] * 3)
    result = einstein_check(rho, s)
    assert result.passed
    assert result.constant == 3
