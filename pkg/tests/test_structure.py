"""
Tests for structure packs, metrics and tensors
"""
import numpy as np
import pytest

from src.exact import ParamSpace
from src.exceptions import DegenerateMetricError, DimensionMismatchError, TensorSymmetryError
from src.fixtures import (
    abelian_fixture,
    flipped_metric_fixture,
    five_dim_family,
    standard_structure,
    zero_phi_fixture,
)
from src.structure import (
    Mismatch,
    StructurePack,
    Tensor,
    TensorRole,
    associated_pack,
    first_mismatch,
    metric_inverse,
    metric_signature,
    project_h,
    project_v,
    scalar_matrix,
    validate_structure,
)

EMPTY = ParamSpace()


def test_family_structure_is_valid():
    fixture = five_dim_family()
    report = validate_structure(fixture.alg, fixture.structure)
    assert report.passed, report.violations
    assert report.signature == (2, 3)


def test_associated_metric_gives_valid_structure():
    fixture = abelian_fixture()
    pack = associated_pack(fixture.structure)
    report = validate_structure(fixture.alg, pack)
    assert report.passed, report.violations
    assert pack.g[0, 2] == -1
    assert pack.g[4, 4] == 1


def test_flipped_metric_violations():
    fixture = flipped_metric_fixture()
    report = validate_structure(fixture.alg, fixture.structure)
    assert not report.passed
    assert "eta = g(., xi) fails on E5" in report.violations
    assert any(v.startswith("metric signature") for v in report.violations)


def test_zero_phi_violations():
    fixture = zero_phi_fixture()
    report = validate_structure(fixture.alg, fixture.structure)
    assert not report.passed
    assert "phi^2 = -Id + eta (x) xi fails on E1" in report.violations
    assert "rank of phi is 0, expected 4" in report.violations


def test_metric_inverse():
    g = scalar_matrix(EMPTY, [[2, 1], [1, 1]])
    inverse = metric_inverse(g)
    assert [[inverse[i, j] for j in range(2)] for i in range(2)] == [[1, -1], [-1, 2]]


def test_degenerate_metric():
    base = standard_structure(EMPTY)
    g = scalar_matrix(EMPTY, [[0] * 5 for _ in range(5)])
    with pytest.raises(DegenerateMetricError):
        StructurePack.build(EMPTY, base.phi, base.xi, base.eta, g)


def test_symbolic_pivot_is_degenerate():
    space = ParamSpace(["a"])
    g = scalar_matrix(space, [[0, 0], [0, 0]])
    g[0, 0] = space.var("a")
    g[1, 1] = space.one()
    with pytest.raises(DegenerateMetricError):
        metric_inverse(g)


def test_metric_signature():
    assert metric_signature(scalar_matrix(EMPTY, [[0, 1], [1, 0]])) == (1, 1)
    assert metric_signature(scalar_matrix(EMPTY, [[1, 0, 0], [0, -1, 0], [0, 0, 1]])) == (1, 2)


def test_build_checks_dimensions():
    base = standard_structure(EMPTY)
    with pytest.raises(DimensionMismatchError):
        StructurePack.build(EMPTY, base.phi, base.xi, base.eta[:4], base.g)


def test_projections_split_vectors():
    s = standard_structure(EMPTY)
    x = s.basis(0) + s.basis(4)
    assert project_h(s, x) == s.basis(0)
    assert project_v(s, x) == s.basis(4)


def test_raise_and_lower_are_inverse():
    s = standard_structure(EMPTY)
    x = s.basis(2) + s.basis(4).scale(3)
    assert s.raise_index(s.lower(x)) == x


def test_skew_role_is_validated():
    comps = np.empty((2, 2), dtype=object)
    for index in np.ndindex(2, 2):
        comps[index] = EMPTY.one()
    with pytest.raises(TensorSymmetryError):
        Tensor(EMPTY, 2, comps, TensorRole.D_ETA)


def test_nonzero_components_canonical():
    t = Tensor.from_function(EMPTY, 2, 2, lambda i, j: EMPTY.const(j - i), TensorRole.D_ETA)
    assert [index for index, _ in t.nonzero_components(canonical=True)] == [(0, 1)]
    assert len(list(t.nonzero_components())) == 2


def test_first_mismatch_is_lexicographic():
    mismatch = first_mismatch(3, 2, lambda i, j: EMPTY.const(i * j), lambda i, j: EMPTY.zero())
    assert mismatch == Mismatch((1, 1), EMPTY.one(), EMPTY.zero())
    assert mismatch.one_based() == (2, 2)
