"""
Abelian control and negative fixtures, each breaking one requirement
"""
import logging

from src.exact import ParamSpace
from src.liealg import LieAlgebraSpec, Vector
from src.structure import StructurePack, scalar_matrix
from src.fixtures.family import DIM, Fixture, standard_structure

logger = logging.getLogger(__name__)

EMPTY = ParamSpace()


def _rational(space: ParamSpace, values):
    return [space.const(v) for v in values]


def abelian_fixture() -> Fixture:
    """Five-dimensional abelian algebra with the standard structure; every tensor vanishes"""
    alg = LieAlgebraSpec.from_brackets(DIM, EMPTY, {})
    return Fixture("abelian", alg, standard_structure(EMPTY), "abelian control")


def jacobi_violation_fixture() -> Fixture:
    """[E1,E2] = E3, [E1,E3] = E2, [E2,E3] = E2: Jacobi fails first at (1,2,3,3)"""
    alg = LieAlgebraSpec.from_brackets(3, EMPTY, {
        (0, 1): _rational(EMPTY, [0, 0, 1]),
        (0, 2): _rational(EMPTY, [0, 1, 0]),
        (1, 2): _rational(EMPTY, [0, 1, 0]),
    })
    phi = scalar_matrix(EMPTY, [[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    g = scalar_matrix(EMPTY, [[1, 0, 0], [0, -1, 0], [0, 0, 1]])
    structure = StructurePack.build(EMPTY, phi, Vector.basis(EMPTY, 3, 2), _rational(EMPTY, [0, 0, 1]), g)
    return Fixture("jacobi_violation", alg, structure, "bracket violating the Jacobi identity")


def killing_violation_fixture() -> Fixture:
    """[E5,E1] = E1 with the standard structure; ξ is not Killing"""
    alg = LieAlgebraSpec.from_brackets(DIM, EMPTY, {(4, 0): _rational(EMPTY, [1, 0, 0, 0, 0])})
    return Fixture("killing_violation", alg, standard_structure(EMPTY), "ξ acts non-isometrically")


def broken_non_abelian_fixture() -> Fixture:
    """Only [E1,E2] = E5: [φE1,φE2] = 0 differs from -[E1,E2]"""
    alg = LieAlgebraSpec.from_brackets(DIM, EMPTY, {(0, 1): _rational(EMPTY, [0, 0, 0, 0, 1])})
    return Fixture("broken_non_abelian", alg, standard_structure(EMPTY), "Heisenberg bracket, not non-Abelian")


def flipped_metric_fixture() -> Fixture:
    """Standard structure with g55 = -1: compatibility, η = g(·,ξ) and the signature fail"""
    base = standard_structure(EMPTY)
    rows = [[0] * DIM for _ in range(DIM)]
    for i, value in enumerate([1, 1, -1, -1, -1]):
        rows[i][i] = value
    structure = StructurePack.build(EMPTY, base.phi, base.xi, base.eta, scalar_matrix(EMPTY, rows))
    alg = LieAlgebraSpec.from_brackets(DIM, EMPTY, {})
    return Fixture("flipped_metric", alg, structure, "g(ξ,ξ) = -1")


def zero_phi_fixture() -> Fixture:
    """φ = 0 with the standard ξ, η, g"""
    base = standard_structure(EMPTY)
    phi = scalar_matrix(EMPTY, [[0] * DIM for _ in range(DIM)])
    structure = StructurePack.build(EMPTY, phi, base.xi, base.eta, base.g)
    alg = LieAlgebraSpec.from_brackets(DIM, EMPTY, {})
    return Fixture("zero_phi", alg, structure, "φ vanishes")


NEGATIVE_FIXTURES = {
    "jacobi_violation": jacobi_violation_fixture,
    "killing_violation": killing_violation_fixture,
    "broken_non_abelian": broken_non_abelian_fixture,
    "flipped_metric": flipped_metric_fixture,
    "zero_phi": zero_phi_fixture,
}
