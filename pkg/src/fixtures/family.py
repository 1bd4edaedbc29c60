"""
The five-dimensional Lie algebra family with its almost contact B-metric structure
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence

from config.settings import settings
from src.exact import ParamSpace, Scalar
from src.liealg import LieAlgebraSpec, Vector
from src.structure import StructurePack, scalar_matrix

logger = logging.getLogger(__name__)

DIM = 5


@dataclass
class Fixture:
    """A named Lie algebra together with its structure pack"""
    name: str
    alg: LieAlgebraSpec
    structure: StructurePack
    description: str = ""
    assignment: Dict[str, object] = field(default_factory=dict)


def family_space(names: Optional[Sequence[str]] = None) -> ParamSpace:
    """Parameter space λ1..λ4, μ1, μ2 under the configured names"""
    names = list(names or settings.FAMILY_PARAMS)
    if len(names) != 6:
        raise ValueError(f"the family needs six parameter names, got {names}")
    return ParamSpace(names)


def standard_structure(space: ParamSpace) -> StructurePack:
    """φE1 = E3, φE2 = E4, φE3 = -E1, φE4 = -E2, φE5 = 0; ξ = E5; η = e^5; g = diag(1,1,-1,-1,1)"""
    phi = scalar_matrix(space, [
        [0, 0, -1, 0, 0],
        [0, 0, 0, -1, 0],
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ])
    g = scalar_matrix(space, [[1 if i == j and i in (0, 1, 4) else -1 if i == j else 0
                               for j in range(DIM)] for i in range(DIM)])
    xi = Vector.basis(space, DIM, 4)
    eta = [space.zero()] * 4 + [space.one()]
    return StructurePack.build(space, phi, xi, eta, g)


def family_brackets(space: ParamSpace) -> LieAlgebraSpec:
    """[E1,E2] = -[E3,E4] = -λ1E1 - λ2E2 + λ3E3 + λ4E4 + 2μ1E5
    [E1,E4] = -[E2,E3] = -λ3E1 - λ4E2 - λ1E3 - λ2E4 + 2μ2E5"""
    l1, l2, l3, l4, m1, m2 = space.variables()
    first = [-l1, -l2, l3, l4, m1 * 2]
    second = [-l3, -l4, -l1, -l2, m2 * 2]
    return LieAlgebraSpec.from_brackets(DIM, space, {
        (0, 1): first,
        (2, 3): [-v for v in first],
        (0, 3): second,
        (1, 2): [-v for v in second],
    })


def five_dim_family(assignment: Optional[Mapping[str, object]] = None) -> Fixture:
    """The family, symbolic or (partially) specialised"""
    space = family_space()
    alg = family_brackets(space)
    structure = standard_structure(space)
    assignment = dict(assignment or {})
    unknown = [name for name in assignment if name not in space]
    if unknown:
        raise KeyError(f"unknown family parameters: {unknown}")
    if assignment:
        alg = alg.substitute(assignment)
        structure = structure.substitute(assignment)
        logger.debug(f"Family specialised at {assignment}")
    return Fixture("family", alg, structure, "five-dimensional F7 family", assignment)


def named_assignment(values: Sequence[int]) -> Dict[str, int]:
    return dict(zip(settings.FAMILY_PARAMS, values))


FIX_C_VALUES = (1, 0, 0, 0, 1, 0)
EINSTEIN_INSTANCE_VALUES = (1, 0, 1, 0, 1, -1)
F0_VALUES = (1, 0, 0, 0, 0, 0)


def fix_c() -> Fixture:
    fixture = five_dim_family(named_assignment(FIX_C_VALUES))
    fixture.name = "fixc"
    fixture.description = "family at λ1 = μ1 = 1, other parameters 0"
    return fixture


def einstein_instance() -> Fixture:
    fixture = five_dim_family(named_assignment(EINSTEIN_INSTANCE_VALUES))
    fixture.name = "einstein"
    fixture.description = "Ricci-flat member of the family"
    return fixture


def f0_instance() -> Fixture:
    fixture = five_dim_family(named_assignment(F0_VALUES))
    fixture.name = "f0"
    fixture.description = "family with μ1 = μ2 = 0 (class F0)"
    return fixture


def family_scalar(expression: str) -> Scalar:
    """Parse an expression over the family parameters"""
    from src.exact import parse_expr
    return parse_expr(expression, family_space())
