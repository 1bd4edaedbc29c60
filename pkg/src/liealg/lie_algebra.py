"""
Lie algebras given by exact structure constants
"""
import itertools
import logging
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.exact import ParamSpace, Scalar
from src.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


class Vector:
    """Coefficient tuple over the basis E_1..E_dim"""

    __slots__ = ("space", "comps")

    def __init__(self, space: ParamSpace, comps: Sequence[Scalar]):
        self.space = space
        self.comps: Tuple[Scalar, ...] = tuple(comps)

    @classmethod
    def zero(cls, space: ParamSpace, dim: int) -> "Vector":
        return cls(space, [space.zero()] * dim)

    @classmethod
    def basis(cls, space: ParamSpace, dim: int, index: int) -> "Vector":
        """Basis vector E_{index+1} (0-based index)"""
        comps = [space.zero()] * dim
        comps[index] = space.one()
        return cls(space, comps)

    @property
    def dim(self) -> int:
        return len(self.comps)

    def _check(self, other: "Vector"):
        if other.dim != self.dim:
            raise DimensionMismatchError(f"vector dimensions differ: {self.dim} vs {other.dim}")

    def __getitem__(self, index: int) -> Scalar:
        return self.comps[index]

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.space, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.space, [a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self) -> "Vector":
        return Vector(self.space, [-a for a in self.comps])

    def scale(self, factor) -> "Vector":
        return Vector(self.space, [factor * a for a in self.comps])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.comps == other.comps

    def __hash__(self) -> int:
        return hash(self.comps)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.comps)

    def substitute(self, values: Mapping) -> "Vector":
        return Vector(self.space, [a.substitute(values) for a in self.comps])

    def __str__(self) -> str:
        return format_combination(self.comps)

    def __repr__(self) -> str:
        return f"Vector({self})"


def format_combination(comps: Sequence[Scalar], basis: str = "E") -> str:
    """Render Σ c_k E_k, e.g. '-l1*E1 + (l2 - m1)*E3'"""
    pieces = []
    for k, coeff in enumerate(comps):
        if coeff.is_zero():
            continue
        name = f"{basis}{k + 1}"
        terms = coeff.ordered_terms()
        negative = len(terms) == 1 and terms[0][1] < 0
        magnitude = -coeff if negative else coeff
        if magnitude == 1:
            body = name
        elif len(terms) == 1:
            body = f"{magnitude}*{name}"
        else:
            body = f"({magnitude})*{name}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"


class JacobiResult(BaseModel):
    """Outcome of the Jacobi identity check"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    passed: bool = Field(..., description="Jacobi identity holds as a polynomial identity")
    witness: Optional[Tuple[int, int, int, int]] = Field(None, description="First failing (i,j,k,l), 1-based")
    residual: Optional[Scalar] = Field(None, description="Nonzero Jacobi sum at the witness")


class LieAlgebraSpec:
    """Finite-dimensional Lie algebra with structure constants c[i][j][k]"""

    def __init__(self, dim: int, params: ParamSpace, c: np.ndarray):
        if dim <= 0:
            raise ValueError("dimension must be positive")
        if c.shape != (dim, dim, dim):
            raise DimensionMismatchError(f"structure constants must have shape {(dim,) * 3}, got {c.shape}")
        for i, j, k in itertools.product(range(dim), repeat=3):
            if c[i, j, k] != -c[j, i, k]:
                raise ValueError(f"structure constants not antisymmetric at ({i + 1},{j + 1},{k + 1})")
        self.dim = dim
        self.params = params
        self.c = c

    @classmethod
    def from_brackets(cls, dim: int, params: ParamSpace,
                      brackets: Mapping[Tuple[int, int], Sequence[Scalar]]) -> "LieAlgebraSpec":
        """Build from {(i, j): coefficients of [E_i, E_j]} with 0-based i < j or any order"""
        c = zero_array(params, (dim, dim, dim))
        for (i, j), coeffs in brackets.items():
            if len(coeffs) != dim:
                raise DimensionMismatchError(f"bracket [{i + 1},{j + 1}] has {len(coeffs)} coefficients")
            for k, value in enumerate(coeffs):
                c[i, j, k] = value
                c[j, i, k] = -value
        return cls(dim, params, c)

    def basis(self, index: int) -> Vector:
        return Vector.basis(self.params, self.dim, index)

    def zero_vector(self) -> Vector:
        return Vector.zero(self.params, self.dim)

    def basis_bracket(self, i: int, j: int) -> Vector:
        return Vector(self.params, self.c[i, j, :])

    def substitute(self, values: Mapping) -> "LieAlgebraSpec":
        """Specialise the parameters (fully or partially)"""
        c = np.empty_like(self.c)
        for index in np.ndindex(c.shape):
            c[index] = self.c[index].substitute(values)
        return LieAlgebraSpec(self.dim, self.params, c)

    def is_abelian(self) -> bool:
        return all(value.is_zero() for value in self.c.flat)

    def nonzero_brackets(self) -> List[Tuple[int, int, Vector]]:
        """Brackets [E_i, E_j] with i < j that are nonzero"""
        result = []
        for i, j in itertools.combinations(range(self.dim), 2):
            v = self.basis_bracket(i, j)
            if not v.is_zero():
                result.append((i, j, v))
        return result


def zero_array(space: ParamSpace, shape: Tuple[int, ...]) -> np.ndarray:
    """Object array filled with the zero Scalar"""
    array = np.empty(shape, dtype=object)
    zero = space.zero()
    for index in np.ndindex(shape):
        array[index] = zero
    return array


def bracket(alg: LieAlgebraSpec, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure constants"""
    if x.dim != alg.dim or y.dim != alg.dim:
        raise DimensionMismatchError(f"vectors must have dimension {alg.dim}")
    result = [alg.params.zero()] * alg.dim
    for i in range(alg.dim):
        if x[i].is_zero():
            continue
        for j in range(alg.dim):
            if y[j].is_zero() or i == j:
                continue
            factor = x[i] * y[j]
            for k in range(alg.dim):
                if not alg.c[i, j, k].is_zero():
                    result[k] = result[k] + factor * alg.c[i, j, k]
    return Vector(alg.params, result)


def jacobi_check(alg: LieAlgebraSpec) -> JacobiResult:
    """Jacobi identity as a polynomial identity, first failure in lexicographic order"""
    n = alg.dim
    c = alg.c
    for i, j, k, l in itertools.product(range(n), repeat=4):
        total = alg.params.zero()
        for m in range(n):
            total = total + c[i, j, m] * c[m, k, l] + c[j, k, m] * c[m, i, l] + c[k, i, m] * c[m, j, l]
        if not total.is_zero():
            logger.debug(f"Jacobi identity fails at ({i + 1},{j + 1},{k + 1},{l + 1}): {total}")
            return JacobiResult(passed=False, witness=(i + 1, j + 1, k + 1, l + 1), residual=total)
    return JacobiResult(passed=True)


def non_abelian_structure_check(alg: LieAlgebraSpec, s) -> bool:
    """[φE_i, φE_j] = -[E_i, E_j] for all basis pairs"""
    for i, j in itertools.combinations(range(alg.dim), 2):
        lhs = bracket(alg, s.phi_vector(alg.basis(i)), s.phi_vector(alg.basis(j)))
        if lhs != -alg.basis_bracket(i, j):
            logger.debug(f"[phi E{i + 1}, phi E{j + 1}] != -[E{i + 1}, E{j + 1}]")
            return False
    return True


def xi_central_check(alg: LieAlgebraSpec, s) -> bool:
    """[ξ, E_j] = 0 for every basis vector"""
    return all(bracket(alg, s.xi, alg.basis(j)).is_zero() for j in range(alg.dim))


def combination(space: ParamSpace, dim: int, entries: Iterable[Tuple[int, Scalar]]) -> Vector:
    """Vector from sparse (index, coefficient) pairs, 0-based"""
    comps = [space.zero()] * dim
    for index, value in entries:
        comps[index] = comps[index] + value
    return Vector(space, comps)
