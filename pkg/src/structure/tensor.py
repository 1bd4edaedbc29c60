"""
Dense covariant tensors with exact Scalar components
"""
import itertools
import logging
from enum import Enum
from typing import Callable, Iterator, Mapping, NamedTuple, Optional, Tuple

import numpy as np

from src.exact import ParamSpace, Scalar
from src.exceptions import DimensionMismatchError, TensorSymmetryError

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]


class TensorRole(str, Enum):
    """What a tensor stands for; drives symmetry validation"""
    F = "F"
    N = "N"
    T = "T"
    R = "R"
    K = "K"
    RHO = "rho"
    RHO_D = "rhoD"
    D_ETA = "d_eta"
    DT = "dT"
    GENERIC = "generic"


SKEW_ROLES = {TensorRole.T, TensorRole.D_ETA, TensorRole.DT}
CURVATURE_ROLES = {TensorRole.R, TensorRole.K}


class Tensor:
    """Fully covariant tensor over the basis E_1..E_dim"""

    def __init__(self, space: ParamSpace, dim: int, comps: np.ndarray,
                 role: TensorRole = TensorRole.GENERIC, validate: bool = True):
        if comps.shape != (dim,) * comps.ndim:
            raise DimensionMismatchError(f"components of shape {comps.shape} do not fit dimension {dim}")
        self.space = space
        self.dim = dim
        self.comps = comps
        self.role = TensorRole(role)
        if validate:
            self._validate_role()

    # -- construction ----------------------------------------------------

    @classmethod
    def from_function(cls, space: ParamSpace, dim: int, valence: int,
                      fn: Callable[..., Scalar], role: TensorRole = TensorRole.GENERIC) -> "Tensor":
        comps = np.empty((dim,) * valence, dtype=object)
        for index in np.ndindex(comps.shape):
            comps[index] = fn(*index)
        return cls(space, dim, comps, role)

    @classmethod
    def zeros(cls, space: ParamSpace, dim: int, valence: int,
              role: TensorRole = TensorRole.GENERIC) -> "Tensor":
        zero = space.zero()
        return cls.from_function(space, dim, valence, lambda *_: zero, role)

    @property
    def valence(self) -> int:
        return self.comps.ndim

    def indices(self) -> Iterator[Index]:
        return itertools.product(range(self.dim), repeat=self.valence)

    def __getitem__(self, index: Index) -> Scalar:
        return self.comps[index]

    def apply(self, *vectors) -> Scalar:
        """Multilinear evaluation on vectors"""
        if len(vectors) != self.valence:
            raise DimensionMismatchError(f"tensor of valence {self.valence} applied to {len(vectors)} vectors")
        supports = [[(k, v[k]) for k in range(self.dim) if not v[k].is_zero()] for v in vectors]
        total = self.space.zero()
        for combo in itertools.product(*supports):
            value = self.comps[tuple(k for k, _ in combo)]
            if value.is_zero():
                continue
            for _, coeff in combo:
                value = value * coeff
            total = total + value
        return total

    # -- symmetry --------------------------------------------------------

    def _swap_mismatch(self, a: int, b: int) -> Optional[Index]:
        """First index where swapping slots a and b does not flip the sign"""
        for index in self.indices():
            swapped = list(index)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            if self.comps[index] != -self.comps[tuple(swapped)]:
                return index
        return None

    def is_alternating(self) -> bool:
        return all(self._swap_mismatch(a, a + 1) is None for a in range(self.valence - 1))

    def _validate_role(self):
        if self.role in SKEW_ROLES:
            for a in range(self.valence - 1):
                index = self._swap_mismatch(a, a + 1)
                if index is not None:
                    raise TensorSymmetryError(f"role {self.role.value} requires a skew tensor; fails at {_one_based(index)}")
        elif self.role in CURVATURE_ROLES:
            if self.valence != 4:
                raise TensorSymmetryError(f"role {self.role.value} requires valence 4")
            for a, b in ((0, 1), (2, 3)):
                index = self._swap_mismatch(a, b)
                if index is not None:
                    raise TensorSymmetryError(f"role {self.role.value} antisymmetry fails at {_one_based(index)}")
        elif self.role == TensorRole.N:
            index = self._swap_mismatch(0, 1)
            if index is not None:
                raise TensorSymmetryError(f"Nijenhuis tensor must be skew in its first two slots; fails at {_one_based(index)}")

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "Tensor"):
        if other.comps.shape != self.comps.shape:
            raise DimensionMismatchError("tensor shapes differ")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        return Tensor(self.space, self.dim, self.comps + other.comps, validate=False)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        return Tensor(self.space, self.dim, self.comps - other.comps, validate=False)

    def scaled(self, factor) -> "Tensor":
        comps = np.empty_like(self.comps)
        for index in np.ndindex(comps.shape):
            comps[index] = self.comps[index] * factor
        return Tensor(self.space, self.dim, comps, validate=False)

    def with_role(self, role: TensorRole) -> "Tensor":
        return Tensor(self.space, self.dim, self.comps, role)

    def with_component(self, index: Index, value: Scalar) -> "Tensor":
        """Copy with one component replaced; role becomes generic"""
        comps = self.comps.copy()
        comps[tuple(index)] = value
        return Tensor(self.space, self.dim, comps, TensorRole.GENERIC)

    def substitute(self, values: Mapping) -> "Tensor":
        comps = np.empty_like(self.comps)
        for index in np.ndindex(comps.shape):
            comps[index] = self.comps[index].substitute(values)
        return Tensor(self.space, self.dim, comps, self.role, validate=False)

    # -- comparison ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(value.is_zero() for value in self.comps.flat)

    def first_difference(self, other: "Tensor") -> Optional[Tuple[Index, Scalar, Scalar]]:
        """First index (lexicographic) where the components differ"""
        self._check(other)
        for index in self.indices():
            if self.comps[index] != other.comps[index]:
                return index, self.comps[index], other.comps[index]
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.comps.shape == other.comps.shape and self.first_difference(other) is None

    __hash__ = None

    def nonzero_components(self, canonical: bool = False):
        """(index, value) pairs; canonical keeps only increasing indices for skew roles"""
        for index in self.indices():
            value = self.comps[index]
            if value.is_zero():
                continue
            if canonical and self.role in SKEW_ROLES and list(index) != sorted(set(index)):
                continue
            yield index, value

    def __repr__(self) -> str:
        return f"Tensor(role={self.role.value}, valence={self.valence}, dim={self.dim})"


def _one_based(index: Index) -> Tuple[int, ...]:
    return tuple(i + 1 for i in index)


class Mismatch(NamedTuple):
    """First component where two sides of an identity differ (0-based index)"""
    index: Index
    lhs: Scalar
    rhs: Scalar

    def one_based(self) -> Tuple[int, ...]:
        return _one_based(self.index)


def first_mismatch(dim: int, valence: int, lhs: Callable[..., Scalar],
                   rhs: Callable[..., Scalar]) -> Optional[Mismatch]:
    """Compare two component functions over all index tuples in lexicographic order"""
    for index in itertools.product(range(dim), repeat=valence):
        left, right = lhs(*index), rhs(*index)
        if left != right:
            return Mismatch(index, left, right)
    return None
