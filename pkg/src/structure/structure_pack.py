"""
Almost contact B-metric structure (φ, ξ, η, g) on a Lie algebra
"""
import itertools
import logging
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from src.exact import ParamSpace, Scalar
from src.exceptions import DimensionMismatchError
from src.liealg import LieAlgebraSpec, Vector
from src.structure.metric import (
    identity_matrix,
    matmul,
    matrix_rank,
    metric_inverse,
    metric_signature,
    symmetric,
)

logger = logging.getLogger(__name__)


class StructurePack:
    """φ as a matrix (φE_j = Σ_i phi[i,j] E_i), ξ, η as covector, g and its inverse"""

    def __init__(self, space: ParamSpace, phi: np.ndarray, xi: Vector,
                 eta: Sequence[Scalar], g: np.ndarray, g_inv: np.ndarray):
        self.space = space
        self.phi = phi
        self.xi = xi
        self.eta: Tuple[Scalar, ...] = tuple(eta)
        self.g = g
        self.g_inv = g_inv

    @classmethod
    def build(cls, space: ParamSpace, phi: np.ndarray, xi: Vector,
              eta: Sequence[Scalar], g: np.ndarray) -> "StructurePack":
        """Assemble a pack and invert the metric exactly

        Raises:
            DimensionMismatchError: inconsistent sizes
            DegenerateMetricError: g has no exact inverse
        """
        dim = xi.dim
        if phi.shape != (dim, dim) or g.shape != (dim, dim) or len(eta) != dim:
            raise DimensionMismatchError(f"structure data does not fit dimension {dim}")
        return cls(space, phi, xi, eta, g, metric_inverse(g))

    @property
    def dim(self) -> int:
        return self.xi.dim

    def basis(self, index: int) -> Vector:
        return Vector.basis(self.space, self.dim, index)

    def phi_vector(self, x: Vector) -> Vector:
        comps = []
        for i in range(self.dim):
            total = self.space.zero()
            for j in range(self.dim):
                if not x[j].is_zero() and not self.phi[i, j].is_zero():
                    total = total + self.phi[i, j] * x[j]
            comps.append(total)
        return Vector(self.space, comps)

    def phi_basis(self, j: int) -> Vector:
        return Vector(self.space, self.phi[:, j])

    def eta_of(self, x: Vector) -> Scalar:
        total = self.space.zero()
        for e, a in zip(self.eta, x.comps):
            if not e.is_zero() and not a.is_zero():
                total = total + e * a
        return total

    def metric(self, x: Vector, y: Vector) -> Scalar:
        return _bilinear(self.g, x, y)

    def lower(self, v: Vector) -> List[Scalar]:
        """Covector g(v, ·) in basis components"""
        return [self.metric(v, self.basis(k)) for k in range(self.dim)]

    def raise_index(self, covector: Sequence[Scalar]) -> Vector:
        """Vector v with g(v, E_k) = covector[k]"""
        comps = []
        for i in range(self.dim):
            total = self.space.zero()
            for k in range(self.dim):
                if not covector[k].is_zero() and not self.g_inv[k, i].is_zero():
                    total = total + covector[k] * self.g_inv[k, i]
            comps.append(total)
        return Vector(self.space, comps)

    def substitute(self, values: Mapping) -> "StructurePack":
        def sub(matrix):
            out = np.empty_like(matrix)
            for index in np.ndindex(matrix.shape):
                out[index] = matrix[index].substitute(values)
            return out

        return StructurePack(self.space, sub(self.phi), self.xi.substitute(values),
                             [e.substitute(values) for e in self.eta], sub(self.g), sub(self.g_inv))


def _bilinear(matrix: np.ndarray, x: Vector, y: Vector) -> Scalar:
    total = x.space.zero()
    for i in range(x.dim):
        if x[i].is_zero():
            continue
        for j in range(y.dim):
            if not y[j].is_zero() and not matrix[i, j].is_zero():
                total = total + matrix[i, j] * x[i] * y[j]
    return total


class ValidationReport(BaseModel):
    """Outcome of validating an almost contact B-metric structure"""
    passed: bool = Field(..., description="Every defining relation holds")
    violations: List[str] = Field(default_factory=list, description="Violated relations with a witness")
    notes: List[str] = Field(default_factory=list, description="Checks skipped or informational remarks")
    signature: Optional[Tuple[int, int]] = Field(None, description="(negatives, positives) of a rational metric")


def _first_vector_failure(s: StructurePack, relation) -> Optional[int]:
    for i in range(s.dim):
        if not relation(i):
            return i
    return None


def validate_structure(alg: LieAlgebraSpec, s: StructurePack) -> ValidationReport:
    """Check the defining relations of (φ, ξ, η, g) and report every violation"""
    if alg.dim != s.dim:
        raise DimensionMismatchError(f"algebra has dimension {alg.dim}, structure {s.dim}")
    n = s.dim
    violations: List[str] = []
    notes: List[str] = []

    if n % 2 == 0:
        violations.append(f"dimension must be odd, got {n}")

    if not s.phi_vector(s.xi).is_zero():
        violations.append(f"phi xi = 0 fails: phi xi = {s.phi_vector(s.xi)}")

    def phi_squared(i):
        e = s.basis(i)
        expected = -e + s.xi.scale(s.eta[i])
        return s.phi_vector(s.phi_vector(e)) == expected

    i = _first_vector_failure(s, phi_squared)
    if i is not None:
        violations.append(f"phi^2 = -Id + eta (x) xi fails on E{i + 1}")

    i = _first_vector_failure(s, lambda k: s.eta_of(s.phi_basis(k)).is_zero())
    if i is not None:
        violations.append(f"eta o phi = 0 fails on E{i + 1}")

    if s.eta_of(s.xi) != 1:
        violations.append(f"eta(xi) = 1 fails: eta(xi) = {s.eta_of(s.xi)}")

    if not symmetric(s.g):
        violations.append("g is not symmetric")

    product = matmul(s.g, s.g_inv)
    identity = identity_matrix(s.space, n)
    if any(product[index] != identity[index] for index in np.ndindex(n, n)):
        violations.append("g g_inv = Id fails")

    for a, b in itertools.combinations_with_replacement(range(n), 2):
        lhs = s.metric(s.phi_basis(a), s.phi_basis(b))
        rhs = -s.g[a, b] + s.eta[a] * s.eta[b]
        if lhs != rhs:
            violations.append(f"g(phi x, phi y) = -g(x,y) + eta(x)eta(y) fails at (E{a + 1},E{b + 1}): {lhs} != {rhs}")
            break

    i = _first_vector_failure(s, lambda k: s.metric(s.basis(k), s.xi) == s.eta[k])
    if i is not None:
        violations.append(f"eta = g(., xi) fails on E{i + 1}")

    signature = metric_signature(s.g)
    if signature is None:
        notes.append("signature not checked: metric has symbolic entries")
    else:
        notes.append(f"signature (negatives, positives) = {signature}")
        if signature != (n // 2, n // 2 + 1):
            violations.append(f"metric signature {signature} differs from ({n // 2}, {n // 2 + 1})")

    rank = phi_rank(s)
    if rank is None:
        notes.append("rank of phi not checked: phi has symbolic entries")
    elif rank != n - 1:
        violations.append(f"rank of phi is {rank}, expected {n - 1}")

    for violation in violations:
        logger.debug(f"Structure violation: {violation}")
    return ValidationReport(passed=not violations, violations=violations, notes=notes, signature=signature)


def phi_rank(s: StructurePack) -> Optional[int]:
    return matrix_rank(s.phi)


def associated_metric(s: StructurePack) -> np.ndarray:
    """g~(x, y) = g(x, φy) + η(x)η(y)"""
    g_tilde = matmul(s.g, s.phi)
    for i, j in np.ndindex(g_tilde.shape):
        g_tilde[i, j] = g_tilde[i, j] + s.eta[i] * s.eta[j]
    return g_tilde


def associated_pack(s: StructurePack) -> StructurePack:
    return StructurePack.build(s.space, s.phi, s.xi, s.eta, associated_metric(s))


def project_h(s: StructurePack, x: Vector) -> Vector:
    """Horizontal part -φ²x"""
    return -s.phi_vector(s.phi_vector(x))


def project_v(s: StructurePack, x: Vector) -> Vector:
    return s.xi.scale(s.eta_of(x))
