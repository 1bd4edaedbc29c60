"""
Exact matrix algebra for metrics: inverse, signature, rank
"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from src.exact import ParamSpace, Scalar
from src.exceptions import DegenerateMetricError, DimensionMismatchError

logger = logging.getLogger(__name__)


def identity_matrix(space: ParamSpace, dim: int) -> np.ndarray:
    matrix = np.empty((dim, dim), dtype=object)
    for i, j in np.ndindex(matrix.shape):
        matrix[i, j] = space.one() if i == j else space.zero()
    return matrix


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two object matrices of Scalars"""
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return a.dot(b)


def is_rational_matrix(matrix: np.ndarray) -> bool:
    return all(entry.is_constant() for entry in matrix.flat)


def metric_inverse(g: np.ndarray) -> np.ndarray:
    """Exact Gauss-Jordan inverse of a square Scalar matrix

    Pivots must be nonzero rationals, otherwise the inverse is not a polynomial
    matrix over the parameters.

    Raises:
        DegenerateMetricError: singular matrix or non-polynomial inverse
    """
    n = g.shape[0]
    if g.shape != (n, n):
        raise DimensionMismatchError("metric must be square")
    space = g[0, 0].space
    work = g.copy()
    inverse = identity_matrix(space, n)

    for col in range(n):
        pivot_row = next((r for r in range(col, n)
                          if work[r, col].is_constant() and not work[r, col].is_zero()), None)
        if pivot_row is None:
            if any(not work[r, col].is_zero() for r in range(col, n)):
                raise DegenerateMetricError("degenerate metric: inverse is not polynomial in the parameters")
            raise DegenerateMetricError()
        if pivot_row != col:
            work[[col, pivot_row]] = work[[pivot_row, col]]
            inverse[[col, pivot_row]] = inverse[[pivot_row, col]]
        pivot = work[col, col].to_fraction()
        for j in range(n):
            work[col, j] = work[col, j] / pivot
            inverse[col, j] = inverse[col, j] / pivot
        for r in range(n):
            factor = work[r, col]
            if r == col or factor.is_zero():
                continue
            for j in range(n):
                work[r, j] = work[r, j] - factor * work[col, j]
                inverse[r, j] = inverse[r, j] - factor * inverse[col, j]
    return inverse


def _fractions(matrix: np.ndarray) -> List[List[Fraction]]:
    return [[entry.to_fraction() for entry in row] for row in matrix]


def metric_signature(g: np.ndarray) -> Optional[Tuple[int, int]]:
    """(negatives, positives) by congruence diagonalisation; None for symbolic g"""
    if not is_rational_matrix(g):
        return None
    a = _fractions(g)
    n = len(a)
    negatives = positives = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for m in range(n):
                a[i][m] += a[j][m]
            for m in range(n):
                a[m][i] += a[m][j]
            p = i
        if p != k:
            a[k], a[p] = a[p], a[k]
            for row in a:
                row[k], row[p] = row[p], row[k]
        pivot = a[k][k]
        if pivot < 0:
            negatives += 1
        else:
            positives += 1
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor == 0:
                continue
            for m in range(n):
                a[i][m] -= factor * a[k][m]
            for m in range(n):
                a[m][i] -= factor * a[m][k]
        k += 1
    return negatives, positives


def matrix_rank(matrix: np.ndarray) -> Optional[int]:
    """Rank of a rational matrix; None when entries are symbolic"""
    if not is_rational_matrix(matrix):
        return None
    rows = _fractions(matrix)
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def symmetric(matrix: np.ndarray) -> bool:
    n = matrix.shape[0]
    return all(matrix[i, j] == matrix[j, i] for i in range(n) for j in range(i + 1, n))


def scalar_matrix(space: ParamSpace, rows) -> np.ndarray:
    """Object matrix from nested rationals or Scalars"""
    rows = [list(row) for row in rows]
    matrix = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = value if isinstance(value, Scalar) else space.const(value)
    return matrix
