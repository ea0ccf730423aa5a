"""Bases of the log-consistent subspace.

The subspace L of n x n log-consistent matrices (x_ij + x_jk = x_ik) has
dimension n-1.  Two bases are built here:

* the raw basis: antisymmetric {-1, 0, 1} block matrices, entry (i, j)
  equal to +1 when i <= k < j, -1 when j <= k < i, 0 otherwise;
* the orthogonal basis obtained from it by Gram-Schmidt, which has the
  closed form  orth_k = raw_k - ((n-k)/(n-k+1)) * raw_{k-1}  (raw_0 = 0)
  with rational entries of denominator n-k+1.

Entries are exact rationals with denominators <= n, so construction is
done in exact arithmetic (fractions.Fraction): the five-case closed form
is checked entry-by-entry against the recursion identity, and squared
norms are exact dot products.  The float arrays handed out are the
correctly rounded images of those rationals.

The squared norm of orth_k is 2n(n-k)/(n-k+1).  (The expanded form
2*{(k-1)*[(n-k)/(n-k+1)^2 + (n-k)^2/(n-k+1)^2] + (n-k)} simplifies to
that; construction asserts it equals the direct dot product.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from concord.errors import DimensionTooSmallError, IndexOutOfRangeError

__all__ = [
    "BasisSet",
    "basis_raw",
    "basis_orthogonal",
    "norm_squared",
    "norm_squared_exact",
    "orthogonal_exact",
]


def _check_index(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise IndexOutOfRangeError(n, k)


def basis_raw(n: int, k: int) -> np.ndarray:
    """k-th raw basis matrix of the n x n log-consistent subspace.

    Rows 1..k carry +1 in columns k+1..n; rows k+1..n carry -1 in
    columns 1..k; two square zero blocks sit on the diagonal.  k is
    1-based, 1 <= k <= n-1.
    """
    _check_index(n, k)
    b = np.zeros((n, n))
    b[:k, k:] = 1.0
    b[k:, :k] = -1.0
    return b


def orthogonal_exact(n: int, k: int) -> list[list[Fraction]]:
    """k-th orthogonal basis matrix as exact rationals (nested lists).

    Five-case closed form, indices 1-based: entry (i, j) is
    -(n-k)/(n-k+1) when i < k = j, 1/(n-k+1) when i < k < j,
    1 when i = k < j, the antisymmetric mirror below the diagonal,
    and 0 otherwise.
    """
    _check_index(n, k)
    zero = Fraction(0)
    big = Fraction(-(n - k), n - k + 1)
    small = Fraction(1, n - k + 1)
    one = Fraction(1)

    def upper(i: int, j: int) -> Fraction:  # i < j, both 1-based
        if i < k == j:
            return big
        if i < k < j:
            return small
        if i == k < j:
            return one
        return zero

    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append(zero)
            elif i < j:
                row.append(upper(i, j))
            else:
                row.append(-upper(j, i))
        rows.append(row)
    return rows


def norm_squared_exact(n: int, k: int) -> Fraction:
    """Exact squared Euclidean norm of the k-th orthogonal basis matrix."""
    _check_index(n, k)
    return Fraction(2 * n * (n - k), n - k + 1)


def norm_squared(n: int, k: int) -> float:
    """Squared Euclidean norm 2n(n-k)/(n-k+1) of the k-th orthogonal basis matrix."""
    return float(norm_squared_exact(n, k))


@dataclass(frozen=True, eq=False)
class BasisSet:
    """Raw and orthogonal bases for one dimension, with squared norms.

    ``raw[k-1]`` and ``orthogonal[k-1]`` hold the k-th basis matrices as
    read-only float arrays; ``normsq[k-1]`` the squared norm of the
    orthogonal one.  Values are immutable and shared via a per-dimension
    cache, so hold on to them freely.
    """

    n: int
    raw: tuple[np.ndarray, ...]
    orthogonal: tuple[np.ndarray, ...]
    normsq: np.ndarray


def _build_basis_set(n: int) -> BasisSet:
    raws = []
    orths = []
    normsqs = []
    prev_raw_exact: list[list[Fraction]] | None = None
    for k in range(1, n):
        raw = basis_raw(n, k)
        raw_exact = [[Fraction(int(raw[i, j])) for j in range(n)] for i in range(n)]
        coeff = Fraction(n - k, n - k + 1)
        if prev_raw_exact is None:
            recursion = raw_exact
        else:
            recursion = [
                [raw_exact[i][j] - coeff * prev_raw_exact[i][j] for j in range(n)]
                for i in range(n)
            ]
        closed = orthogonal_exact(n, k)
        if closed != recursion:
            raise AssertionError(
                f"orthogonal basis closed form disagrees with recursion at n={n}, k={k}"
            )
        dot = sum(x * x for row in closed for x in row)
        if dot != norm_squared_exact(n, k):
            raise AssertionError(
                f"norm formula disagrees with direct dot product at n={n}, k={k}"
            )
        raw.setflags(write=False)
        orth = np.array([[float(x) for x in row] for row in closed])
        orth.setflags(write=False)
        raws.append(raw)
        orths.append(orth)
        normsqs.append(float(dot))
        prev_raw_exact = raw_exact
    normsq = np.array(normsqs)
    normsq.setflags(write=False)
    return BasisSet(n=n, raw=tuple(raws), orthogonal=tuple(orths), normsq=normsq)


# Read-mostly cache keyed by dimension; concurrent construction races are
# benign because the result is deterministic and immutable.
_CACHE: dict[int, BasisSet] = {}


def basis_orthogonal(n: int) -> BasisSet:
    """Basis set for dimension n, built once per n and cached.

    Construction verifies, in exact rational arithmetic, that the
    five-case closed form matches the recursion identity entrywise and
    that the squared-norm formula matches the direct dot product.

    Raises:
        DimensionTooSmallError: n < 2.
    """
    if n < 2:
        raise DimensionTooSmallError(n)
    cached = _CACHE.get(n)
    if cached is None:
        cached = _CACHE.setdefault(n, _build_basis_set(n))
    return cached
