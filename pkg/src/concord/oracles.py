"""Independent slow-path verifiers for the projection machinery.

Three routes to the same answer, sharing no code with the closed-form
basis or the O(n^2) projection:

* classical Gram-Schmidt over the raw basis, then coordinate-wise
  projection against the resulting orthogonal matrices;
* the geometric-mean closed form (row means of the log matrix are the
  analytic least-squares minimizer for reciprocal input);
* the normal equations of the raw (non-orthogonal) basis.

None of these care about speed; they exist so tests and the CLI
``verify`` subcommand can corroborate results through disjoint math.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from concord.core.basis import basis_orthogonal
from concord.core.matrix import LogMatrix, PCMatrix, log_transform
from concord.core.projection import project_fast
from concord.errors import DependentInputError, NotReciprocalError, SingularGramError

__all__ = [
    "OracleMethod",
    "OracleReport",
    "cross_check",
    "geometric_mean_approximation",
    "gram_schmidt",
    "gram_schmidt_projection",
    "normal_equations_projection",
]

DEPENDENCE_TOL = 1e-10


class OracleMethod(str, enum.Enum):
    GRAM_SCHMIDT = "gram_schmidt"
    GEOMETRIC_MEAN = "geometric_mean"
    NORMAL_EQUATIONS = "normal_equations"


@dataclass(frozen=True, eq=False)
class OracleReport:
    """One oracle's answer next to its disagreement with a reference."""

    method: OracleMethod
    result: LogMatrix
    max_abs_difference: float


def gram_schmidt(raw: list[np.ndarray]) -> list[np.ndarray]:
    """Classical Gram-Schmidt over the Frobenius inner product.

    Processes the matrices in order without normalization, so running
    it on the raw basis reproduces the closed-form orthogonal basis
    exactly (each step subtracts the projection onto the span of the
    predecessors).

    Raises:
        DependentInputError: a residual norm falls below 1e-10.
    """
    ortho: list[np.ndarray] = []
    for index, b in enumerate(raw, start=1):
        u = np.array(b, dtype=float)
        for prev in ortho:
            u -= (np.sum(prev * u) / np.sum(prev * prev)) * prev
        norm = float(np.linalg.norm(u))
        if norm < DEPENDENCE_TOL:
            raise DependentInputError(index, norm)
        ortho.append(u)
    return ortho


def gram_schmidt_projection(a: LogMatrix) -> LogMatrix:
    """Projection computed against a freshly Gram-Schmidt-ed raw basis."""
    if a.n == 1:
        return LogMatrix(entries=np.zeros((1, 1)))
    basis = basis_orthogonal(a.n)
    x = a.entries
    projected = np.zeros_like(x)
    for u in gram_schmidt(list(basis.raw)):
        projected += (np.sum(u * x) / np.sum(u * u)) * u
    return LogMatrix(entries=projected)


def geometric_mean_approximation(m: PCMatrix, strict: bool = True) -> LogMatrix:
    """Closed-form least-squares projection for reciprocal matrices.

    v_i is the arithmetic mean of row i of log m and the output is
    x_ij = v_i - v_j, the analytic minimizer of
    sum (a_ij - (v_i - v_j))^2 when a is antisymmetric.

    Raises:
        NotReciprocalError: input failed the reciprocity check
            (strict mode only).
    """
    if strict and not m.reciprocal:
        defect = np.abs(m.entries * m.entries.T - 1.0)
        i, j = np.argwhere(defect == defect.max())[0]
        raise NotReciprocalError(int(i) + 1, int(j) + 1, float(m.entries[i, j] * m.entries[j, i]))
    v = np.mean(np.log(m.entries), axis=1)
    return LogMatrix(entries=v[:, None] - v[None, :])


def normal_equations_projection(a: LogMatrix) -> LogMatrix:
    """Least-squares projection via the Gram system of the raw basis.

    Solves G c = b with G_jk the pairwise dot products of the raw basis
    matrices and b_k their dot products with the input, then sums
    c_k * raw_k.  Works for arbitrary (not necessarily antisymmetric)
    input and never touches the orthogonal basis.

    Raises:
        SingularGramError: the Gram system is singular (cannot happen
            for a valid dimension; the raw basis is independent).
    """
    if a.n == 1:
        return LogMatrix(entries=np.zeros((1, 1)))
    basis = basis_orthogonal(a.n)
    raw = basis.raw
    x = a.entries
    size = len(raw)
    gram = np.empty((size, size))
    for jj in range(size):
        for kk in range(size):
            gram[jj, kk] = np.sum(raw[jj] * raw[kk])
    rhs = np.array([np.sum(b * x) for b in raw])
    try:
        coeffs = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularGramError(f"Gram system singular for n={a.n}") from exc
    projected = np.zeros_like(x)
    for c_k, b in zip(coeffs, raw):
        projected += c_k * b
    return LogMatrix(entries=projected)


def cross_check(m: PCMatrix) -> list[OracleReport]:
    """Run every applicable oracle against the fast projection.

    The geometric-mean oracle only applies to reciprocal input and is
    skipped otherwise.  Each report carries the entrywise max absolute
    difference from the O(n^2) projection of log m.
    """
    a = log_transform(m)
    reference = project_fast(a).projected.entries
    candidates = [
        (OracleMethod.GRAM_SCHMIDT, gram_schmidt_projection(a)),
        (OracleMethod.NORMAL_EQUATIONS, normal_equations_projection(a)),
    ]
    if m.reciprocal:
        candidates.append((OracleMethod.GEOMETRIC_MEAN, geometric_mean_approximation(m)))
    return [
        OracleReport(
            method=method,
            result=result,
            max_abs_difference=float(np.max(np.abs(result.entries - reference))),
        )
        for method, result in candidates
    ]
