"""Comparison matrices and their logarithmic images.

A pairwise-comparisons matrix holds positive ratio judgments m_ij ("how
many times is stimulus i preferred over stimulus j").  Taking entrywise
logarithms turns the multiplicative consistency relation
m_ij * m_jk = m_ik into the additive one x_ij + x_jk = x_ik, so all the
projection machinery works on :class:`LogMatrix` values and results are
mapped back with :func:`exp_transform`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from concord.errors import (
    EntryOverflowError,
    NonPositiveEntryError,
    NonSquareError,
    NotReciprocalError,
)

DEFAULT_RECIPROCITY_TOL = 1e-8


def _as_square_array(matrix, dtype=float) -> np.ndarray:
    try:
        arr = np.array(matrix, dtype=dtype)
    except (TypeError, ValueError) as exc:
        raise NonSquareError(len(matrix)) from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        rows = arr.shape[0] if arr.ndim >= 1 else 0
        cols = arr.shape[1] if arr.ndim >= 2 else None
        raise NonSquareError(rows, cols)
    return arr


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PCMatrix:
    """n x n matrix of positive ratio judgments.

    Instances are immutable (the entries array is read-only) and safe to
    share between threads.  ``reciprocal`` records whether every pair
    satisfied m_ij * m_ji = 1 within the tolerance used at validation;
    it is checked, never enforced.
    """

    entries: np.ndarray
    reciprocal: bool
    n: int = field(init=False)

    def __post_init__(self):
        arr = _as_square_array(self.entries)
        bad = ~(np.isfinite(arr) & (arr > 0.0))
        if bad.any():
            i, j = np.argwhere(bad)[0]
            raise NonPositiveEntryError(int(i) + 1, int(j) + 1, float(arr[i, j]))
        object.__setattr__(self, "entries", _freeze(arr))
        object.__setattr__(self, "n", arr.shape[0])

    def __repr__(self) -> str:
        return f"PCMatrix(n={self.n}, reciprocal={self.reciprocal})"


@dataclass(frozen=True, eq=False)
class LogMatrix:
    """n x n real matrix, the entrywise log of a comparison matrix.

    Reciprocal sources map to antisymmetric log images; membership in
    the log-consistent subspace means x_ij + x_jk = x_ik for all triads.
    """

    entries: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        arr = _as_square_array(self.entries)
        if not np.all(np.isfinite(arr)):
            i, j = np.argwhere(~np.isfinite(arr))[0]
            raise NonPositiveEntryError(int(i) + 1, int(j) + 1, float(arr[i, j]))
        object.__setattr__(self, "entries", _freeze(arr))
        object.__setattr__(self, "n", arr.shape[0])

    def __repr__(self) -> str:
        return f"LogMatrix(n={self.n})"


def reciprocity_defect(entries: np.ndarray) -> float:
    """Largest |m_ij * m_ji - 1| over all pairs."""
    d = entries * entries.T
    d -= 1.0
    np.abs(d, out=d)
    return float(d.max())


def _adopt_pc(arr: np.ndarray, reciprocal: bool) -> PCMatrix:
    """Wrap an owned, already positive-finite float array without copying."""
    obj = object.__new__(PCMatrix)
    arr.setflags(write=False)
    object.__setattr__(obj, "entries", arr)
    object.__setattr__(obj, "n", arr.shape[0])
    object.__setattr__(obj, "reciprocal", reciprocal)
    return obj


def _adopt_log(arr: np.ndarray) -> LogMatrix:
    """Wrap an owned, already finite float array without copying."""
    obj = object.__new__(LogMatrix)
    arr.setflags(write=False)
    object.__setattr__(obj, "entries", arr)
    object.__setattr__(obj, "n", arr.shape[0])
    return obj


def validate(
    matrix,
    reciprocity_tol: float = DEFAULT_RECIPROCITY_TOL,
    strict: bool = False,
) -> PCMatrix:
    """Check an array-like and wrap it as a :class:`PCMatrix`.

    Every entry must be a positive finite real; values are never
    silently repaired.  The reciprocity check |m_ij * m_ji - 1| <= tol
    sets the ``reciprocal`` flag; with ``strict=True`` a failing check
    raises :class:`NotReciprocalError` instead.

    Raises:
        NonSquareError: input is not square.
        NonPositiveEntryError: some entry is <= 0 or not finite
            (1-based indices on the exception).
        NotReciprocalError: only in strict mode.
    """
    arr = _as_square_array(matrix)
    bad = ~(np.isfinite(arr) & (arr > 0.0))
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise NonPositiveEntryError(int(i) + 1, int(j) + 1, float(arr[i, j]))
    defect = np.abs(arr * arr.T - 1.0)
    reciprocal = bool(np.max(defect) <= reciprocity_tol)
    if strict and not reciprocal:
        i, j = np.argwhere(defect > reciprocity_tol)[0]
        raise NotReciprocalError(int(i) + 1, int(j) + 1, float(arr[i, j] * arr[j, i]))
    return PCMatrix(entries=arr, reciprocal=reciprocal)


def log_transform(m: PCMatrix) -> LogMatrix:
    """Entrywise natural logarithm of a comparison matrix."""
    # logs of positive finite reals are finite, so adopt without rescanning
    return _adopt_log(np.log(m.entries))


# exp leaves the positive-normal float64 range just past +-709.78:
# above it overflows to inf, below it drowns in zero/subnormals whose
# reciprocals overflow.
_EXP_LIMIT = 709.78


def _exp_checked(entries: np.ndarray) -> np.ndarray:
    if entries.size and (entries.max() > _EXP_LIMIT or entries.min() < -_EXP_LIMIT):
        i, j = np.unravel_index(np.argmax(np.abs(entries)), entries.shape)
        raise EntryOverflowError(
            f"exp of entry ({int(i) + 1},{int(j) + 1}) = {entries[i, j]!r} "
            f"leaves the representable range (|x| <= {_EXP_LIMIT})"
        )
    return np.exp(entries)


def exp_transform(a: LogMatrix) -> PCMatrix:
    """Entrywise exponential, inverse of :func:`log_transform`.

    Raises:
        EntryOverflowError: some entry exceeds the representable
            exponent range of float64.
    """
    out = _exp_checked(a.entries)
    # exp of an exactly antisymmetric matrix is reciprocal up to rounding
    reciprocal = reciprocity_defect(out) <= DEFAULT_RECIPROCITY_TOL
    return _adopt_pc(out, reciprocal)
