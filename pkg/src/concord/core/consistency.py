"""Triad inconsistency scoring and consistency checks.

A triad (i, j, k), i < j < k, is consistent when m_ij * m_jk = m_ik.
Its local inconsistency here is min(|1 - m_ik/(m_ij*m_jk)|,
|1 - m_ij*m_jk/m_ik|), a scale-free value in [0, 1); the global measure
is the maximum over triads.  For reciprocal matrices checking ordered
triads i < j < k is equivalent to checking all index triples, so only
the upper triangle is evaluated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from concord.core.matrix import LogMatrix, PCMatrix

__all__ = ["TriadReport", "check_consistency", "check_l_consistency", "triad_inconsistency"]

DEFAULT_CONSISTENCY_TOL = 1e-10


def triad_inconsistency(x: float, y: float, z: float) -> float:
    """Local inconsistency of a triad with m_ij = x, m_jk = y, m_ik = z."""
    r = z / (x * y)
    return 1.0 - min(r, 1.0 / r)


@dataclass(frozen=True, eq=False)
class TriadReport:
    """All triads of a matrix ranked by local inconsistency.

    ``triads`` holds (i, j, k, inconsistency) tuples with 1-based
    indices, sorted by inconsistency descending, ties in lexicographic
    index order.  ``global_inconsistency`` is the maximum (0.0 when no
    triads exist), and ``consistent`` says whether it stays within the
    tolerance the report was built with.
    """

    triads: tuple[tuple[int, int, int, float], ...]
    global_inconsistency: float
    tol: float

    @property
    def consistent(self) -> bool:
        return self.global_inconsistency <= self.tol

    def worst(self, count: int = 10) -> tuple[tuple[int, int, int, float], ...]:
        """The ``count`` most inconsistent triads."""
        return self.triads[:count]


def check_consistency(m: PCMatrix, tol: float = DEFAULT_CONSISTENCY_TOL) -> TriadReport:
    """Score every ordered triad of a comparison matrix.

    Only i < j < k triads are evaluated (sufficient for reciprocal
    matrices); a 1x1 or 2x2 matrix has no triads and reports global 0.
    """
    x = m.entries
    n = m.n
    scored = []
    for i, j, k in itertools.combinations(range(n), 3):
        value = triad_inconsistency(x[i, j], x[j, k], x[i, k])
        scored.append((i + 1, j + 1, k + 1, value))
    scored.sort(key=lambda t: (-t[3], t[:3]))
    worst = scored[0][3] if scored else 0.0
    return TriadReport(triads=tuple(scored), global_inconsistency=worst, tol=tol)


def check_l_consistency(a: LogMatrix, tol: float = DEFAULT_CONSISTENCY_TOL) -> bool:
    """True iff a is antisymmetric and additively consistent within tol.

    Checks |x_ij + x_jk - x_ik| <= tol over all i < j < k together with
    |x_ij + x_ji| <= tol, i.e. membership in the log-consistent
    subspace up to the absolute tolerance.
    """
    x = a.entries
    n = a.n
    if np.max(np.abs(x + x.T)) > tol:
        return False
    if n < 3:
        return True
    defect = x[:, :, None] + x[None, :, :] - x[:, None, :]
    i, j, k = np.ogrid[:n, :n, :n]
    ordered = (i < j) & (j < k)
    return bool(np.max(np.abs(defect[ordered])) <= tol)
