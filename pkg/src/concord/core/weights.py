"""Priority weight extraction from consistent matrices.

A consistent matrix is generated by a positive stimuli vector,
c_ij = s_i / s_j, unique up to a multiplicative constant.  The geometric
mean of row i equals s_i up to that constant, so normalizing the row
geometric means to sum 1 recovers the weights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from concord.core.consistency import check_consistency
from concord.core.matrix import PCMatrix
from concord.errors import NotConsistentError

__all__ = ["WeightVector", "extract_weights"]

DEFAULT_WEIGHT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Positive priority weights normalized to sum 1.

    ``geometric_means`` keeps the unnormalized row geometric means for
    callers that want the free multiplicative constant back.
    """

    values: np.ndarray
    geometric_means: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values)


def extract_weights(c: PCMatrix, tol: float = DEFAULT_WEIGHT_TOL) -> WeightVector:
    """Stimuli weights of a consistent comparison matrix.

    Raises:
        NotConsistentError: some triad exceeds ``tol``; the exception
            carries the worst triad.
    """
    report = check_consistency(c, tol=tol)
    if not report.consistent:
        raise NotConsistentError(report.triads[0], tol)
    means = np.exp(np.mean(np.log(c.entries), axis=1))
    values = means / means.sum()
    means.setflags(write=False)
    values.setflags(write=False)
    return WeightVector(values=values, geometric_means=means)
