"""Consistency engine for pairwise-comparisons matrices.

Approximates any positive comparison matrix by the nearest consistent
one (least squares in log space, computed by orthogonal projection),
extracts priority weights, and scores triad inconsistency to drive
judgment refinement.
"""

from concord.core import (
    BasisSet,
    LogMatrix,
    PCMatrix,
    ProjectionResult,
    TriadReport,
    WeightVector,
    approximate,
    basis_orthogonal,
    basis_raw,
    check_consistency,
    check_l_consistency,
    exp_transform,
    extract_weights,
    log_transform,
    norm_squared,
    project,
    project_fast,
    validate,
)
from concord.errors import ConcordError

__version__ = "0.1.0"

__all__ = [
    "BasisSet",
    "ConcordError",
    "LogMatrix",
    "PCMatrix",
    "ProjectionResult",
    "TriadReport",
    "WeightVector",
    "approximate",
    "basis_orthogonal",
    "basis_raw",
    "check_consistency",
    "check_l_consistency",
    "exp_transform",
    "extract_weights",
    "log_transform",
    "norm_squared",
    "project",
    "project_fast",
    "validate",
]
