"""Numerical core: matrices, bases, projection, weights, consistency."""

from concord.core.basis import (
    BasisSet,
    basis_orthogonal,
    basis_raw,
    norm_squared,
    norm_squared_exact,
    orthogonal_exact,
)
from concord.core.consistency import (
    TriadReport,
    check_consistency,
    check_l_consistency,
    triad_inconsistency,
)
from concord.core.matrix import (
    LogMatrix,
    PCMatrix,
    exp_transform,
    log_transform,
    reciprocity_defect,
    validate,
)
from concord.core.projection import ProjectionResult, approximate, project, project_fast
from concord.core.weights import WeightVector, extract_weights

__all__ = [
    "BasisSet",
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
    "norm_squared_exact",
    "orthogonal_exact",
    "project",
    "project_fast",
    "reciprocity_defect",
    "triad_inconsistency",
    "validate",
]
