"""Exception types shared across the package.

All errors raised by concord derive from :class:`ConcordError`.  Index
attributes on these exceptions are 1-based, matching the row/column
convention used everywhere in reports and the service API.
"""

from __future__ import annotations


class ConcordError(Exception):
    """Base class for all concord errors."""


class NonSquareError(ConcordError):
    """Input array is not a square matrix."""

    def __init__(self, rows: int, cols: int | None = None):
        self.rows = rows
        self.cols = cols
        if cols is None:
            super().__init__(f"matrix is not square: {rows} rows of unequal length")
        else:
            super().__init__(f"matrix is not square: {rows}x{cols}")


class NonPositiveEntryError(ConcordError):
    """A comparison entry is <= 0 or not finite.  Indices are 1-based."""

    def __init__(self, i: int, j: int, value: float):
        self.i = i
        self.j = j
        self.value = value
        super().__init__(f"entry ({i},{j}) = {value!r} is not a positive finite real")


class NotReciprocalError(ConcordError):
    """Strict mode rejected a matrix failing the reciprocity check."""

    def __init__(self, i: int, j: int, product: float):
        self.i = i
        self.j = j
        self.product = product
        super().__init__(
            f"entries ({i},{j}) and ({j},{i}) are not reciprocal: product = {product!r}"
        )


class DimensionTooSmallError(ConcordError):
    """Basis construction requires dimension >= 2."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"basis requires dimension >= 2, got {n}")


class IndexOutOfRangeError(ConcordError):
    """Basis index k outside 1..n-1."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        super().__init__(f"basis index k={k} outside 1..{n - 1} for dimension {n}")


class DimensionMismatchError(ConcordError):
    """Two operands have different dimensions."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")


class EntryOverflowError(ConcordError):
    """Exponentiation left the representable range."""


class NotConsistentError(ConcordError):
    """Weight extraction requires a consistent matrix.

    ``worst_triad`` is the (i, j, k, inconsistency) tuple of the most
    inconsistent triad, 1-based.
    """

    def __init__(self, worst_triad: tuple[int, int, int, float], tol: float):
        self.worst_triad = worst_triad
        self.tol = tol
        i, j, k, value = worst_triad
        super().__init__(
            f"matrix is not consistent: triad ({i},{j},{k}) has inconsistency "
            f"{value:.6g} > tol {tol:g}"
        )


class DependentInputError(ConcordError):
    """Gram-Schmidt received linearly dependent input."""

    def __init__(self, index: int, residual_norm: float):
        self.index = index
        self.residual_norm = residual_norm
        super().__init__(
            f"input matrix {index} is linearly dependent on its predecessors "
            f"(residual norm {residual_norm:g})"
        )


class SingularGramError(ConcordError):
    """The Gram system of the raw basis could not be solved."""


class ParseError(ConcordError):
    """Matrix text could not be parsed.  line/column are 1-based."""

    def __init__(self, line: int, column: int, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"parse error at line {line}, column {column}: {reason}")
