"""Matrix documents: CSV and JSON parsing/emission.

CSV: one row per line, comma separated, optional first line
"#labels: a, b, c".  JSON: an object with a "matrix" array of arrays
and an optional "labels" array (extra keys are ignored).  In both
formats an entry is a decimal number or a fraction literal "a/b" with
positive integers a, b; fractions are evaluated exactly before the
float conversion, so "1/3" round-trips without 0.333333 drift.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from concord.errors import NonPositiveEntryError, NonSquareError, ParseError

__all__ = ["MatrixDocument", "parse_matrix", "emit_matrix", "format_number", "default_precision"]

DEFAULT_PRECISION = 12
PRECISION_ENV = "CONCORD_PRECISION"


def default_precision() -> int:
    """Emit precision: CONCORD_PRECISION when set, else 12 digits."""
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_PRECISION
    return value if value > 0 else DEFAULT_PRECISION


@dataclass(frozen=True, eq=False)
class MatrixDocument:
    """A parsed matrix plus its provenance and optional row labels."""

    n: int
    entries: np.ndarray
    source_format: str
    labels: tuple[str, ...] | None = None


def _parse_entry(text: str, line: int, column: int) -> float:
    token = text.strip()
    if not token:
        raise ParseError(line, column, "empty entry")
    if "/" in token:
        num, _, den = token.partition("/")
        try:
            value = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(line, column, f"bad fraction literal {token!r}") from exc
        return float(value)  # sign is checked with matrix indices later
    try:
        return float(token)
    except ValueError as exc:
        raise ParseError(line, column, f"not a number: {token!r}") from exc


def _check_entries(rows: list[list[float]]) -> np.ndarray:
    n = len(rows)
    if n == 0:
        raise ParseError(1, 1, "no matrix rows")
    for idx, row in enumerate(rows):
        if len(row) != n:
            raise NonSquareError(n, len(rows[idx]))
    arr = np.array(rows, dtype=float)
    bad = ~(np.isfinite(arr) & (arr > 0.0))
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise NonPositiveEntryError(int(i) + 1, int(j) + 1, float(arr[i, j]))
    return arr


def _parse_csv(text: str) -> tuple[list[list[float]], tuple[str, ...] | None]:
    labels: tuple[str, ...] | None = None
    rows: list[list[float]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#labels:"):
            if rows:
                raise ParseError(lineno, 1, "#labels: must precede the matrix rows")
            labels = tuple(part.strip() for part in stripped[len("#labels:"):].split(","))
            continue
        if stripped.startswith("#"):
            continue
        row = []
        for colno, field in enumerate(stripped.split(","), start=1):
            row.append(_parse_entry(field, lineno, colno))
        if rows and len(row) != len(rows[0]):
            raise ParseError(lineno, 1, f"row has {len(row)} entries, expected {len(rows[0])}")
        rows.append(row)
    return rows, labels


def _parse_json(text: str) -> tuple[list[list[float]], tuple[str, ...] | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, exc.msg) from exc
    if not isinstance(data, dict) or "matrix" not in data:
        raise ParseError(1, 1, 'expected an object with a "matrix" key')
    matrix = data["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise ParseError(1, 1, '"matrix" must be an array of arrays')
    rows = []
    for i, row in enumerate(matrix, start=1):
        parsed = []
        for j, cell in enumerate(row, start=1):
            if isinstance(cell, str):
                parsed.append(_parse_entry(cell, i, j))
            elif isinstance(cell, (int, float)) and not isinstance(cell, bool):
                parsed.append(float(cell))
            else:
                raise ParseError(i, j, f"entry must be a number or fraction string, got {cell!r}")
        rows.append(parsed)
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ParseError(1, 1, '"labels" must be an array of strings')
        labels = tuple(labels)
    return rows, labels


def parse_matrix(text: str, format: str) -> MatrixDocument:
    """Parse matrix text in the given format ("csv" or "json").

    Raises:
        ParseError: malformed text (1-based line/column attached).
        NonSquareError: row/column counts disagree.
        NonPositiveEntryError: an entry is <= 0 or not finite.
    """
    if format == "csv":
        rows, labels = _parse_csv(text)
    elif format == "json":
        rows, labels = _parse_json(text)
    else:
        raise ValueError(f"unknown format {format!r}")
    entries = _check_entries(rows)
    if labels is not None and len(labels) != len(rows):
        raise ParseError(1, 1, f"{len(labels)} labels for {len(rows)} rows")
    return MatrixDocument(n=len(rows), entries=entries, source_format=format, labels=labels)


def format_number(value: float, precision: int) -> str:
    """Decimal rendering with the given number of significant digits."""
    return f"{value:.{precision}g}"


def emit_matrix(doc: MatrixDocument, format: str, precision: int | None = None) -> str:
    """Render a document as CSV or JSON text.

    Round-trips through :func:`parse_matrix` with entrywise relative
    error at most 10^(1-precision).  ``precision`` falls back to
    CONCORD_PRECISION, then 12.
    """
    digits = default_precision() if precision is None else precision
    if format == "csv":
        lines = []
        if doc.labels:
            lines.append("#labels: " + ", ".join(doc.labels))
        for row in doc.entries:
            lines.append(",".join(format_number(x, digits) for x in row))
        return "\n".join(lines) + "\n"
    if format == "json":
        payload: dict = {}
        if doc.labels:
            payload["labels"] = list(doc.labels)
        payload["matrix"] = [
            [float(format_number(x, digits)) for x in row] for row in doc.entries
        ]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {format!r}")
