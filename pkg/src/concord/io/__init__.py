"""Serialization formats and the command-line interface."""

from concord.io.cli import cli_main
from concord.io.formats import MatrixDocument, emit_matrix, parse_matrix

__all__ = ["MatrixDocument", "cli_main", "emit_matrix", "parse_matrix"]
