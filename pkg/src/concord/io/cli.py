"""Command-line interface.

Subcommands: validate, approximate, weights, basis, verify.  Matrix
data goes to stdout (or --out), human-readable diagnostics to stderr.
Exit codes: 0 success, 1 validation error, 2 parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from concord.core.basis import basis_raw, norm_squared_exact, orthogonal_exact
from concord.core.consistency import check_consistency
from concord.core.matrix import validate
from concord.core.projection import approximate
from concord.core.weights import extract_weights
from concord.errors import ConcordError, ParseError
from concord.io.formats import (
    MatrixDocument,
    default_precision,
    emit_matrix,
    format_number,
    parse_matrix,
)
from concord.oracles import cross_check

WORST_TRIADS_SHOWN = 5


def _detect_format(path: str, text: str) -> str:
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return "json"
    return "csv"


def _load(path: str) -> tuple[MatrixDocument, str]:
    text = Path(path).read_text(encoding="utf-8")
    fmt = _detect_format(path, text)
    return parse_matrix(text, fmt), fmt


def _cmd_validate(args) -> int:
    doc, _ = _load(args.file)
    m = validate(doc.entries, strict=args.strict_reciprocal)
    report = check_consistency(m)
    digits = default_precision()
    print(f"n: {m.n}")
    if doc.labels:
        print("labels: " + ", ".join(doc.labels))
    print(f"reciprocal: {'yes' if m.reciprocal else 'no'}")
    print(f"global_inconsistency: {format_number(report.global_inconsistency, digits)}")
    print(f"consistent: {'yes' if report.consistent else 'no'}")
    worst = [t for t in report.worst(WORST_TRIADS_SHOWN) if t[3] > report.tol]
    if worst:
        print("worst_triads:")
        for i, j, k, value in worst:
            print(f"  ({i},{j},{k}): {format_number(value, digits)}")
    return 0


def _result_document(args) -> tuple[MatrixDocument, str, "np.ndarray", float]:
    doc, in_fmt = _load(args.file)
    m = validate(doc.entries, strict=args.strict_reciprocal)
    result = approximate(m)
    weights = extract_weights(result.consistent)
    out = MatrixDocument(
        n=m.n,
        entries=result.consistent.entries,
        source_format=in_fmt,
        labels=doc.labels,
    )
    return out, in_fmt, weights.values, result.residual_norm


def _cmd_approximate(args) -> int:
    out_doc, in_fmt, weights, residual = _result_document(args)
    fmt = args.format or in_fmt
    digits = default_precision()
    text = emit_matrix(out_doc, fmt)
    if fmt == "json":
        # splice the analysis results into the emitted object
        import json

        payload = json.loads(text)
        payload["residual_norm"] = residual
        payload["weights"] = [float(format_number(w, digits)) for w in weights]
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(f"residual_norm: {format_number(residual, digits)}", file=sys.stderr)
    print(
        "weights: " + " ".join(format_number(w, digits) for w in weights),
        file=sys.stderr,
    )
    return 0


def _cmd_weights(args) -> int:
    out_doc, _, weights, _ = _result_document(args)
    digits = default_precision()
    labels = out_doc.labels or tuple(str(i) for i in range(1, out_doc.n + 1))
    for label, value in zip(labels, weights):
        print(f"{label} {format_number(value, digits)}")
    return 0


def _basis_matrices(n: int, orthogonal: bool):
    for k in range(1, n):
        if orthogonal:
            entries = orthogonal_exact(n, k)
            normsq = norm_squared_exact(n, k)
        else:
            entries = [[Fraction(int(x)) for x in row] for row in basis_raw(n, k)]
            normsq = sum(x * x for row in entries for x in row)
        yield k, entries, normsq


def _cmd_basis(args) -> int:
    n = args.n
    if n < 2:
        print(f"error: basis requires n >= 2, got {n}", file=sys.stderr)
        return 1
    if args.format == "json":
        import json

        matrices = []
        for k, entries, normsq in _basis_matrices(n, args.orthogonal):
            item = {"k": k, "entries": [[str(x) for x in row] for row in entries]}
            if args.normsq:
                item["normsq"] = str(normsq)
            matrices.append(item)
        payload = {
            "n": n,
            "kind": "orthogonal" if args.orthogonal else "raw",
            "matrices": matrices,
        }
        print(json.dumps(payload, indent=2))
        return 0
    sep = "," if args.format == "csv" else " "
    for k, entries, normsq in _basis_matrices(n, args.orthogonal):
        header = f"# k={k}"
        if args.normsq:
            header += f" normsq={normsq}"
        print(header)
        if args.format == "csv":
            for row in entries:
                print(sep.join(str(x) for x in row))
        else:
            width = max(len(str(x)) for row in entries for x in row)
            for row in entries:
                print(sep.join(str(x).rjust(width) for x in row))
        print()
    return 0


def _cmd_verify(args) -> int:
    doc, _ = _load(args.file)
    m = validate(doc.entries)
    reports = cross_check(m)
    digits = default_precision()
    worst = 0.0
    for report in reports:
        print(f"{report.method.value}: {format_number(report.max_abs_difference, digits)}")
        worst = max(worst, report.max_abs_difference)
    print(f"max_disagreement: {format_number(worst, digits)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concord",
        description="Consistent approximation of pairwise-comparisons matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="report reciprocity and triad inconsistency")
    p.add_argument("file")
    p.add_argument("--strict-reciprocal", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("approximate", help="emit the optimal consistent approximation")
    p.add_argument("file")
    p.add_argument("--out", help="write the matrix here instead of stdout")
    p.add_argument("--format", choices=["csv", "json"], help="output format (default: input format)")
    p.add_argument("--strict-reciprocal", action="store_true")
    p.set_defaults(func=_cmd_approximate)

    p = sub.add_parser("weights", help="priority weights of the consistent approximation")
    p.add_argument("file")
    p.add_argument("--strict-reciprocal", action="store_true")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("basis", help="emit the raw or orthogonal basis for dimension n")
    p.add_argument("n", type=int)
    p.add_argument("--orthogonal", action="store_true")
    p.add_argument("--normsq", action="store_true")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("verify", help="cross-check the projection against all oracles")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConcordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())
