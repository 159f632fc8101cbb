"""Plain-text matrix documents and factorization strings.

Matrix format: optional '#' comment lines, then the order n on its own
line, then n rows of n whitespace-separated nonnegative integers.
"""

from __future__ import annotations

import sys

from .errors import ParseError, PreconditionError
from .matrices import SquareMatrix


def parse_matrix_text(text: str) -> SquareMatrix:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty matrix document")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the order, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError(f"order must be at least 1, got {n}")
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} rows after the order line, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries per row, got {len(tokens)}: {line!r}")
        try:
            row = [int(token) for token in tokens]
        except ValueError:
            raise ParseError(f"non-integer entry in row {line!r}") from None
        rows.append(row)
    try:
        return SquareMatrix.from_rows(rows)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def read_matrix(path: str) -> SquareMatrix:
    """Read a matrix document from a file, or stdin when path is '-'."""
    if path == "-":
        return parse_matrix_text(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_matrix_text(handle.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def format_matrix(matrix: SquareMatrix) -> str:
    lines = [str(matrix.n)]
    lines += [" ".join(str(v) for v in row) for row in matrix.entries]
    return "\n".join(lines) + "\n"


def parse_factors(spec: str) -> list[tuple[int, int]]:
    """Parse 'p1^e1,p2^e2,...' (exponent defaults to 1) into (prime, exponent)
    pairs; primality is validated downstream."""
    factors = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            raise ParseError(f"empty factor in {spec!r}")
        if "^" in part:
            base, _, exponent = part.partition("^")
        else:
            base, exponent = part, "1"
        try:
            factors.append((int(base), int(exponent)))
        except ValueError:
            raise ParseError(f"malformed factor {part!r}") from None
    if not factors:
        raise ParseError("empty factorization")
    return factors
