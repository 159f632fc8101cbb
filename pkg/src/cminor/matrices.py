"""Square integer matrices and their classical / combinatorial minors.

All indices at this module's public boundary are 1-based (row 1 is the
first row).  Entries are arbitrary-precision nonnegative integers; for
plain enumeration they are 0/1, but every operation downstream is a sum
of products of entries, so weighted counting works unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError

Entries = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SquareMatrix:
    """Immutable n x n matrix of nonnegative integers."""

    entries: Entries

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise PreconditionError("matrix order must be at least 1")
        for row in self.entries:
            if len(row) != n:
                raise PreconditionError("matrix must be square")
            for value in row:
                if not isinstance(value, int) or isinstance(value, bool):
                    raise PreconditionError("entries must be plain integers")
                if value < 0:
                    raise PreconditionError("entries must be nonnegative")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "SquareMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """Entry a_{ij}, 1-based."""
        _check_index(self.n, i, j)
        return self.entries[i - 1][j - 1]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def identity(n: int) -> SquareMatrix:
    return SquareMatrix(tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n)))


def all_ones(n: int) -> SquareMatrix:
    return SquareMatrix(tuple((1,) * n for _ in range(n)))


def _check_index(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise PreconditionError(f"index ({i},{j}) out of range for order {n}")


def _minor_entries(entries: Entries, i0: int, j0: int) -> Entries:
    """Classical minor on 0-based indices: delete row i0 and column j0."""
    return tuple(
        row[:j0] + row[j0 + 1 :]
        for r, row in enumerate(entries)
        if r != i0
    )


def _comb_column_order(n: int, j0: int) -> list[int]:
    """0-based source columns of the combinatorial minor for deleted column j0.

    The surviving columns left of j0 are cyclically rotated by one, so the
    order is c2,...,c_{j-1},c1 followed by the untouched right block.
    """
    if j0 == 0:
        return list(range(1, n))
    return list(range(1, j0)) + [0] + list(range(j0 + 1, n))


def _comb_minor_entries(entries: Entries, i0: int, j0: int) -> Entries:
    cols = _comb_column_order(len(entries), j0)
    return tuple(
        tuple(row[c] for c in cols)
        for r, row in enumerate(entries)
        if r != i0
    )


def _comb_minor_row1(entries: Entries, j0: int) -> Entries:
    """Combinatorial minor for the first-row expansion (i = 1), 0-based j0."""
    return _comb_minor_entries(entries, 0, j0)


def _tracking_minor_row1(entries: Entries, j0: int) -> Entries:
    """Combinatorial minor relabeled so the contracted cycle passes through
    element 1 again (0-based j0 >= 1).

    Contracting position (1, j) sends the cycle through element 1 to the
    cycle through element j-1 of the combinatorial minor.  Conjugating by
    the relabeling that moves j-1 back to 1 (a simultaneous row/column
    permutation, so all cycle statistics survive) yields the classical
    minor with row j pulled to the front and columns in natural order.
    """
    n = len(entries)
    rows = [j0] + [r for r in range(1, n) if r != j0]
    return tuple(
        tuple(entries[r][c] for c in range(n) if c != j0)
        for r in rows
    )


def classical_minor(matrix: SquareMatrix, i: int, j: int) -> SquareMatrix:
    """Submatrix with row i and column j deleted, remaining column order kept."""
    if matrix.n < 2:
        raise PreconditionError("minor of a 1x1 matrix is undefined")
    _check_index(matrix.n, i, j)
    return SquareMatrix(_minor_entries(matrix.entries, i - 1, j - 1))


def combinatorial_minor(matrix: SquareMatrix, i: int, j: int) -> SquareMatrix:
    """Classical minor with its first j-1 columns cyclically rotated left by one.

    For j = 1 and j = 2 this coincides with the classical minor.  The rotation
    realigns the minor's main diagonal with the cycle structure of the deleted
    position, which is what makes cycle-aware row expansions work.
    """
    if matrix.n < 2:
        raise PreconditionError("minor of a 1x1 matrix is undefined")
    _check_index(matrix.n, i, j)
    return SquareMatrix(_comb_minor_entries(matrix.entries, i - 1, j - 1))
