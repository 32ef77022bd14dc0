"""Dense matrices over the rationals with exact rank computation.

Scalars are ``fractions.Fraction`` throughout.  Rank is computed by
fraction-free (Bareiss) elimination on an integer copy of the matrix, so
every rank decision is exact regardless of entry size.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, InternalInconsistencyError

Rational = Fraction


class Matrix:
    """Immutable dense matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Rational | int]):
        if rows < 0 or cols < 0:
            raise DomainError("matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise DomainError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Rational | int]]) -> "Matrix":
        data = [list(r) for r in rows]
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DomainError("rows have unequal lengths")
        return cls(nrows, ncols, [e for r in data for e in r])

    def __getitem__(self, pos: tuple[int, int]) -> Rational:
        i, j = pos
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DomainError(f"index ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Rational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[Rational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        out = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def _integer_rows(m: Matrix) -> list[list[int]]:
    # Row scaling by the lcm of denominators preserves rank.
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = math.lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * scale) for e in row])
    return out


def rank(m: Matrix) -> int:
    """Exact rank over the rationals via fraction-free elimination.

    Denominators are cleared row by row, then Bareiss one-step elimination
    runs on integers; every division is checked to be exact.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        # partial pivoting: largest magnitude among nonzero candidates
        pivot_row = max(
            (i for i in range(r, nrows) if a[i][c] != 0),
            key=lambda i: abs(a[i][c]),
            default=None,
        )
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, nrows):
            # Bareiss one-step update; rows with a zero leading entry must
            # still be rescaled or later divisions stop being exact.
            ai, ar = a[i], a[r]
            aic = ai[c]
            for j in range(c, ncols):
                num = ai[j] * pivot - aic * ar[j]
                q, rem = divmod(num, prev)
                if rem != 0:
                    raise InternalInconsistencyError("fraction-free elimination hit an inexact division")
                ai[j] = q
            ai[c] = 0
        prev = pivot
        r += 1
    return r
