"""Partitions, indexed partitions, and the two square matrix shapes.

A rank matrix is the upper-triangular table whose (i,j) entry is the rank
of multiplication by the (j-i)-th power of a fixed linear form from the
degree-i to the degree-j graded piece.  Its second difference is the
string-count table: entry (i,j) counts Jordan strings whose basis chain
starts in degree i and ends in degree j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError


def conjugate_parts(values: Iterable[int]) -> tuple[int, ...]:
    """Conjugate of a multiset of non-negative integers, descending."""
    vals = [v for v in values if v > 0]
    if any(v < 0 for v in vals):
        raise DomainError("negative value in partition data")
    if not vals:
        return ()
    return tuple(sum(1 for v in vals if v >= k) for k in range(1, max(vals) + 1))


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; input is sorted on construction."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted(parts, reverse=True))
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise DomainError("partition parts must be positive integers")
        object.__setattr__(self, "parts", parts)

    def total(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(conjugate_parts(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def render(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class IndexedPartition:
    """Partition whose parts carry the start degree of their string.

    Canonical order is descending length, then ascending start degree;
    strings sharing both are indistinguishable.
    """

    strings: tuple[tuple[int, int], ...]

    def __init__(self, strings: Iterable[tuple[int, int]]):
        strings = tuple(sorted(((int(p), int(s)) for p, s in strings), key=lambda ps: (-ps[0], ps[1])))
        for length, start in strings:
            if length < 1:
                raise DomainError(f"string length {length} must be positive")
            if start < 0:
                raise DomainError(f"start degree {start} must be non-negative")
        object.__setattr__(self, "strings", strings)

    def lengths(self) -> Partition:
        return Partition(length for length, _ in self.strings)

    def total(self) -> int:
        return sum(length for length, _ in self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.strings)

    def render(self) -> str:
        return " ".join(f"{length}_{start}" for length, start in self.strings)


class _SquareIntMatrix:
    __slots__ = ("entries",)

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        entries = tuple(tuple(int(e) for e in row) for row in rows)
        if not entries:
            raise DomainError("matrix must not be empty")
        size = len(entries)
        if any(len(row) != size for row in entries):
            raise DomainError("matrix must be square")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def d(self) -> int:
        """Socle degree: one less than the matrix size."""
        return len(self.entries) - 1

    def at(self, i: int, j: int) -> int:
        """Entry with out-of-range indices reading as zero."""
        if 0 <= i <= self.d and 0 <= j <= self.d:
            return self.entries[i][j]
        return 0

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.entries))

    def render(self) -> str:
        width = max(len(str(e)) for row in self.entries for e in row)
        return "\n".join(" ".join(str(e).rjust(width) for e in row) for row in self.entries)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_lists()!r})"


class RankMatrix(_SquareIntMatrix):
    """Candidate or computed rank matrix; entries are natural numbers.

    Construction only enforces shape and non-negativity.  Structural
    validity (triangularity, symmetry of diagonals, monotonicity, duality,
    non-negative second difference) is the business of
    ``checks.check_rank_matrix`` so that candidate matrices read from files
    can be examined rather than rejected.
    """

    def __init__(self, rows: Iterable[Iterable[int]]):
        super().__init__(rows)
        if any(e < 0 for row in self.entries for e in row):
            raise DomainError("rank matrix entries must be non-negative")

    def diagonal(self, i: int) -> tuple[int, ...]:
        """The i-th diagonal (entries (0,i), (1,i+1), ..., (d-i,d))."""
        if not 0 <= i <= self.d:
            raise DomainError(f"diagonal index {i} out of range 0..{self.d}")
        return tuple(self.entries[t][i + t] for t in range(self.d - i + 1))

    def diagonal_sums(self) -> tuple[int, ...]:
        return tuple(sum(self.diagonal(i)) for i in range(self.d + 1))

    def second_difference(self) -> tuple[tuple[int, ...], ...]:
        """Upper-triangular string-count table; entries may be negative.

        Entry (i,j) for i <= j is M(i,j) + M(i-1,j+1) - M(i-1,j) - M(i,j+1)
        with out-of-range entries read as zero; below the diagonal it is 0.
        """
        d = self.d
        return tuple(
            tuple(
                self.at(i, j) + self.at(i - 1, j + 1) - self.at(i - 1, j) - self.at(i, j + 1)
                if i <= j
                else 0
                for j in range(d + 1)
            )
            for i in range(d + 1)
        )


class JdtMatrix(_SquareIntMatrix):
    """Validated string-count table: upper triangular with entries >= 0."""

    def __init__(self, rows: Iterable[Iterable[int]]):
        super().__init__(rows)
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if i > j and e != 0:
                    raise DomainError(f"entry ({i},{j}) below the diagonal must be zero")
                if e < 0:
                    raise DomainError(f"negative string count at ({i},{j})")

    def strings(self) -> IndexedPartition:
        """Read the indexed partition off the table."""
        out = []
        for i in range(self.size):
            for j in range(i, self.size):
                count = self.entries[i][j]
                out.extend([(j - i + 1, i)] * count)
        return IndexedPartition(out)
