"""Structural validity checks for candidate rank matrices.

Each rule is a necessary condition for a matrix to occur as a rank matrix
of some Gorenstein quotient and linear form; together they are not known
to be sufficient, and the realizer search treats them only as a gate.
The rules follow from rank-of-composition bounds and duality:

  upper_triangular              entries below the diagonal are zero
  diagonal_symmetry             every diagonal vector reads the same reversed
  monotonicity                  weak decrease along rows, weak increase down columns
  duality                       entry (i,j) equals entry (d-j,d-i)
  nonnegative_second_difference the induced string counts are all >= 0
  unital                        the top-left entry is 1
"""

from __future__ import annotations

from dataclasses import dataclass

from .structures import RankMatrix


@dataclass(frozen=True)
class Violation:
    rule: str
    row: int
    col: int
    detail: str


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    violations: tuple[Violation, ...]

    def rules_hit(self) -> tuple[str, ...]:
        seen: list[str] = []
        for v in self.violations:
            if v.rule not in seen:
                seen.append(v.rule)
        return tuple(seen)


def check_rank_matrix(m: RankMatrix) -> CheckReport:
    """Run every rule and report all failures; never raises."""
    violations: list[Violation] = []
    d = m.d
    entries = m.entries

    for i in range(d + 1):
        for j in range(i):
            if entries[i][j] != 0:
                violations.append(Violation("upper_triangular", i, j, f"entry {entries[i][j]} below the diagonal"))

    for k in range(d + 1):
        diag = m.diagonal(k)
        for t in range((len(diag)) // 2):
            mirror = len(diag) - 1 - t
            if diag[t] != diag[mirror]:
                violations.append(
                    Violation(
                        "diagonal_symmetry", t, k + t,
                        f"diagonal {k} reads {diag[t]} at offset {t} but {diag[mirror]} at offset {mirror}",
                    )
                )

    for i in range(d + 1):
        for j in range(i, d):
            if entries[i][j + 1] > entries[i][j]:
                violations.append(
                    Violation("monotonicity", i, j + 1, f"row {i} increases from {entries[i][j]} to {entries[i][j + 1]}")
                )
    for j in range(d + 1):
        for i in range(1, j + 1):
            if entries[i - 1][j] > entries[i][j]:
                violations.append(
                    Violation("monotonicity", i, j, f"column {j} decreases from {entries[i - 1][j]} to {entries[i][j]}")
                )

    for i in range(d + 1):
        for j in range(i, d + 1):
            di, dj = d - j, d - i
            if (i, j) <= (di, dj) and entries[i][j] != entries[di][dj]:
                violations.append(
                    Violation("duality", i, j, f"entry {entries[i][j]} but {entries[di][dj]} at ({di},{dj})")
                )

    table = m.second_difference()
    for i in range(d + 1):
        for j in range(i, d + 1):
            if table[i][j] < 0:
                violations.append(
                    Violation("nonnegative_second_difference", i, j, f"string count would be {table[i][j]}")
                )

    if entries[0][0] != 1:
        violations.append(Violation("unital", 0, 0, f"top-left entry is {entries[0][0]}, expected 1"))

    return CheckReport(not violations, tuple(violations))
