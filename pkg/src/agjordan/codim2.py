"""Two-variable reconstruction: Jordan type determines Jordan degree type.

For quotients of a two-variable ring the Hilbert function of any
derivative quotient climbs by exactly one per degree up to some level r,
stays flat, and descends symmetrically, so it is pinned down by its total
and its socle degree.  That makes every diagonal of the rank matrix, and
hence the whole string-count table, a function of the block-size
multiplicities alone.
"""

from __future__ import annotations

from typing import Iterable

from .apolar import HilbertFunction
from .checks import check_rank_matrix
from .errors import NotRealizableError
from .jordan import jdt_matrix
from .structures import IndexedPartition, Partition, RankMatrix


def hilbert_from_dim_and_socle(t: int, s: int) -> HilbertFunction:
    """The unique two-variable Hilbert function with total t and socle degree s.

    Solves t = (r+1)(s+1-r) for the climb level r; values are
    min(i+1, r+1, s-i+1).  Fails when no integer r in 0..floor(s/2) works,
    i.e. when (t, s) is not realizable with at most two variables.
    """
    if s < 0:
        raise NotRealizableError(f"socle degree {s} must be non-negative")
    if t < s + 1:
        raise NotRealizableError(f"dimension {t} is below the minimum {s + 1} for socle degree {s}")
    for r in range(s // 2 + 1):
        if (r + 1) * (s + 1 - r) == t:
            return tuple(min(i + 1, r + 1, s - i + 1) for i in range(s + 1))
    raise NotRealizableError(f"no two-variable Hilbert function has dimension {t} at socle degree {s}")


def jdt_from_jordan_type(p: Partition | Iterable[int], d: int) -> IndexedPartition:
    """Reconstruct the Jordan degree type from a Jordan type and socle degree.

    Runs the dimension recursion dims(i) = n(i) + 2*dims(i+1) - dims(i+2)
    downward from the top, rebuilds each diagonal with
    ``hilbert_from_dim_and_socle``, assembles the rank matrix and reads the
    strings off its second difference.  Partitions that are not the Jordan
    type of any two-variable quotient with socle degree d produce a
    structured error naming the failing index.
    """
    partition = p if isinstance(p, Partition) else Partition(p)
    if d < 0:
        raise NotRealizableError(f"socle degree {d} must be non-negative")
    if partition.parts and partition.parts[0] > d + 1:
        raise NotRealizableError(
            f"part {partition.parts[0]} exceeds the longest possible string {d + 1}"
        )

    n = [0] * (d + 1)
    for part in partition:
        n[part - 1] += 1
    if n[d] >= 2:
        raise NotRealizableError(
            f"{n[d]} strings of full length {d + 1}: the top derivative quotient has dimension at most 1"
        )

    dims = [0] * (d + 3)
    for i in range(d, -1, -1):
        dims[i] = n[i] + 2 * dims[i + 1] - dims[i + 2]
        if dims[i] < 0:
            raise NotRealizableError(f"dimension recursion went negative at power {i}")
    dims = dims[: d + 1]
    for i in range(d):
        if dims[i] < dims[i + 1]:
            raise NotRealizableError(f"derivative dimensions increase from power {i} to {i + 1}")

    rows = [[0] * (d + 1) for _ in range(d + 1)]
    for i in range(d + 1):
        if dims[i] == 0:
            continue
        try:
            values = hilbert_from_dim_and_socle(dims[i], d - i)
        except NotRealizableError as exc:
            raise NotRealizableError(f"diagonal {i}: {exc}") from exc
        for t, value in enumerate(values):
            rows[t][i + t] = value

    m = RankMatrix(rows)
    report = check_rank_matrix(m)
    if not report.passed:
        first = report.violations[0]
        raise NotRealizableError(
            f"reconstructed matrix fails {first.rule} at ({first.row},{first.col}): {first.detail}"
        )
    return jdt_matrix(m).strings()
