"""Weak and strong Lefschetz witnesses from Jordan-type data.

These are witness predicates for one specific linear form, not
algebra-level decisions: the form witnesses the weak property when its
block count equals the Sperner number (the peak of the Hilbert function),
and the strong property when its Jordan type is exactly the conjugate
partition of the Hilbert function.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError
from .structures import Partition, conjugate_parts


def sperner(h: Sequence[int]) -> int:
    """Peak value of a Hilbert function."""
    if not h:
        raise DomainError("Hilbert function must be nonempty")
    return max(h)


def conjugate(h: Sequence[int]) -> Partition:
    """Conjugate partition of a Hilbert function's values."""
    if not h:
        raise DomainError("Hilbert function must be nonempty")
    return Partition(conjugate_parts(h))


def _require_matching_total(p: Partition | Iterable[int], h: Sequence[int]) -> Partition:
    partition = p if isinstance(p, Partition) else Partition(p)
    if partition.total() != sum(h):
        raise DomainError(
            f"partition sums to {partition.total()} but the Hilbert function sums to {sum(h)}"
        )
    return partition


def wlp_witness(p: Partition | Iterable[int], h: Sequence[int]) -> bool:
    """True when the number of parts equals the Sperner number."""
    partition = _require_matching_total(p, h)
    return len(partition) == sperner(h)


def slp_witness(p: Partition | Iterable[int], h: Sequence[int]) -> bool:
    """True when the partition is the conjugate of the Hilbert function."""
    partition = _require_matching_total(p, h)
    return partition == conjugate(h)
