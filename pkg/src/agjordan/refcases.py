"""Bundled worked examples with pinned expected values.

Four fully worked cases serve as an end-to-end verification corpus: a
quartic with a mixed term, the layered quintic used to demonstrate the
realizer, and two generator pairs (three and four variables) that share a
Hilbert function and Jordan type but differ in Jordan degree type.  The
``verify-paper-examples`` command replays all of them and reports every
assertion individually.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apolar import catalecticant
from .jordan import (
    jdt_matrix,
    jordan_degree_type_from_rank_matrix,
    jordan_type_from_rank_matrix,
    jordan_type_oracle,
    rank_matrix,
)
from .linalg import rank
from .polyparse import VarTable, parse_linear_form, parse_poly
from .search import find_collisions
from .structures import IndexedPartition, Partition, RankMatrix


@dataclass(frozen=True)
class PipelineExpectation:
    name: str
    variables: tuple[str, ...]
    generator: str
    ell: str
    hilbert: tuple[int, ...]
    rank_matrix: tuple[tuple[int, ...], ...]
    jordan_type: tuple[int, ...]
    jordan_degree_type: tuple[tuple[int, int], ...]
    jdt_matrix: tuple[tuple[int, ...], ...] | None = None
    catalecticant_ranks: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class CollisionExpectation:
    name: str
    first: str
    second: str


@dataclass(frozen=True)
class AssertionResult:
    name: str
    passed: bool
    detail: str = ""


QUARTIC_MIXED = PipelineExpectation(
    name="quartic-plus-mixed",
    variables=("X", "Y", "Z"),
    generator="X^4 + X*Y^2*Z",
    ell="y",
    hilbert=(1, 3, 5, 3, 1),
    rank_matrix=(
        (1, 1, 1, 0, 0),
        (0, 3, 3, 2, 0),
        (0, 0, 5, 3, 1),
        (0, 0, 0, 3, 1),
        (0, 0, 0, 0, 1),
    ),
    jdt_matrix=(
        (0, 0, 1, 0, 0),
        (0, 0, 0, 2, 0),
        (0, 0, 1, 0, 1),
        (0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0),
    ),
    jordan_type=(3, 3, 3, 3, 1),
    jordan_degree_type=((3, 0), (3, 1), (3, 1), (3, 2), (1, 2)),
)

LAYERED_QUINTIC = PipelineExpectation(
    name="layered-quintic",
    variables=("X", "Y", "Z"),
    generator="X^3*Y^2 + (Y+Z)^5",
    ell="x",
    hilbert=(1, 3, 4, 4, 3, 1),
    rank_matrix=(
        (1, 1, 1, 1, 0, 0),
        (0, 3, 2, 2, 1, 0),
        (0, 0, 4, 3, 2, 1),
        (0, 0, 0, 4, 2, 1),
        (0, 0, 0, 0, 3, 1),
        (0, 0, 0, 0, 0, 1),
    ),
    jordan_type=(4, 4, 4, 1, 1, 1, 1),
    jordan_degree_type=((4, 0), (4, 1), (4, 2), (1, 1), (1, 2), (1, 3), (1, 4)),
    catalecticant_ranks=((1, 3), (2, 4)),
)

DEGREE8_FIRST = PipelineExpectation(
    name="codim3-pair/first",
    variables=("X", "Y", "Z"),
    generator="X^6*Y^2 + X^3*(Y+Z)^5 + X*Y*(Y+Z)^6 + Y^8 + Z^8",
    ell="x",
    hilbert=(1, 3, 6, 9, 9, 9, 6, 3, 1),
    rank_matrix=(
        (1, 1, 1, 1, 1, 1, 1, 0, 0),
        (0, 3, 3, 3, 3, 2, 2, 1, 0),
        (0, 0, 6, 6, 5, 4, 3, 2, 1),
        (0, 0, 0, 9, 6, 5, 4, 2, 1),
        (0, 0, 0, 0, 9, 6, 5, 3, 1),
        (0, 0, 0, 0, 0, 9, 6, 3, 1),
        (0, 0, 0, 0, 0, 0, 6, 3, 1),
        (0, 0, 0, 0, 0, 0, 0, 3, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 1),
    ),
    jordan_type=(7, 7, 7, 4, 4, 4, 4, 2, 2, 1, 1, 1, 1, 1, 1),
    jordan_degree_type=(
        (7, 0), (7, 1), (7, 2),
        (4, 1), (4, 2), (4, 3), (4, 4),
        (2, 2), (2, 5),
        (1, 3), (1, 3), (1, 4), (1, 4), (1, 5), (1, 5),
    ),
)

DEGREE8_SECOND = PipelineExpectation(
    name="codim3-pair/second",
    variables=("X", "Y", "Z"),
    generator="X^6*Y^2 + X^3*(Y^5+Z^5) + X*(Y^7+Z^7) + Y^8 + Y^7*Z + Y*Z^7 + Z^8",
    ell="x",
    hilbert=(1, 3, 6, 9, 9, 9, 6, 3, 1),
    rank_matrix=(
        (1, 1, 1, 1, 1, 1, 1, 0, 0),
        (0, 3, 3, 3, 3, 2, 2, 1, 0),
        (0, 0, 6, 5, 5, 4, 3, 2, 1),
        (0, 0, 0, 9, 7, 5, 4, 2, 1),
        (0, 0, 0, 0, 9, 7, 5, 3, 1),
        (0, 0, 0, 0, 0, 9, 5, 3, 1),
        (0, 0, 0, 0, 0, 0, 6, 3, 1),
        (0, 0, 0, 0, 0, 0, 0, 3, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 1),
    ),
    jordan_type=(7, 7, 7, 4, 4, 4, 4, 2, 2, 1, 1, 1, 1, 1, 1),
    jordan_degree_type=(
        (7, 0), (7, 1), (7, 2),
        (4, 1), (4, 2), (4, 3), (4, 4),
        (2, 3), (2, 4),
        (1, 2), (1, 3), (1, 3), (1, 5), (1, 5), (1, 6),
    ),
)

QUINTIC4_FIRST = PipelineExpectation(
    name="codim4-pair/first",
    variables=("X", "Y", "Z", "W"),
    generator="X^4*Y + X^2*Y^2*Z + X*Y^3*W + Y^3*W^2",
    ell="x",
    hilbert=(1, 4, 7, 7, 4, 1),
    rank_matrix=(
        (1, 1, 1, 1, 1, 0),
        (0, 4, 4, 3, 2, 1),
        (0, 0, 7, 4, 3, 1),
        (0, 0, 0, 7, 4, 1),
        (0, 0, 0, 0, 4, 1),
        (0, 0, 0, 0, 0, 1),
    ),
    jordan_type=(5, 5, 3, 3, 2, 2, 1, 1, 1, 1),
    jordan_degree_type=(
        (5, 0), (5, 1),
        (3, 1), (3, 2),
        (2, 1), (2, 3),
        (1, 2), (1, 2), (1, 3), (1, 3),
    ),
)

QUINTIC4_SECOND = PipelineExpectation(
    name="codim4-pair/second",
    variables=("X", "Y", "Z", "W"),
    generator="X^4*Y + X^2*Y^2*Z + X*Z^3*Y + W^5",
    ell="x",
    hilbert=(1, 4, 7, 7, 4, 1),
    rank_matrix=(
        (1, 1, 1, 1, 1, 0),
        (0, 4, 3, 3, 2, 1),
        (0, 0, 7, 6, 3, 1),
        (0, 0, 0, 7, 3, 1),
        (0, 0, 0, 0, 4, 1),
        (0, 0, 0, 0, 0, 1),
    ),
    jordan_type=(5, 5, 3, 3, 2, 2, 1, 1, 1, 1),
    jordan_degree_type=(
        (5, 0), (5, 1),
        (3, 1), (3, 2),
        (2, 2), (2, 2),
        (1, 1), (1, 2), (1, 3), (1, 4),
    ),
)

PIPELINE_CASES = (
    QUARTIC_MIXED,
    LAYERED_QUINTIC,
    DEGREE8_FIRST,
    DEGREE8_SECOND,
    QUINTIC4_FIRST,
    QUINTIC4_SECOND,
)

COLLISION_CASES = (
    CollisionExpectation("codim3-pair", DEGREE8_FIRST.name, DEGREE8_SECOND.name),
    CollisionExpectation("codim4-pair", QUINTIC4_FIRST.name, QUINTIC4_SECOND.name),
)


def _case_inputs(case: PipelineExpectation):
    table = VarTable(case.variables)
    f = parse_poly(case.generator, table)
    ell = parse_linear_form(case.ell, table)
    return f, ell


def run_pipeline_case(case: PipelineExpectation) -> list[AssertionResult]:
    results: list[AssertionResult] = []

    def record(label: str, expected, actual):
        ok = expected == actual
        detail = "" if ok else f"expected {expected}, got {actual}"
        results.append(AssertionResult(f"{case.name}: {label}", ok, detail))

    try:
        f, ell = _case_inputs(case)
        m = rank_matrix(f, ell)
        record("hilbert function", tuple(case.hilbert), m.diagonal(0))
        record("rank matrix", RankMatrix(case.rank_matrix), m)
        if case.jdt_matrix is not None:
            record("string-count matrix", [list(r) for r in case.jdt_matrix], jdt_matrix(m).to_lists())
        record("jordan type", Partition(case.jordan_type), jordan_type_from_rank_matrix(m))
        record(
            "jordan degree type",
            IndexedPartition(case.jordan_degree_type),
            jordan_degree_type_from_rank_matrix(m),
        )
        record("jordan type oracle", Partition(case.jordan_type), jordan_type_oracle(f, ell))
        for j, expected_rank in case.catalecticant_ranks:
            record(f"catalecticant {j} rank", expected_rank, rank(catalecticant(j, f)))
    except Exception as exc:  # surface, never hide, a broken case
        results.append(AssertionResult(f"{case.name}: execution", False, f"{type(exc).__name__}: {exc}"))
    return results


def run_collision_case(case: CollisionExpectation) -> list[AssertionResult]:
    by_name = {c.name: c for c in PIPELINE_CASES}
    first, second = by_name[case.first], by_name[case.second]
    results: list[AssertionResult] = []
    try:
        pool = [_case_inputs(first), _case_inputs(second)]
        collisions = find_collisions(pool)
        ok = len(collisions) == 1 and (collisions[0].first, collisions[0].second) == (0, 1)
        detail = "" if ok else f"expected exactly one collision between the pair, got {collisions}"
        results.append(AssertionResult(f"{case.name}: collision detected", ok, detail))
        if ok:
            hit = collisions[0]
            same_type = hit.jordan_type == Partition(first.jordan_type)
            results.append(
                AssertionResult(
                    f"{case.name}: shared jordan type",
                    same_type,
                    "" if same_type else f"got {hit.jordan_type}",
                )
            )
    except Exception as exc:
        results.append(AssertionResult(f"{case.name}: execution", False, f"{type(exc).__name__}: {exc}"))
    return results


def verify_reference_examples() -> list[AssertionResult]:
    """Replay every bundled case; one result per assertion."""
    results: list[AssertionResult] = []
    for case in PIPELINE_CASES:
        results.extend(run_pipeline_case(case))
    for collision_case in COLLISION_CASES:
        results.extend(run_collision_case(collision_case))
    return results
