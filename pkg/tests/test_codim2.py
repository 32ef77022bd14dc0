import random

import pytest

from agjordan import (
    IndexedPartition,
    NotRealizableError,
    Partition,
    VarTable,
    hilbert,
    hilbert_from_dim_and_socle,
    jdt_from_jordan_type,
    jordan_degree_type,
    jordan_type,
    parse_linear_form,
    parse_poly,
)
from conftest import random_homogeneous, random_linear_form

XY = VarTable(("X", "Y"))


def test_minimal_staircase():
    assert hilbert_from_dim_and_socle(2, 1) == (1, 1)
    assert hilbert_from_dim_and_socle(1, 0) == (1,)


def test_staircase_matches_apolar_oracle():
    # X^2*Y^2 presents a 9-dimensional quotient with socle degree 4
    h = hilbert(parse_poly("X^2*Y^2", XY))
    assert sum(h) == 9
    assert hilbert_from_dim_and_socle(9, 4) == h == (1, 2, 3, 2, 1)


def test_unreachable_dimension():
    with pytest.raises(NotRealizableError):
        hilbert_from_dim_and_socle(5, 2)  # at socle degree 2 only 1, 3, 4 occur
    with pytest.raises(NotRealizableError):
        hilbert_from_dim_and_socle(2, 2)  # below the minimum s+1
    with pytest.raises(NotRealizableError):
        hilbert_from_dim_and_socle(1, -1)


def test_staircase_shape_exhaustively():
    for s in range(9):
        reachable = set()
        for r in range(s // 2 + 1):
            t = (r + 1) * (s + 1 - r)
            reachable.add(t)
            h = hilbert_from_dim_and_socle(t, s)
            assert sum(h) == t
            assert h[0] == 1
            assert h == h[::-1]
            assert all(h[i + 1] - h[i] in (0, 1) for i in range(s // 2))
        for t in range(s + 1, max(reachable) + 2):
            if t not in reachable:
                with pytest.raises(NotRealizableError):
                    hilbert_from_dim_and_socle(t, s)


def test_reconstruction_matches_pipeline_oracle():
    ell = parse_linear_form("x+y", XY)
    f = parse_poly("X^2*Y^2", XY)
    p = jordan_type(f, ell)
    assert p == Partition((5, 3, 1))
    assert jdt_from_jordan_type(p, 4) == jordan_degree_type(f, ell) == IndexedPartition(
        [(5, 0), (3, 1), (1, 2)]
    )

    g = parse_poly("X^2*Y", XY)
    q = jordan_type(g, ell)
    assert q == Partition((4, 2))
    assert jdt_from_jordan_type(q, 3) == jordan_degree_type(g, ell) == IndexedPartition(
        [(4, 0), (2, 1)]
    )


def test_single_chain():
    for d in range(7):
        assert jdt_from_jordan_type([d + 1], d) == IndexedPartition([(d + 1, 0)])


def test_too_many_full_strings():
    with pytest.raises(NotRealizableError):
        jdt_from_jordan_type([3, 3, 1, 1], 2)


def test_part_exceeding_longest_string():
    with pytest.raises(NotRealizableError):
        jdt_from_jordan_type([5, 1], 3)


def test_unrealizable_diagonal_reports_index():
    # multiplicities (5,0,1) force an 8-dimensional diagonal at socle
    # degree 2, which no two-variable quotient attains
    with pytest.raises(NotRealizableError, match="diagonal 0"):
        jdt_from_jordan_type([3, 1, 1, 1, 1, 1], 2)


def test_dimension_below_minimum_inside_reconstruction():
    # a lone part of size 2 at socle degree 3 leaves diagonal 0 too thin
    with pytest.raises(NotRealizableError):
        jdt_from_jordan_type([2], 3)


def test_equivalence_on_random_two_variable_corpus():
    rng = random.Random(77)
    for _ in range(60):
        d = rng.randint(1, 10)
        f = random_homogeneous(rng, 2, d)
        ell = random_linear_form(rng, 2)
        p = jordan_type(f, ell)
        assert jdt_from_jordan_type(p, d) == jordan_degree_type(f, ell)
