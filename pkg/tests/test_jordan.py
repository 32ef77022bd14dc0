import random

import pytest

from agjordan import (
    DomainError,
    IndexedPartition,
    LinearForm,
    Matrix,
    Partition,
    Polynomial,
    RankMatrix,
    VarTable,
    dims_vector,
    hilbert,
    jdt_matrix,
    jordan_degree_type,
    jordan_type,
    jordan_type_oracle,
    parse_linear_form,
    parse_poly,
    rank,
    rank_matrix,
)
from agjordan.jordan import part_multiplicities
from conftest import random_homogeneous, random_linear_form

XYZ = VarTable(("X", "Y", "Z"))
QUARTIC = parse_poly("X^4 + X*Y^2*Z", XYZ)
ELL_Y = parse_linear_form("y", XYZ)

QUARTIC_M = RankMatrix([
    [1, 1, 1, 0, 0],
    [0, 3, 3, 2, 0],
    [0, 0, 5, 3, 1],
    [0, 0, 0, 3, 1],
    [0, 0, 0, 0, 1],
])


def test_rank_matrix_quartic():
    assert rank_matrix(QUARTIC, ELL_Y) == QUARTIC_M


def test_rank_matrix_one_variable_chain():
    m = rank_matrix(Polynomial(1, {(2,): 1}), LinearForm([1]))
    assert m.to_lists() == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def test_diagonals():
    assert QUARTIC_M.diagonal(0) == (1, 3, 5, 3, 1)
    assert QUARTIC_M.diagonal(1) == (1, 3, 3, 1)
    assert QUARTIC_M.diagonal(2) == (1, 2, 1)
    assert QUARTIC_M.diagonal(4) == (0,)
    with pytest.raises(DomainError):
        QUARTIC_M.diagonal(5)


def test_diagonal_equals_hilbert_of_derivative():
    from agjordan import diff_apply

    m = rank_matrix(QUARTIC, ELL_Y)
    g = diff_apply(ELL_Y.to_polynomial(), QUARTIC)
    assert m.diagonal(1) == hilbert(g)


def test_zero_diagonals_when_derivative_vanishes():
    quintic = parse_poly("X^3*Y^2 + (Y+Z)^5", XYZ)
    m = rank_matrix(quintic, parse_linear_form("x", XYZ))
    assert m.diagonal(5) == (0,)
    assert m.diagonal(4) == (0, 0)
    assert dims_vector(m) == (16, 9, 6, 3, 0, 0)


def test_part_multiplicities():
    assert part_multiplicities((16, 9, 6, 3, 0, 0)) == (4, 0, 0, 3, 0, 0)
    assert part_multiplicities((13, 8, 4, 0, 0)) == (1, 0, 4, 0, 0)


def test_jdt_matrix_quartic():
    assert jdt_matrix(QUARTIC_M).to_lists() == [
        [0, 0, 1, 0, 0],
        [0, 0, 0, 2, 0],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ]


def test_jdt_matrix_single_chain():
    m = RankMatrix([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    j = jdt_matrix(m)
    assert j.to_lists() == [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    assert j.strings() == IndexedPartition([(3, 0)])


def test_jdt_matrix_rejects_negative_counts():
    bad = RankMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(DomainError, match=r"\(1,1\)"):
        jdt_matrix(bad)


def test_jordan_type_examples():
    assert jordan_type(QUARTIC, ELL_Y) == Partition((3, 3, 3, 3, 1))
    assert jordan_type(Polynomial(1, {(2,): 1}), LinearForm([1])) == Partition((3,))


def test_jordan_degree_type_examples():
    assert jordan_degree_type(QUARTIC, ELL_Y) == IndexedPartition(
        [(3, 0), (3, 1), (3, 1), (3, 2), (1, 2)]
    )
    assert jordan_degree_type(Polynomial(1, {(2,): 1}), LinearForm([1])) == IndexedPartition([(3, 0)])


def test_two_squares_strings():
    xy = VarTable(("X", "Y"))
    f = parse_poly("X^2 + Y^2", xy)
    ell = parse_linear_form("x", xy)
    j = jdt_matrix(rank_matrix(f, ell))
    assert j.to_lists() == [[0, 0, 1], [0, 1, 0], [0, 0, 0]]
    assert jordan_degree_type(f, ell) == IndexedPartition([(3, 0), (1, 1)])
    assert jordan_type_oracle(f, ell) == Partition((3, 1))


def test_oracle_matches_explicit_nilpotent_operator():
    # multiplication by x on the 4-dimensional quotient of X^2+Y^2 with
    # basis (1, x, y, x^2): sends 1 to x, x to x^2, y and x^2 to 0
    n = Matrix.from_rows([
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 1, 0, 0],
    ])
    n2 = Matrix.from_rows([
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [1, 0, 0, 0],
    ])
    nullities = [4 - rank(n), 4 - rank(n2), 4]
    conj = [nullities[0], nullities[1] - nullities[0], nullities[2] - nullities[1]]
    assert conj == [2, 1, 1]
    # conjugate of (2,1,1) is (3,1), matching both pipeline and oracle
    xy = VarTable(("X", "Y"))
    f = parse_poly("X^2 + Y^2", xy)
    ell = parse_linear_form("x", xy)
    assert jordan_type(f, ell) == Partition((3, 1))
    assert jordan_type_oracle(f, ell) == Partition((3, 1))


def test_oracle_on_four_variable_pair():
    xyzw = VarTable(("X", "Y", "Z", "W"))
    ell = parse_linear_form("x", xyzw)
    expected = Partition((5, 5, 3, 3, 2, 2, 1, 1, 1, 1))
    for text in (
        "X^4*Y + X^2*Y^2*Z + X*Y^3*W + Y^3*W^2",
        "X^4*Y + X^2*Y^2*Z + X*Z^3*Y + W^5",
    ):
        f = parse_poly(text, xyzw)
        assert jordan_type_oracle(f, ell) == expected
        assert jordan_type(f, ell) == expected


def test_non_generic_form_is_fine():
    # a deliberately non-generic direction: y kills the X^4 term entirely
    assert jordan_type(QUARTIC, ELL_Y).total() == sum(hilbert(QUARTIC))


def test_pipeline_invariants_on_random_corpus():
    rng = random.Random(101)
    for _ in range(40):
        nvars = rng.randint(1, 3)
        d = rng.randint(1, 5)
        f = random_homogeneous(rng, nvars, d)
        ell = random_linear_form(rng, nvars)
        m = rank_matrix(f, ell)
        entries = m.entries
        # row decrease, column increase inside the triangle
        for i in range(d + 1):
            for j in range(i, d):
                assert entries[i][j + 1] <= entries[i][j]
        for j in range(d + 1):
            for i in range(1, j + 1):
                assert entries[i - 1][j] <= entries[i][j]
        # duality and diagonal symmetry
        for i in range(d + 1):
            for j in range(i, d + 1):
                assert entries[i][j] == entries[d - j][d - i]
        for k in range(d + 1):
            diag = m.diagonal(k)
            assert diag == diag[::-1]
        j_matrix = jdt_matrix(m)
        jm = j_matrix.to_lists()
        # string-count duality
        for i in range(d + 1):
            for j in range(i, d + 1):
                assert jm[i][j] == jm[d - j][d - i]
        # diagonal sums of the string counts recover the multiplicities
        n = part_multiplicities(dims_vector(m))
        for length_minus_one in range(d + 1):
            total = sum(jm[a][a + length_minus_one] for a in range(d + 1 - length_minus_one))
            assert total == n[length_minus_one]
        # strings account for the whole dimension
        strings = j_matrix.strings()
        assert strings.total() == sum(m.diagonal(0))
        assert strings.lengths() == jordan_type(f, ell)
        # the independent oracle agrees
        p = jordan_type(f, ell)
        assert p == jordan_type_oracle(f, ell)
        assert p.total() == sum(hilbert(f))


def test_input_validation():
    with pytest.raises(DomainError):
        rank_matrix(Polynomial.zero(2), LinearForm([1, 0]))
    with pytest.raises(DomainError):
        rank_matrix(QUARTIC, LinearForm([0, 0, 0]))
    with pytest.raises(DomainError):
        rank_matrix(QUARTIC, LinearForm([1, 0]))
    with pytest.raises(DomainError):
        rank_matrix(parse_poly("X^2 + Y", XYZ), LinearForm([1, 0, 0]))
