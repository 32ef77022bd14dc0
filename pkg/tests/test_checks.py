import random

from agjordan import RankMatrix, check_rank_matrix, rank_matrix
from agjordan.refcases import DEGREE8_FIRST, DEGREE8_SECOND, LAYERED_QUINTIC, PIPELINE_CASES, QUARTIC_MIXED
from conftest import random_homogeneous, random_linear_form


def test_reference_matrices_pass():
    for case in PIPELINE_CASES:
        report = check_rank_matrix(RankMatrix(case.rank_matrix))
        assert report.passed, (case.name, report.violations)
        assert report.violations == ()


def test_perturbed_quintic_matrix_fails():
    rows = [list(r) for r in LAYERED_QUINTIC.rank_matrix]
    rows[1][2] = 3
    report = check_rank_matrix(RankMatrix(rows))
    assert not report.passed
    # breaking one entry of a dual pair trips symmetry and duality
    assert set(report.rules_hit()) == {"diagonal_symmetry", "duality"}
    positions = {(v.row, v.col) for v in report.violations}
    assert (1, 2) in positions


def test_asymmetric_diagonal_fails():
    rows = [
        [1, 1, 0, 0],
        [0, 2, 2, 0],
        [0, 0, 2, 2],
        [0, 0, 0, 1],
    ]
    report = check_rank_matrix(RankMatrix(rows))
    assert "diagonal_symmetry" in report.rules_hit()


def test_negative_string_count_is_its_own_failure():
    # passes triangularity, symmetry, monotonicity, duality and unitality,
    # but implies a -1 string count at (1,1)
    report = check_rank_matrix(RankMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]]))
    assert report.rules_hit() == ("nonnegative_second_difference",)
    v = report.violations[0]
    assert (v.row, v.col) == (1, 1)


def test_lower_triangle_violation():
    report = check_rank_matrix(RankMatrix([[1, 1], [1, 1]]))
    assert "upper_triangular" in report.rules_hit()


def test_monotonicity_violations():
    rising_row = RankMatrix([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    assert "monotonicity" in check_rank_matrix(rising_row).rules_hit()
    falling_col = RankMatrix([[1, 2, 1], [0, 1, 1], [0, 0, 1]])
    assert "monotonicity" in check_rank_matrix(falling_col).rules_hit()


def test_unital_violation():
    report = check_rank_matrix(RankMatrix([[2, 1], [0, 2]]))
    assert "unital" in report.rules_hit()


def test_report_consistency():
    good = check_rank_matrix(RankMatrix(QUARTIC_MIXED.rank_matrix))
    assert good.passed is (len(good.violations) == 0)
    bad = check_rank_matrix(RankMatrix([[0]]))
    assert not bad.passed and bad.violations


def test_every_pipeline_matrix_passes():
    rng = random.Random(55)
    for _ in range(25):
        nvars = rng.randint(1, 3)
        f = random_homogeneous(rng, nvars, rng.randint(1, 5))
        ell = random_linear_form(rng, nvars)
        report = check_rank_matrix(rank_matrix(f, ell))
        assert report.passed


def test_checks_only_read_the_matrix():
    # same matrix from two different generators gives identical reports
    m1 = RankMatrix(DEGREE8_FIRST.rank_matrix)
    m2 = RankMatrix(DEGREE8_SECOND.rank_matrix)
    assert check_rank_matrix(m1).passed and check_rank_matrix(m2).passed
    assert m1 != m2
