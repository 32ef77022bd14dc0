"""Rank matrix, string-count matrix, Jordan type and Jordan degree type.

The pipeline for a dual generator F and linear form ell:

  1. The k-th diagonal of the rank matrix is the Hilbert function of the
     quotient presented by the k-th derivative ell^k applied to F, so the
     whole matrix comes from catalecticant ranks of those derivatives.
  2. The multiset of Jordan block sizes follows from the second difference
     of the diagonal sums: with dims(k) the total dimension on diagonal k
     (zero beyond the top), n(i) = dims(i) + dims(i+2) - 2*dims(i+1) blocks
     have size i+1.
  3. The second difference of the matrix itself refines this: entry (i,j)
     counts strings starting in degree i and ending in degree j, which
     attaches a start degree to every part.

``jordan_type_oracle`` recomputes the block sizes by a different route
(kernel dimensions of an explicit nilpotent operator on the derivative
span of F) and must agree with ``jordan_type`` on every input.
"""

from __future__ import annotations

from fractions import Fraction

from .apolar import hilbert
from .checks import check_rank_matrix
from .errors import DomainError, InternalInconsistencyError
from .linalg import Matrix, rank
from .multipoly import LinearForm, Polynomial, diff_apply, monomials_of_degree
from .structures import IndexedPartition, JdtMatrix, Partition, RankMatrix, conjugate_parts

DimsVector = tuple[int, ...]


def _require_pipeline_input(f: Polynomial, ell: LinearForm) -> int:
    if f.is_zero():
        raise DomainError("dual generator must be nonzero")
    if not f.is_homogeneous():
        raise DomainError("dual generator must be homogeneous")
    if ell.nvars != f.nvars:
        raise DomainError(f"variable count mismatch: form has {ell.nvars}, generator has {f.nvars}")
    if ell.is_zero():
        raise DomainError("linear form must be nonzero")
    degree = f.degree()
    assert degree is not None
    return degree


def rank_matrix(f: Polynomial, ell: LinearForm) -> RankMatrix:
    """Rank matrix of (F, ell), built diagonal by diagonal.

    Diagonal k is the Hilbert function of the quotient presented by
    ell^k applied to F; when that derivative vanishes the whole diagonal
    is zero.  Every produced matrix is re-checked against the structural
    conditions; a failure would be a bug, not bad input.
    """
    d = _require_pipeline_input(f, ell)
    ell_poly = ell.to_polynomial()
    rows = [[0] * (d + 1) for _ in range(d + 1)]
    g = f
    for k in range(d + 1):
        if k > 0:
            g = diff_apply(ell_poly, g)
        if g.is_zero():
            continue
        for t, value in enumerate(hilbert(g)):
            rows[t][k + t] = value
    m = RankMatrix(rows)
    report = check_rank_matrix(m)
    if not report.passed:
        raise InternalInconsistencyError(
            f"computed rank matrix violates structural conditions: {report.violations[0]}"
        )
    return m


def dims_vector(m: RankMatrix) -> DimsVector:
    """Diagonal sums: the dimensions of the derivative quotients."""
    return m.diagonal_sums()


def part_multiplicities(dims: DimsVector) -> tuple[int, ...]:
    """Second difference of dims: n(i) blocks of size i+1.

    Entries beyond the top diagonal read as zero.  A negative value cannot
    arise from genuine rank matrices and is treated as fatal.
    """
    d = len(dims) - 1
    padded = tuple(dims) + (0, 0)
    n = tuple(padded[i] + padded[i + 2] - 2 * padded[i + 1] for i in range(d + 1))
    for i, value in enumerate(n):
        if value < 0:
            raise InternalInconsistencyError(f"negative block multiplicity n({i}) = {value}")
    return n


def jordan_type_from_rank_matrix(m: RankMatrix) -> Partition:
    n = part_multiplicities(dims_vector(m))
    parts: list[int] = []
    for i, count in enumerate(n):
        parts.extend([i + 1] * count)
    partition = Partition(parts)
    if partition.total() != dims_vector(m)[0]:
        raise InternalInconsistencyError("block sizes do not sum to the algebra dimension")
    return partition


def jordan_type(f: Polynomial, ell: LinearForm) -> Partition:
    """Jordan block sizes of multiplication by ell, descending."""
    return jordan_type_from_rank_matrix(rank_matrix(f, ell))


def jdt_matrix(m: RankMatrix) -> JdtMatrix:
    """String-count table of a structurally valid rank matrix.

    A negative entry in the second difference means the input was not a
    rank matrix; the offending position is reported.
    """
    table = m.second_difference()
    for i, row in enumerate(table):
        for j, value in enumerate(row):
            if value < 0:
                raise DomainError(
                    f"not a valid rank matrix: string count at ({i},{j}) would be {value}"
                )
    return JdtMatrix(table)


def jordan_degree_type_from_rank_matrix(m: RankMatrix) -> IndexedPartition:
    return jdt_matrix(m).strings()


def jordan_degree_type(f: Polynomial, ell: LinearForm) -> IndexedPartition:
    """Jordan type with the start degree attached to every part."""
    return jordan_degree_type_from_rank_matrix(rank_matrix(f, ell))


def _coordinate_rows(vectors: list[Polynomial], nvars: int, degree: int) -> Matrix:
    basis = monomials_of_degree(nvars, degree)
    index = {exps: t for t, exps in enumerate(basis)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(basis)
        for exps, coeff in v.terms.items():
            row[index[exps]] = coeff
        rows.append(row)
    return Matrix.from_rows(rows) if rows else Matrix(0, len(basis), [])


def jordan_type_oracle(f: Polynomial, ell: LinearForm) -> Partition:
    """Independent route to the Jordan type, for cross-validation.

    Works on the derivative span W of F (all results of applying operator
    monomials to F), where multiplication by ell corresponds to the
    derivative operator along ell.  The conjugate partition is read off
    kernel dimensions: its k-th part is
    dim ker(D^k) - dim ker(D^(k-1)) on W.  No rank matrix, diagonal sums
    or second differences are involved.
    """
    d = _require_pipeline_input(f, ell)
    nvars = f.nvars
    ell_poly = ell.to_polynomial()

    # The derivative operator D respects the grading of W (it maps the
    # span of degree-i derivatives into the span of degree-(i+1) ones,
    # which live in disjoint coordinate spaces), so ranks add up blockwise.
    spans: list[list[Polynomial]] = [
        [diff_apply(Polynomial.monomial(m), f) for m in monomials_of_degree(nvars, i)]
        for i in range(d + 1)
    ]

    def total_rank(blocks: list[list[Polynomial]], shift: int) -> int:
        total = 0
        for i, block in enumerate(blocks):
            target_degree = d - i - shift
            if target_degree < 0:
                continue
            total += rank(_coordinate_rows(block, nvars, target_degree))
        return total

    dim_w = total_rank(spans, 0)
    nullities = [0]
    current = spans
    k = 0
    while nullities[-1] < dim_w:
        k += 1
        if k > d + 1:
            raise InternalInconsistencyError("derivative operator is not nilpotent within the socle degree bound")
        current = [[diff_apply(ell_poly, v) for v in block] for block in current]
        nullities.append(dim_w - total_rank(current, k))

    conj = [nullities[k] - nullities[k - 1] for k in range(1, len(nullities))]
    if any(conj[k] < conj[k + 1] for k in range(len(conj) - 1)):
        raise InternalInconsistencyError(f"kernel growth {conj} is not weakly decreasing")
    return Partition(conjugate_parts(conj))
