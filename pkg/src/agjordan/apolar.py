"""Catalecticant matrices and Hilbert functions from a dual generator.

For a nonzero homogeneous F of degree d, the j-th catalecticant pairs the
degree-j and degree-(d-j) monomial bases of the operator ring: its (u,v)
entry is the scalar obtained by applying the product monomial to F by
differentiation.  Its rank is the Hilbert function value h(j) of the
quotient algebra presented by F, so the whole Hilbert function comes out
of rank computations alone - the annihilator ideal is never formed.
"""

from __future__ import annotations

from .errors import DomainError, InternalInconsistencyError
from .linalg import Matrix, rank
from .multipoly import Polynomial, diff_apply, monomials_of_degree

HilbertFunction = tuple[int, ...]


def _require_nonzero_homogeneous(f: Polynomial) -> int:
    if f.is_zero():
        raise DomainError("dual generator must be nonzero")
    if not f.is_homogeneous():
        raise DomainError("dual generator must be homogeneous")
    degree = f.degree()
    assert degree is not None
    return degree


def catalecticant(j: int, f: Polynomial) -> Matrix:
    """The j-th catalecticant of a nonzero homogeneous polynomial.

    Rows are indexed by the degree-j monomials, columns by the
    degree-(d-j) monomials, both in descending lex order.
    """
    d = _require_nonzero_homogeneous(f)
    if not 0 <= j <= d:
        raise DomainError(f"catalecticant index {j} out of range 0..{d}")
    row_basis = monomials_of_degree(f.nvars, j)
    col_basis = monomials_of_degree(f.nvars, d - j)
    entries = []
    for col in col_basis:
        partial = diff_apply(Polynomial.monomial(col), f)
        entries.append([diff_apply(Polynomial.monomial(row), partial).constant_value() for row in row_basis])
    # entries were built column-first; transpose into row-major order
    flat = [entries[v][u] for u in range(len(row_basis)) for v in range(len(col_basis))]
    return Matrix(len(row_basis), len(col_basis), flat)


def hilbert(f: Polynomial) -> HilbertFunction:
    """Hilbert function (h(0), ..., h(d)) via catalecticant ranks."""
    d = _require_nonzero_homogeneous(f)
    values = tuple(rank(catalecticant(j, f)) for j in range(d + 1))
    for i in range(d + 1):
        if values[i] != values[d - i]:
            raise InternalInconsistencyError(
                f"Hilbert function {values} is not symmetric; the dual generator pairing is broken"
            )
    return values
