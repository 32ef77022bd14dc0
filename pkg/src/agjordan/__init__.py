"""Exact Jordan-type and Jordan-degree-type computations for graded
Gorenstein quotients presented by a dual generator."""

from .apolar import HilbertFunction, catalecticant, hilbert
from .checks import CheckReport, Violation, check_rank_matrix
from .codim2 import hilbert_from_dim_and_socle, jdt_from_jordan_type
from .errors import DomainError, InternalInconsistencyError, NotRealizableError, ParseError
from .jordan import (
    dims_vector,
    jdt_matrix,
    jordan_degree_type,
    jordan_type,
    jordan_type_oracle,
    rank_matrix,
)
from .lefschetz import conjugate, slp_witness, sperner, wlp_witness
from .linalg import Matrix, rank
from .multipoly import LinearForm, Polynomial, diff_apply, monomials_of_degree, render_polynomial
from .polyparse import VarTable, infer_vars, parse_linear_form, parse_poly
from .search import Collision, RealizeResult, SearchConfig, find_collisions, realize
from .structures import IndexedPartition, JdtMatrix, Partition, RankMatrix

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "Collision",
    "DomainError",
    "HilbertFunction",
    "IndexedPartition",
    "InternalInconsistencyError",
    "JdtMatrix",
    "LinearForm",
    "Matrix",
    "NotRealizableError",
    "ParseError",
    "Partition",
    "Polynomial",
    "RankMatrix",
    "RealizeResult",
    "SearchConfig",
    "VarTable",
    "Violation",
    "catalecticant",
    "check_rank_matrix",
    "conjugate",
    "diff_apply",
    "dims_vector",
    "find_collisions",
    "hilbert",
    "hilbert_from_dim_and_socle",
    "infer_vars",
    "jdt_from_jordan_type",
    "jdt_matrix",
    "jordan_degree_type",
    "jordan_type",
    "jordan_type_oracle",
    "monomials_of_degree",
    "parse_linear_form",
    "parse_poly",
    "rank",
    "rank_matrix",
    "realize",
    "render_polynomial",
    "slp_witness",
    "sperner",
    "wlp_witness",
]
