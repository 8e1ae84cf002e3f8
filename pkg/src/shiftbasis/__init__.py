"""Exact algebra for banded shift matrices.

Builds the (n-d+1) x n matrix X of right shifts of (x1, ..., xd, 0, ..., 0),
certifies that its maximal minors are a grevlex Groebner basis, and finds a
vector whose shifts complete d-1 independent vectors to a basis of F^n.
"""

from .circulant import (
    ColumnSet,
    ShiftShape,
    build_full_matrix,
    build_shift_matrix,
    column_set_to_exponents,
    enumerate_minors,
    exponents_to_column_set,
    laplace_expansion,
    leading_monomial_fast,
)
from .completion import CompletionResult, ProblemInstance, sample_bound, solve, verify
from .field import FieldSpec, Scalar
from .groebner import GroebnerReport, Verdict, check_buchberger, check_power_ideal, lm_set, membership_counterexample
from .linalg import PolyMatrix, ScalarMatrix, poly_determinant, scalar_determinant, scalar_rank
from .poly import Monomial, MonomialOrder, Polynomial, enumerate_monomials, reduce, s_polynomial

__all__ = [
    "ColumnSet", "CompletionResult", "FieldSpec", "GroebnerReport", "Monomial", "MonomialOrder",
    "PolyMatrix", "Polynomial", "ProblemInstance", "Scalar", "ScalarMatrix", "ShiftShape", "Verdict",
    "build_full_matrix", "build_shift_matrix", "check_buchberger", "check_power_ideal",
    "column_set_to_exponents", "enumerate_minors", "enumerate_monomials", "exponents_to_column_set",
    "laplace_expansion", "leading_monomial_fast", "lm_set", "membership_counterexample",
    "poly_determinant", "reduce", "s_polynomial", "sample_bound", "scalar_determinant", "scalar_rank",
    "solve", "verify",
]
