"""The banded shift matrix X, the stacked matrix M = [X; F], and its minors.

X is the (n-d+1) x n matrix whose row i (1-based) holds x1..xd in columns
i..i+d-1.  Although the rows are cyclic right shifts of
``(x1, ..., xd, 0, ..., 0)``, the shifts stop at n-d, so no entry ever wraps
around; "circulant" is a naming convention here, not a wraparound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import DimensionError, ResourceLimitError
from .field import FieldSpec
from .linalg import PolyMatrix, ScalarMatrix, poly_determinant, scalar_determinant, select_columns
from .poly import GREVLEX, Monomial, MonomialOrder, Polynomial

DEFAULT_MINOR_CAP = 500

Q = FieldSpec.rationals()


@dataclass(frozen=True)
class ShiftShape:
    n: int
    d: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.d, int)) or not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got n={self.n}, d={self.d}")

    @property
    def block_rows(self) -> int:
        """Rows of X, which is also the size of a maximal minor and its degree."""
        return self.n - self.d + 1

    @property
    def minor_count(self) -> int:
        return comb(self.n, self.block_rows)

    def order(self, kind: str = GREVLEX) -> MonomialOrder:
        return MonomialOrder(kind, self.d)


@dataclass(frozen=True)
class ColumnSet:
    indices: tuple
    shape: ShiftShape

    def __post_init__(self):
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        n, q = self.shape.n, self.shape.block_rows
        if len(idx) != q:
            raise ValueError(f"column set needs {q} indices, got {len(idx)}")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"column indices {idx} are not strictly increasing")
        if idx[0] < 1 or idx[-1] > n:
            raise ValueError(f"column indices {idx} outside 1..{n}")

    def complement(self) -> tuple:
        s = set(self.indices)
        return tuple(c for c in range(1, self.shape.n + 1) if c not in s)

    def band_offsets(self) -> tuple:
        """c_i - i for each position; always within 0..d-1."""
        return tuple(c - i for i, c in enumerate(self.indices, start=1))

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


def column_sets(shape: ShiftShape) -> list[ColumnSet]:
    """All (n-d+1)-subsets of 1..n in lexicographic order."""
    return [ColumnSet(H, shape) for H in combinations(range(1, shape.n + 1), shape.block_rows)]


def build_shift_matrix(shape: ShiftShape, field: FieldSpec = Q, order: MonomialOrder | None = None) -> PolyMatrix:
    order = order or shape.order()
    zero = Polynomial.zero(field, order)
    xs = [Polynomial.variable(j, field, order) for j in range(1, shape.d + 1)]
    rows = []
    for i in range(shape.block_rows):
        row = [zero] * shape.n
        row[i:i + shape.d] = xs
        rows.append(row)
    return PolyMatrix.from_rows(rows, field, order)


def build_full_matrix(shape: ShiftShape, F: ScalarMatrix, order: MonomialOrder | None = None) -> PolyMatrix:
    """M = [X; F] with the constant rows embedded as degree-0 polynomials."""
    _check_f(shape, F)
    order = order or shape.order()
    X = build_shift_matrix(shape, F.field, order)
    consts = tuple(Polynomial.constant(v, F.field, order) for v in F.entries)
    return PolyMatrix(shape.n, shape.n, X.entries + consts, F.field, order)


def _check_f(shape: ShiftShape, F: ScalarMatrix):
    if F.rows != shape.d - 1 or F.cols != shape.n:
        raise DimensionError(f"F must be {shape.d - 1}x{shape.n}, got {F.rows}x{F.cols}")


@lru_cache(maxsize=256)
def _minors(shape: ShiftShape, field: FieldSpec, order: MonomialOrder) -> tuple:
    X = build_shift_matrix(shape, field, order)
    return tuple((H, poly_determinant(select_columns(X, H.indices), cap=shape.n)) for H in column_sets(shape))


def enumerate_minors(
    shape: ShiftShape,
    field: FieldSpec = Q,
    order: MonomialOrder | None = None,
    cap: int = DEFAULT_MINOR_CAP,
) -> list[tuple[ColumnSet, Polynomial]]:
    """(H, det X_H) for every maximal column set H, in lexicographic H order."""
    if shape.minor_count > cap:
        raise ResourceLimitError(f"{shape.minor_count} minors exceed cap {cap}")
    return list(_minors(shape, field, order or shape.order()))


def column_set_to_exponents(H: ColumnSet) -> Monomial:
    """k_j = #{i : c_i - i = j - 1}: the level counts of the band offsets."""
    k = [0] * H.shape.d
    for off in H.band_offsets():
        k[off] += 1
    return Monomial(k)


def exponents_to_column_set(k: Monomial, shape: ShiftShape) -> ColumnSet:
    """Inverse of :func:`column_set_to_exponents`.

    Expands k into the non-decreasing level sequence j_1 <= j_2 <= ... and
    sets c_i = j_i + i - 1.
    """
    if k.nvars != shape.d:
        raise DimensionError(f"exponent vector has {k.nvars} entries, expected {shape.d}")
    if k.degree != shape.block_rows:
        raise ValueError(f"monomial degree {k.degree} != {shape.block_rows}")
    levels = [j for j, kj in enumerate(k.exponents, start=1) for _ in range(kj)]
    return ColumnSet(tuple(j + i - 1 for i, j in enumerate(levels, start=1)), shape)


def leading_monomial_fast(H: ColumnSet) -> Monomial:
    """Grevlex leading monomial of det X_H read as the product of its diagonal."""
    X = build_shift_matrix(H.shape)
    diag = [X[i, c - 1] for i, c in enumerate(H.indices)]
    exps = [0] * H.shape.d
    for p in diag:
        # every diagonal entry of X_H is a single variable; a zero would mean
        # an index left the band, which ColumnSet validation excludes
        (e, _), = p.raw_terms
        exps = [a + b for a, b in zip(exps, e)]
    return Monomial(exps)


def laplace_sign(H: ColumnSet) -> int:
    """Complementary-minor sign for expansion along the first n-d+1 rows."""
    q = H.shape.block_rows
    return -1 if (sum(H.indices) + q * (q + 1) // 2) % 2 else 1


def laplace_expansion(shape: ShiftShape, F: ScalarMatrix, order: MonomialOrder | None = None) -> Polynomial:
    """det M as the signed sum of det X_H * det F_{H'} over all column sets H."""
    _check_f(shape, F)
    order = order or shape.order()
    field = F.field
    total = Polynomial.zero(field, order)
    for H, minor in enumerate_minors(shape, field, order, cap=max(DEFAULT_MINOR_CAP, shape.minor_count)):
        comp = H.complement()
        fdet = scalar_determinant(select_columns(F, comp)) if comp else field.scalar(1)
        if fdet.is_zero():
            continue
        coeff = fdet if laplace_sign(H) > 0 else -fdet
        total = total + minor.scale(coeff)
    return total


def assemble(shape: ShiftShape, x: Sequence, F: ScalarMatrix) -> ScalarMatrix:
    """The n x n scalar matrix: shifts of (x1..xd, 0..0) stacked over F."""
    _check_f(shape, F)
    field = F.field
    if len(x) != shape.d:
        raise DimensionError(f"x needs {shape.d} entries, got {len(x)}")
    xs = [field.coerce(v) for v in x]
    rows = []
    for i in range(shape.block_rows):
        row = [field.zero] * shape.n
        row[i:i + shape.d] = xs
        rows.extend(row)
    return ScalarMatrix(shape.n, shape.n, tuple(rows) + F.entries, field)
