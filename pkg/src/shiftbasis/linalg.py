"""Dense exact matrices over a field and over the polynomial ring."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, DomainMismatchError, ResourceLimitError
from .field import FieldSpec, Scalar
from .poly import MonomialOrder, Polynomial

DEFAULT_DET_CAP = 12


def _check_columns(H: Sequence[int], cols: int) -> tuple:
    H = tuple(H)
    if not H:
        raise DimensionError("empty column selection")
    if any(b <= a for a, b in zip(H, H[1:])):
        raise DimensionError(f"column indices {H} are not strictly increasing")
    if H[0] < 1 or H[-1] > cols:
        raise DimensionError(f"column indices {H} outside 1..{cols}")
    return H


@dataclass(frozen=True)
class ScalarMatrix:
    """rows x cols matrix of raw field values, row-major.  Zero rows are allowed."""

    rows: int
    cols: int
    entries: tuple
    field: FieldSpec

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DimensionError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec | None = None, cols: int | None = None):
        field = field or FieldSpec.rationals()
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if cols is not None and ncols != cols:
            raise DimensionError(f"expected {cols} columns, got {ncols}")
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(field.coerce(v) for r in rows for v in r), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec | None = None):
        field = field or FieldSpec.rationals()
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec | None = None):
        field = field or FieldSpec.rationals()
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return Scalar(self.entries[i * self.cols + j], self.field)

    def raw_rows(self) -> list[list]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> ScalarMatrix:
        r = self.raw_rows()
        return ScalarMatrix(self.cols, self.rows, tuple(r[i][j] for j in range(self.cols) for i in range(self.rows)), self.field)

    def __matmul__(self, other: ScalarMatrix) -> ScalarMatrix:
        if self.field != other.field:
            raise DomainMismatchError("matrices over different fields")
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        a, b = self.raw_rows(), other.raw_rows()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                s = f.zero
                for k in range(self.cols):
                    s = f.add(s, f.mul(a[i][k], b[k][j]))
                out.append(s)
        return ScalarMatrix(self.rows, other.cols, tuple(out), f)

    def select_columns(self, H: Sequence[int]) -> ScalarMatrix:
        return select_columns(self, H)

    def determinant(self) -> Scalar:
        return scalar_determinant(self)

    def rank(self) -> int:
        return scalar_rank(self)

    # JSON wire form ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        def enc(v):
            if self.field.is_rational:
                return v.numerator if v.denominator == 1 else str(v)
            return v

        return {
            "field": str(self.field),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[enc(v) for v in r] for r in self.raw_rows()],
        }

    @classmethod
    def from_json_obj(cls, obj: dict, field: FieldSpec | None = None) -> ScalarMatrix:
        """Decode the JSON form; ``field`` overrides the document's field token."""
        try:
            field = field or FieldSpec.parse(obj["field"])
            rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix document: {exc}") from None
        if not isinstance(entries, list) or len(entries) != rows:
            raise DimensionError(f"expected {rows} rows of entries")
        decoded = []
        for r in entries:
            if not isinstance(r, list) or len(r) != cols:
                raise DimensionError(f"expected {cols} entries per row")
            for v in r:
                if isinstance(v, float) or isinstance(v, bool):
                    raise ValueError(f"non-exact entry {v!r}; use integers or 'num/den' strings")
                decoded.append(field.coerce(Fraction(v) if isinstance(v, str) else v))
        return cls(rows, cols, tuple(decoded), field)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str, field: FieldSpec | None = None) -> ScalarMatrix:
        return cls.from_json_obj(json.loads(text), field)


def scalar_determinant(m: ScalarMatrix) -> Scalar:
    """Fraction-free Bareiss elimination with row pivoting."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    f = m.field
    n = m.rows
    if n == 0:
        return Scalar(f.one, f)
    a = m.raw_rows()
    sign = 1
    prev = f.one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Scalar(f.zero, f)
        akk = a[k][k]
        inv_prev = f.inv(prev)
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact: prev divides the 2x2 minor
                ri[j] = f.mul(f.sub(f.mul(ri[j], akk), f.mul(aik, rk[j])), inv_prev)
            ri[k] = f.zero
        prev = akk
    det = a[n - 1][n - 1]
    return Scalar(det if sign > 0 else f.neg(det), f)


def scalar_rank(m: ScalarMatrix) -> int:
    f = m.field
    a = m.raw_rows()
    rank = 0
    for c in range(m.cols):
        pivot = next((i for i in range(rank, m.rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = f.inv(a[rank][c])
        pr = a[rank]
        for i in range(rank + 1, m.rows):
            if a[i][c]:
                factor = f.mul(a[i][c], inv)
                a[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[i], pr)]
        rank += 1
        if rank == m.rows:
            break
    return rank


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple
    field: FieldSpec
    order: MonomialOrder

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        for p in self.entries:
            if p.field != self.field or p.order != self.order:
                raise DomainMismatchError("matrix entries live in different rings")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]], field: FieldSpec, order: MonomialOrder):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(p for r in rows for p in r), field, order)

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Polynomial]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def select_columns(self, H: Sequence[int]) -> PolyMatrix:
        return select_columns(self, H)

    def evaluate(self, point: Sequence) -> ScalarMatrix:
        return ScalarMatrix(self.rows, self.cols, tuple(p.evaluate(point).value for p in self.entries), self.field)

    def determinant(self, cap: int = DEFAULT_DET_CAP) -> Polynomial:
        return poly_determinant(self, cap)

    def __str__(self):
        w = [[str(p) for p in self.row(i)] for i in range(self.rows)]
        width = max((len(s) for r in w for s in r), default=1)
        return "\n".join("[" + ", ".join(s.rjust(width) for s in r) + "]" for r in w)


def select_columns(m, H: Sequence[int]):
    """Submatrix on the 1-based, strictly increasing column set H."""
    H = _check_columns(H, m.cols)
    picked = tuple(m.entries[i * m.cols + c - 1] for i in range(m.rows) for c in H)
    if isinstance(m, PolyMatrix):
        return PolyMatrix(m.rows, len(H), picked, m.field, m.order)
    return ScalarMatrix(m.rows, len(H), picked, m.field)


def poly_determinant(m: PolyMatrix, cap: int = DEFAULT_DET_CAP) -> Polynomial:
    """Symbolic determinant by memoized cofactor expansion.

    Rows are expanded top to bottom; the state is (row, bitmask of unused
    columns), and zero entries are skipped so banded matrices stay cheap.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n > cap:
        raise ResourceLimitError(f"symbolic determinant of side {n} exceeds cap {cap}")
    one = Polynomial.constant(1, m.field, m.order)
    zero = Polynomial.zero(m.field, m.order)
    if n == 0:
        return one
    rows = [[(j, p) for j, p in enumerate(m.row(i)) if p] for i in range(n)]
    memo: dict = {}

    def expand(r: int, mask: int) -> Polynomial:
        if r == n:
            return one
        hit = memo.get((r, mask))
        if hit is not None:
            return hit
        total = zero
        for j, p in rows[r]:
            bit = 1 << j
            if not mask & bit:
                continue
            sub = expand(r + 1, mask & ~bit)
            if not sub:
                continue
            term = p * sub
            # sign from the position of column j among the remaining ones
            if bin(mask & (bit - 1)).count("1") % 2:
                total = total - term
            else:
                total = total + term
        memo[(r, mask)] = total
        return total

    return expand(0, (1 << n) - 1)
