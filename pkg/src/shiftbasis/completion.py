"""Complete d-1 independent vectors to a basis of F^n with shifts of one vector.

Given F (rank d-1), find x = (x1..xd) such that the n-d+1 right shifts of
``(x1, ..., xd, 0, ..., 0)`` together with the rows of F are independent,
i.e. det [X(x); F] != 0.

det M is homogeneous of degree D = n-d+1, so each variable appears with
degree at most D.  A nonzero such polynomial cannot vanish on all of S^d once
|S| >= D + 1, which is why the default sample set has n-d+2 elements and the
grid search over Q always succeeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .circulant import ShiftShape, assemble, laplace_expansion
from .errors import CompletionFailedError, DimensionError, InternalInvariantError, RankDeficientError
from .field import FieldSpec, Scalar
from .linalg import ScalarMatrix, scalar_determinant, scalar_rank

RANDOM = "random"
GRID = "grid"
STRATEGIES = (RANDOM, GRID)

DEFAULT_SEED = 2718
DEFAULT_MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class ProblemInstance:
    shape: ShiftShape
    F: ScalarMatrix

    def __post_init__(self):
        if self.F.rows != self.shape.d - 1 or self.F.cols != self.shape.n:
            raise DimensionError(f"F must be {self.shape.d - 1}x{self.shape.n}, got {self.F.rows}x{self.F.cols}")

    @property
    def field(self) -> FieldSpec:
        return self.F.field

    def rank(self) -> int:
        return scalar_rank(self.F)

    @classmethod
    def from_json_obj(cls, obj: dict, field: FieldSpec | None = None) -> ProblemInstance:
        """Matrix JSON document plus integer ``n`` and ``d`` keys."""
        try:
            shape = ShiftShape(int(obj["n"]), int(obj["d"]))
        except KeyError as exc:
            raise ValueError(f"instance document lacks {exc}") from None
        return cls(shape, ScalarMatrix.from_json_obj(obj, field))

    def to_json_obj(self) -> dict:
        return {"n": self.shape.n, "d": self.shape.d, **self.F.to_json_obj()}


@dataclass(frozen=True)
class CompletionResult:
    x: tuple
    det_value: Scalar
    strategy: str
    attempts: int

    def to_json_obj(self) -> dict:
        return {
            "x": [str(v) for v in self.x],
            "det_value": str(self.det_value),
            "strategy": self.strategy,
            "attempts": self.attempts,
        }


def sample_set(shape: ShiftShape, field: FieldSpec) -> list:
    """Raw values of the n-d+2 sample points, or all of F_p if p is smaller."""
    size = shape.block_rows + 1
    if field.is_rational:
        return [Fraction(v) for v in range(1, size + 1)]
    p = field.modulus
    if p < size:
        return list(range(p))
    return [v % p for v in range(1, size + 1)]


def sample_bound(shape: ShiftShape, set_size: int | None = None) -> Fraction:
    """Upper bound on the chance one uniform draw from S^d hits a root of det M."""
    if set_size is None:
        set_size = shape.block_rows + 1
    if set_size < 1:
        raise ValueError("sample set must be nonempty")
    return Fraction(shape.block_rows, set_size)


def _candidates(strategy, S, d, seed, max_attempts):
    if strategy == GRID:
        yield from product(S, repeat=d)
    elif strategy == RANDOM:
        rng = random.Random(seed)
        for _ in range(max_attempts):
            yield tuple(rng.choice(S) for _ in range(d))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")


def solve(
    inst: ProblemInstance,
    strategy: str = GRID,
    seed: int = DEFAULT_SEED,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> CompletionResult:
    """First x (in grid order, or in seeded random order) with det M != 0.

    Every candidate's determinant is computed twice, from the Laplace
    polynomial and by Bareiss on the assembled matrix, and the two must agree.
    """
    shape, F, field = inst.shape, inst.F, inst.field
    rank = inst.rank()
    if rank != shape.d - 1:
        raise RankDeficientError(rank, shape.d - 1)
    det_poly = laplace_expansion(shape, F)
    S = sample_set(shape, field)
    attempts = 0
    for x in _candidates(strategy, S, shape.d, seed, max_attempts):
        attempts += 1
        via_poly = det_poly.evaluate(x)
        via_matrix = scalar_determinant(assemble(shape, x, F))
        if via_poly != via_matrix:
            raise InternalInvariantError(f"determinant routes disagree at x={x}: {via_poly} != {via_matrix}")
        if via_matrix:
            return CompletionResult(tuple(Scalar(v, field) for v in x), via_matrix, strategy, attempts)
    if strategy == GRID and field.is_rational:
        raise InternalInvariantError(f"grid of {len(S)}^{shape.d} points exhausted over Q with rank(F) = d-1")
    raise CompletionFailedError(f"no completing vector after {attempts} {strategy} attempts over {field}")


def verify(inst: ProblemInstance, x: Sequence) -> bool:
    """True iff the shifts of padded x together with F span F^n."""
    if len(x) != inst.shape.d:
        raise DimensionError(f"x needs {inst.shape.d} entries, got {len(x)}")
    return scalar_rank(assemble(inst.shape, x, inst.F)) == inst.shape.n
