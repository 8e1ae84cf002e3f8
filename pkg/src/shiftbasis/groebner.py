"""Certify that the maximal minors of X form a Groebner basis.

Nothing here computes a Groebner basis from scratch.  The checks take the
minor set as given and test the Buchberger criterion pair by pair, compare
the leading-monomial set against all monomials of the generating degree,
and look for ideal members whose normal form does not vanish.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .circulant import DEFAULT_MINOR_CAP, Q, ColumnSet, ShiftShape, enumerate_minors
from .field import FieldSpec
from .linalg import ScalarMatrix, scalar_rank
from .poly import GREVLEX, Monomial, MonomialOrder, Polynomial, enumerate_monomials, reduce, s_polynomial


class Verdict(enum.Enum):
    GROEBNER_BASIS = "GroebnerBasis"
    NOT_GROEBNER_BASIS = "NotGroebnerBasis"


@dataclass(frozen=True)
class PairFailure:
    pair: tuple[ColumnSet, ColumnSet]
    s_poly: Polynomial
    remainder: Polynomial


@dataclass
class GroebnerReport:
    shape: ShiftShape
    order: MonomialOrder
    pair_count: int
    failures: list[PairFailure] = dc_field(default_factory=list)
    lm_set_complete: bool = True
    missing_monomials: list[Monomial] = dc_field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        return Verdict.NOT_GROEBNER_BASIS if self.failures else Verdict.GROEBNER_BASIS

    @property
    def ok(self) -> bool:
        return not self.failures and self.lm_set_complete

    def to_json_obj(self) -> dict:
        return {
            "n": self.shape.n,
            "d": self.shape.d,
            "order": self.order.kind,
            "verdict": self.verdict.value,
            "pair_count": self.pair_count,
            "lm_set_complete": self.lm_set_complete,
            "missing_monomials": [str(m) for m in self.missing_monomials],
            "failures": [
                {
                    "pair": [str(f.pair[0]), str(f.pair[1])],
                    "s_polynomial": str(f.s_poly),
                    "remainder": str(f.remainder),
                }
                for f in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def _resolve_order(shape: ShiftShape, order) -> MonomialOrder:
    if order is None:
        return shape.order()
    if isinstance(order, str):
        return shape.order(order)
    return order


def lm_set(shape: ShiftShape, order=None, cap: int = DEFAULT_MINOR_CAP) -> set[Monomial]:
    order = _resolve_order(shape, order)
    return {p.leading_monomial() for _, p in enumerate_minors(shape, Q, order, cap)}


def check_buchberger(
    shape: ShiftShape,
    order=None,
    field: FieldSpec = Q,
    cap: int = DEFAULT_MINOR_CAP,
) -> GroebnerReport:
    """Reduce every S-pair of distinct minors by the whole minor set."""
    order = _resolve_order(shape, order)
    minors = enumerate_minors(shape, field, order, cap)
    G = [p for _, p in minors]
    report = GroebnerReport(shape, order, pair_count=len(G) * (len(G) - 1) // 2)
    for (H1, f), (H2, g) in combinations(minors, 2):
        s = s_polynomial(f, g)
        if not s:
            continue
        _, r = reduce(s, G)
        if r:
            report.failures.append(PairFailure((H1, H2), s, r))
    leads = {p.leading_monomial() for p in G}
    expected = enumerate_monomials(shape.d, shape.block_rows, order)
    report.missing_monomials = [m for m in expected if m not in leads]
    report.lm_set_complete = not report.missing_monomials and len(leads) == len(expected)
    return report


def minor_coefficient_matrix(shape: ShiftShape, field: FieldSpec = Q, cap: int = DEFAULT_MINOR_CAP) -> ScalarMatrix:
    """Rows: minors; columns: the degree-(n-d+1) monomials in grevlex-descending order."""
    order = shape.order(GREVLEX)
    basis = enumerate_monomials(shape.d, shape.block_rows, order)
    rows = []
    for _, p in enumerate_minors(shape, field, order, cap):
        rows.append([p.coefficient(m).value for m in basis])
    return ScalarMatrix.from_rows(rows, field, cols=len(basis))


def minors_rank(shape: ShiftShape, field: FieldSpec = Q, cap: int = DEFAULT_MINOR_CAP) -> int:
    """Rank of the minors as vectors over the monomial basis of their degree."""
    return scalar_rank(minor_coefficient_matrix(shape, field, cap))


def check_power_ideal(shape: ShiftShape, cap: int = DEFAULT_MINOR_CAP) -> bool:
    """The minors generate m^(n-d+1) = <x1..xd>^(n-d+1).

    Every monomial of the generating degree must reduce to zero modulo the
    minors under grevlex, and every minor must be homogeneous of that degree.
    """
    order = shape.order(GREVLEX)
    D = shape.block_rows
    G = [p for _, p in enumerate_minors(shape, Q, order, cap)]
    if not all(p and p.is_homogeneous(D) for p in G):
        return False
    for m in enumerate_monomials(shape.d, D, order):
        if reduce(Polynomial.monomial(m, Q, order), G)[1]:
            return False
    return True


def membership_counterexample(shape: ShiftShape, order, cap: int = DEFAULT_MINOR_CAP):
    """A degree-(n-d+1) monomial in the minor ideal whose normal form under ``order`` is nonzero.

    Membership is certified by exact grevlex division to zero, with the
    quotients checked to reproduce the monomial.  Returns ``(monomial
    polynomial, remainder)`` or None.
    """
    order = _resolve_order(shape, order)
    grev = shape.order(GREVLEX)
    D = shape.block_rows
    G_grev = [p for _, p in enumerate_minors(shape, Q, grev, cap)]
    G = [p for _, p in enumerate_minors(shape, Q, order, cap)]
    for m in enumerate_monomials(shape.d, D, order):
        f = Polynomial.monomial(m, Q, order)
        _, r = reduce(f, G)
        if not r:
            continue
        f_grev = f.to_order(grev)
        quots, r_grev = reduce(f_grev, G_grev)
        if r_grev:
            continue
        combo = Polynomial.zero(Q, grev)
        for q, g in zip(quots, G_grev):
            combo = combo + q * g
        if combo == f_grev:
            return f, r
    return None
