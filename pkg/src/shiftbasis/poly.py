"""Multivariate polynomials in x1..xd over an exact field.

Variable precedence follows x_d > x_{d-1} > ... > x_1 for every order.  This
is the reverse of the usual computer-algebra default (x1 highest), so a
grevlex comparison here scans exponents from x1 upward and rewards the
*smaller* exponent.

Terms are kept as a tuple of ``(exponents, raw_coefficient)`` pairs sorted
strictly descending under the polynomial's own :class:`MonomialOrder`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .errors import DimensionError, DomainMismatchError
from .field import FieldSpec, Scalar

LEX = "lex"
GRLEX = "grlex"
GREVLEX = "grevlex"
ORDER_KINDS = (LEX, GRLEX, GREVLEX)

Exps = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    exponents: tuple
    degree: int

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_nvars(self, other)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: Monomial) -> bool:
        _check_nvars(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        _check_nvars(self, other)
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def __str__(self):
        return render_exponents(self.exponents)


def _check_nvars(a: Monomial, b: Monomial):
    if len(a.exponents) != len(b.exponents):
        raise DimensionError(f"monomials in {len(a.exponents)} and {len(b.exponents)} variables")


def render_exponents(exps: Exps) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def _key_lex(e):
    return e[::-1]


def _key_grlex(e):
    return (sum(e),) + e[::-1]


def _key_grevlex(e):
    return (sum(e),) + tuple(-x for x in e)


_KEYS = {LEX: _key_lex, GRLEX: _key_grlex, GREVLEX: _key_grevlex}


@dataclass(frozen=True)
class MonomialOrder:
    """One of lex / grlex / grevlex on d variables with x_d highest."""

    kind: str
    nvars: int

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.nvars < 1:
            raise ValueError("need at least one variable")

    @property
    def key(self):
        """Sort key on raw exponent tuples; larger key means larger monomial."""
        return _KEYS[self.kind]

    def compare(self, a: Monomial, b: Monomial) -> int:
        if a.nvars != self.nvars or b.nvars != self.nvars:
            raise DimensionError(f"order is on {self.nvars} variables")
        ka, kb = self.key(a.exponents), self.key(b.exponents)
        return (ka > kb) - (ka < kb)

    def sort_desc(self, monomials: Iterable[Monomial]) -> list[Monomial]:
        key = self.key
        return sorted(monomials, key=lambda m: key(m.exponents), reverse=True)


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as a is less than, equal to or greater than b."""
    return order.compare(a, b)


def enumerate_monomials(d: int, degree: int, order: MonomialOrder | None = None) -> list[Monomial]:
    """All monomials of exactly ``degree`` in d variables, descending under ``order``."""
    if d < 1 or degree < 0:
        raise ValueError("need d >= 1 and degree >= 0")
    order = order or MonomialOrder(GREVLEX, d)
    out = []
    for combo in combinations_with_replacement(range(d), degree):
        exps = [0] * d
        for v in combo:
            exps[v] += 1
        out.append(Monomial(exps))
    assert len(out) == comb(degree + d - 1, d - 1)
    return order.sort_desc(out)


class Polynomial:
    """Immutable polynomial carrying its field and monomial order."""

    __slots__ = ("field", "order", "_terms", "_hash")

    def __init__(self, terms: Iterable, field: FieldSpec, order: MonomialOrder, *, _trusted=False):
        self.field = field
        self.order = order
        if _trusted:
            self._terms = tuple(terms)
        else:
            acc: dict = {}
            for m, c in terms:
                exps = m.exponents if isinstance(m, Monomial) else tuple(m)
                if len(exps) != order.nvars:
                    raise DimensionError(f"term {exps} in a {order.nvars}-variable ring")
                c = field.coerce(c)
                acc[exps] = field.add(acc[exps], c) if exps in acc else c
            self._terms = _sorted_terms(acc, order)
        self._hash = None

    @classmethod
    def _from_dict(cls, acc: dict, field, order) -> Polynomial:
        return cls(_sorted_terms(acc, order), field, order, _trusted=True)

    @classmethod
    def zero(cls, field: FieldSpec, order: MonomialOrder) -> Polynomial:
        return cls((), field, order, _trusted=True)

    @classmethod
    def constant(cls, value, field: FieldSpec, order: MonomialOrder) -> Polynomial:
        c = field.coerce(value)
        if not c:
            return cls.zero(field, order)
        return cls((((0,) * order.nvars, c),), field, order, _trusted=True)

    @classmethod
    def variable(cls, i: int, field: FieldSpec, order: MonomialOrder) -> Polynomial:
        """The variable x_i, 1-based."""
        if not 1 <= i <= order.nvars:
            raise DimensionError(f"x{i} outside x1..x{order.nvars}")
        exps = tuple(1 if j == i - 1 else 0 for j in range(order.nvars))
        return cls(((exps, field.one),), field, order, _trusted=True)

    @classmethod
    def monomial(cls, m: Monomial, field: FieldSpec, order: MonomialOrder, coeff=1) -> Polynomial:
        return cls([(m, coeff)], field, order)

    # ---- inspection -------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.order.nvars

    @property
    def raw_terms(self) -> tuple:
        return self._terms

    @property
    def terms(self) -> tuple:
        return tuple((Monomial(e), Scalar(c, self.field)) for e, c in self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return Monomial(self._terms[0][0])

    def leading_coefficient(self) -> Scalar:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return Scalar(self._terms[0][1], self.field)

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def coefficient(self, m: Monomial) -> Scalar:
        for e, c in self._terms:
            if e == m.exponents:
                return Scalar(c, self.field)
        return Scalar(self.field.zero, self.field)

    def to_order(self, order: MonomialOrder) -> Polynomial:
        """Explicit re-sort under another order on the same variables."""
        if order.nvars != self.nvars:
            raise DimensionError("order has a different variable count")
        return Polynomial(_resort(self._terms, order), self.field, order, _trusted=True)

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise DimensionError(f"point has {len(point)} coordinates, ring has {self.nvars}")
        f = self.field
        xs = [f.coerce(v) for v in point]
        total = f.zero
        for exps, c in self._terms:
            t = c
            for x, e in zip(xs, exps):
                if e:
                    t = f.mul(t, x ** e if f.is_rational else pow(x, e, f.modulus))
            total = f.add(total, t)
        return Scalar(total, f)

    # ---- arithmetic -------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.field != other.field or self.order != other.order:
            raise DomainMismatchError(
                f"polynomials over ({self.field}, {self.order.kind}/{self.nvars}) and "
                f"({other.field}, {other.order.kind}/{other.nvars})"
            )

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Scalar)) and not isinstance(other, bool):
            return Polynomial.constant(other, self.field, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other._combine(self, -1)

    def _combine(self, other: Polynomial, sign: int) -> Polynomial:
        f = self.field
        if not other._terms:
            return self
        acc = dict(self._terms)
        for e, c in other._terms:
            if sign < 0:
                c = f.neg(c)
            if e in acc:
                s = f.add(acc[e], c)
                if s:
                    acc[e] = s
                else:
                    del acc[e]
            else:
                acc[e] = c
        return Polynomial._from_dict(acc, f, self.order)

    def __neg__(self):
        f = self.field
        return Polynomial(((e, f.neg(c)) for e, c in self._terms), f, self.order, _trusted=True)

    def scale(self, s) -> Polynomial:
        f = self.field
        c = f.coerce(s)
        if not c:
            return Polynomial.zero(f, self.order)
        return Polynomial(((e, f.mul(c, a)) for e, a in self._terms), f, self.order, _trusted=True)

    def mul_term(self, exps: Exps, coeff) -> Polynomial:
        """Multiply by the single term ``coeff * x^exps`` (raw values)."""
        f = self.field
        if not coeff:
            return Polynomial.zero(f, self.order)
        # a monomial multiple keeps the order of terms
        return Polynomial(
            ((tuple(a + b for a, b in zip(e, exps)), f.mul(coeff, c)) for e, c in self._terms),
            f,
            self.order,
            _trusted=True,
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if len(a._terms) < len(b._terms):
            a, b = b, a
        if not b._terms:
            return Polynomial.zero(self.field, self.order)
        if len(b._terms) == 1:
            return a.mul_term(*b._terms[0])
        f = self.field
        acc: dict = {}
        for eb, cb in b._terms:
            for ea, ca in a._terms:
                e = tuple(x + y for x, y in zip(ea, eb))
                c = f.mul(ca, cb)
                if e in acc:
                    acc[e] = f.add(acc[e], c)
                else:
                    acc[e] = c
        return Polynomial._from_dict({e: c for e, c in acc.items() if c}, f, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.field, self.order)
        for _ in range(k):
            out = out * self
        return out

    # ---- identity ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.field, self.order, self._terms) == (other.field, other.order, other._terms)
        if isinstance(other, (int, Fraction, Scalar)) and not isinstance(other, bool):
            return self == Polynomial.constant(other, self.field, self.order)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.order, self._terms))
        return self._hash

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r}, {self.field}, {self.order.kind})"

    @classmethod
    def parse(cls, text: str, field: FieldSpec, order: MonomialOrder) -> Polynomial:
        return parse_polynomial(text, field, order)


def _sorted_terms(acc: dict, order: MonomialOrder) -> tuple:
    key = order.key
    return tuple(sorted(((e, c) for e, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True))


def _resort(terms, order):
    key = order.key
    return tuple(sorted(terms, key=lambda t: key(t[0]), reverse=True))


# ---- free-function API ------------------------------------------------------


def leading_monomial(p: Polynomial) -> Monomial:
    return p.leading_monomial()


def leading_coefficient(p: Polynomial) -> Scalar:
    return p.leading_coefficient()


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, s) -> Polynomial:
    return p.scale(s)


def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def reduce(f: Polynomial, G: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division of f by the ordered list G.

    The largest remaining term is reduced first, by the earliest element of G
    whose leading monomial divides it; irreducible terms move to the
    remainder.  Returns ``(quotients, remainder)`` with
    ``f == sum(q*g) + remainder`` exactly.
    """
    G = list(G)
    if not G:
        raise ValueError("need at least one divisor")
    for g in G:
        f._check(g)
        if not g:
            raise ValueError("zero divisor polynomial")
    field, order = f.field, f.order
    key = order.key
    leads = [(g._terms[0][0], field.inv(g._terms[0][1])) for g in G]
    quots: list[dict] = [{} for _ in G]
    rem: dict = {}
    work = dict(f._terms)
    while work:
        e = max(work, key=key)
        c = work[e]
        for i, (le, linv) in enumerate(leads):
            if _divides(le, e):
                shift = tuple(a - b for a, b in zip(e, le))
                q = field.mul(c, linv)
                qi = quots[i]
                if shift in qi:
                    s = field.add(qi[shift], q)
                    if s:
                        qi[shift] = s
                    else:
                        del qi[shift]
                else:
                    qi[shift] = q
                for ge, gc in G[i]._terms:
                    te = tuple(a + b for a, b in zip(ge, shift))
                    v = field.sub(work.get(te, field.zero), field.mul(q, gc))
                    if v:
                        work[te] = v
                    else:
                        work.pop(te, None)
                break
        else:
            rem[e] = c
            del work[e]
    return (
        [Polynomial._from_dict(q, field, order) for q in quots],
        Polynomial._from_dict(rem, field, order),
    )


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    return reduce(f, G)[1]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    field = f.field
    (ef, cf), (eg, cg) = f._terms[0], g._terms[0]
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    left = f.mul_term(tuple(a - b for a, b in zip(lcm, ef)), field.inv(cf))
    right = g.mul_term(tuple(a - b for a, b in zip(lcm, eg)), field.inv(cg))
    return left - right


# ---- text form --------------------------------------------------------------


def render(p: Polynomial) -> str:
    """Canonical text, e.g. ``x2^2 - x1*x3``; terms in descending order."""
    if not p._terms:
        return "0"
    rational = p.field.is_rational
    out = []
    for i, (e, c) in enumerate(p._terms):
        neg = rational and c < 0
        mag = -c if neg else c
        mono = render_exponents(e)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, field: FieldSpec, order: MonomialOrder) -> Polynomial:
    """Inverse of :func:`render` (also accepts unnormalized input)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Polynomial.zero(field, order)
    terms = []
    pos = 0
    for m in _TERM_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        sign, body = m.group(1), m.group(2).strip()
        coeff = Fraction(1)
        exps = [0] * order.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            fm = _FACTOR_RE.match(factor)
            if fm:
                i = int(fm.group(1))
                if not 1 <= i <= order.nvars:
                    raise DimensionError(f"x{i} outside x1..x{order.nvars}")
                exps[i - 1] += int(fm.group(2) or 1)
            else:
                try:
                    coeff *= Fraction(factor)
                except ValueError:
                    raise ValueError(f"bad factor {factor!r} in {text!r}") from None
        if sign == "-":
            coeff = -coeff
        terms.append((tuple(exps), coeff))
    if s[pos:].strip():
        raise ValueError(f"cannot parse {text!r}")
    return Polynomial(terms, field, order)
