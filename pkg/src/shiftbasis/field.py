"""Exact coefficient fields: the rationals and prime fields F_p.

Coefficients travel through the polynomial and matrix code as *raw* values
(``Fraction`` over Q, a reduced ``int`` over F_p) and the owning
:class:`FieldSpec` does the arithmetic.  :class:`Scalar` is the user-facing
wrapper that tags a raw value with its field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatchError

RATIONALS = "q"
PRIME = "fp"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == PRIME:
            if not isinstance(self.modulus, int) or not is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus!r} is not a prime")
            if self.modulus >= 1 << 64:
                raise ValueError("prime moduli are limited to 64 bits")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(PRIME, p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse the CLI token: ``q`` or ``fp:<p>``."""
        text = text.strip()
        if text == "q":
            return cls.rationals()
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad prime field token {text!r}") from None
            return cls.prime(p)
        raise ValueError(f"bad field token {text!r}; expected 'q' or 'fp:<p>'")

    def __str__(self):
        return "q" if self.kind == RATIONALS else f"fp:{self.modulus}"

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    @property
    def size(self) -> int | None:
        """Number of elements, or None for an infinite field."""
        return self.modulus

    # raw arithmetic -------------------------------------------------------

    def coerce(self, value) -> Fraction | int:
        """Canonical raw value for an int, Fraction, numeric string or Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise DomainMismatchError(f"scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {value!r} into {self}")
        if self.kind == RATIONALS:
            return Fraction(value)
        p = self.modulus
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return value % p

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def add(self, a, b):
        if self.kind == RATIONALS:
            return a + b
        return (a + b) % self.modulus

    def sub(self, a, b):
        if self.kind == RATIONALS:
            return a - b
        return (a - b) % self.modulus

    def mul(self, a, b):
        if self.kind == RATIONALS:
            return a * b
        return a * b % self.modulus

    def neg(self, a):
        if self.kind == RATIONALS:
            return -a
        return -a % self.modulus

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == RATIONALS:
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def render(self, a) -> str:
        return str(a)

    def scalar(self, value) -> Scalar:
        return Scalar(self.coerce(value), self)




@dataclass(frozen=True)
class Scalar:
    """An element of a FieldSpec, always held in canonical form.

    Build through :meth:`FieldSpec.scalar` or :meth:`Scalar.of`; the raw
    constructor trusts its caller to pass an already-canonical value.
    """

    value: Fraction | int
    field: FieldSpec

    @classmethod
    def of(cls, value, field: FieldSpec | None = None) -> Scalar:
        field = field or FieldSpec.rationals()
        return cls(field.coerce(value), field)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise DomainMismatchError(f"cannot mix {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.add(self.value, b), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.sub(self.value, b), self.field)

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.sub(b, self.value), self.field)

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.mul(self.value, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.div(self.value, b), self.field)

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.field.div(b, self.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inv(self) -> Scalar:
        return Scalar(self.field.inv(self.value), self.field)

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.render(self.value)


def canonicalize(s: Scalar) -> Scalar:
    return s.field.scalar(s.value)


# Functional aliases for callers that prefer explicit names over operators.

def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_inv(a: Scalar) -> Scalar:
    return a.inv()


def scalar_is_zero(a: Scalar) -> bool:
    return a.is_zero()


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    return field.scalar(text)
