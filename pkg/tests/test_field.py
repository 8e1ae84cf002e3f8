from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shiftbasis.errors import DomainMismatchError
from shiftbasis.field import (
    FieldSpec,
    Scalar,
    canonicalize,
    is_prime,
    scalar_add,
    scalar_inv,
    scalar_is_zero,
    scalar_mul,
    scalar_neg,
)

Q = FieldSpec.rationals()
F7 = FieldSpec.prime(7)
F10007 = FieldSpec.prime(10007)


def test_rational_sum():
    assert scalar_add(Q.scalar(Fraction(1, 2)), Q.scalar(Fraction(1, 3))) == Q.scalar(Fraction(5, 6))


def test_prime_inverse():
    assert scalar_inv(F7.scalar(3)) == F7.scalar(5)


def test_lowest_terms_on_construction():
    s = Q.scalar(Fraction(2, 4))
    assert (s.value.numerator, s.value.denominator) == (1, 2)
    assert str(Q.scalar("-6/4")) == "-3/2"


@pytest.mark.parametrize(
    "value, field, expected",
    [(Fraction(0, 1), Q, True), (7, F7, True), (Fraction(-3, 9), Q, False)],
)
def test_is_zero(value, field, expected):
    assert scalar_is_zero(field.scalar(value)) is expected


def test_residues_reduced():
    assert F7.scalar(-1).value == 6
    assert F7.scalar(Fraction(1, 2)).value == 4
    assert scalar_neg(F7.scalar(3)).value == 4
    assert scalar_mul(F7.scalar(3), F7.scalar(5)).value == 1


def test_mixed_fields_rejected():
    with pytest.raises(DomainMismatchError):
        Q.scalar(1) + F7.scalar(1)
    with pytest.raises(DomainMismatchError):
        F7.scalar(1) * FieldSpec.prime(11).scalar(1)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        Q.scalar(0).inv()
    with pytest.raises(ZeroDivisionError):
        F7.scalar(14).inv()


def test_denominator_vanishing_mod_p():
    with pytest.raises(ZeroDivisionError):
        F7.scalar(Fraction(1, 7))


@pytest.mark.parametrize("bad", [1, 4, 10005, 2**61])
def test_composite_modulus_rejected(bad):
    with pytest.raises(ValueError):
        FieldSpec.prime(bad)


def test_primality_matches_sieve():
    limit = 5000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [is_prime(i) for i in range(limit)] == sieve
    assert is_prime(2**61 - 1)


@pytest.mark.parametrize("token, expected", [("q", Q), ("fp:7", F7), (" fp:10007 ", F10007)])
def test_parse_field_token(token, expected):
    assert FieldSpec.parse(token) == expected
    assert FieldSpec.parse(str(expected)) == expected


@pytest.mark.parametrize("token", ["Q", "fp:", "fp:8", "fp:x", "gf:7"])
def test_parse_field_token_errors(token):
    with pytest.raises(ValueError):
        FieldSpec.parse(token)


rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
residues = st.integers(min_value=0, max_value=10006)
fields_and_values = st.one_of(
    st.tuples(st.just(Q), rationals, rationals, rationals),
    st.tuples(st.just(F10007), residues, residues, residues),
)


@given(fields_and_values)
def test_field_axioms(case):
    field, a, b, c = case
    a, b, c = field.scalar(a), field.scalar(b), field.scalar(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a + (-a) == field.scalar(0)
    assert a * field.scalar(1) == a
    if not a.is_zero():
        assert a * a.inv() == field.scalar(1)


@given(fields_and_values)
def test_canonicalize_idempotent(case):
    field, a, _, _ = case
    s = field.scalar(a)
    assert canonicalize(canonicalize(s)) == canonicalize(s) == s


@given(st.integers(), st.integers(min_value=1, max_value=10**6))
def test_rational_canonical_form(num, den):
    s = Scalar.of(Fraction(num, den))
    assert s.value.denominator > 0
    from math import gcd

    assert gcd(s.value.numerator, s.value.denominator) == 1
