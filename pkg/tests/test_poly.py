import random
from fractions import Fraction
from functools import cmp_to_key
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from oracles import divides
from shiftbasis.circulant import ShiftShape, enumerate_minors
from shiftbasis.errors import DimensionError, DomainMismatchError
from shiftbasis.field import FieldSpec
from shiftbasis.poly import (
    GREVLEX,
    GRLEX,
    LEX,
    ORDER_KINDS,
    Monomial,
    MonomialOrder,
    Polynomial,
    enumerate_monomials,
    leading_coefficient,
    leading_monomial,
    monomial_compare,
    parse_polynomial,
    poly_add,
    poly_mul,
    poly_scale,
    reduce,
    s_polynomial,
)

Q = FieldSpec.rationals()
F101 = FieldSpec.prime(101)


def P(text, order=GREVLEX, d=3, field=Q):
    return parse_polynomial(text, field, MonomialOrder(order, d))


def mono(*exps):
    return Monomial(exps)


# ---- orders -----------------------------------------------------------------


def test_paper_grevlex_vs_grlex():
    x2sq, x1x3 = mono(0, 2, 0), mono(1, 0, 1)
    assert monomial_compare(x2sq, x1x3, MonomialOrder(GREVLEX, 3)) == 1
    assert monomial_compare(x2sq, x1x3, MonomialOrder(GRLEX, 3)) == -1
    assert monomial_compare(x2sq, x1x3, MonomialOrder(LEX, 3)) == -1


@pytest.mark.parametrize("kind", ORDER_KINDS)
def test_compare_reflexive(kind):
    m = mono(2, 0, 5)
    assert MonomialOrder(kind, 3).compare(m, m) == 0


def test_variable_precedence_xd_highest():
    for kind in ORDER_KINDS:
        order = MonomialOrder(kind, 4)
        xs = [mono(*[int(i == j) for j in range(4)]) for i in range(4)]
        assert order.sort_desc(xs) == xs[::-1]


def test_compare_dimension_mismatch():
    with pytest.raises(DimensionError):
        MonomialOrder(GREVLEX, 3).compare(mono(1, 0), mono(0, 1))


def _monomials_up_to(d, max_deg):
    return [Monomial(e) for e in product(range(max_deg + 1), repeat=d) if sum(e) <= max_deg]


@pytest.mark.parametrize("kind", ORDER_KINDS)
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_order_axioms_exhaustive(kind, d):
    order = MonomialOrder(kind, d)
    ms = _monomials_up_to(d, 4)
    ranked = sorted(ms, key=cmp_to_key(order.compare))
    pos = {m: i for i, m in enumerate(ranked)}
    one = Monomial((0,) * d)
    assert ranked[0] == one
    for a in ms:
        assert order.compare(one, a) <= 0
        for b in ms:
            c = order.compare(a, b)
            # antisymmetry and totality
            assert c == -order.compare(b, a)
            assert (c == 0) == (a == b)
            # agreement with one global ranking gives transitivity
            assert (c > 0) == (pos[a] > pos[b])
    small = [m for m in ms if m.degree <= 2]
    for a in ms:
        for b in ms:
            if order.compare(a, b) > 0:
                for c in small:
                    assert order.compare(a * c, b * c) > 0


@pytest.mark.parametrize("d", [2, 3, 4])
def test_graded_orders_agree_across_degrees(d):
    grev, grl = MonomialOrder(GREVLEX, d), MonomialOrder(GRLEX, d)
    ms = _monomials_up_to(d, 4)
    for a in ms:
        for b in ms:
            if a.degree != b.degree:
                assert grev.compare(a, b) == grl.compare(a, b) == (1 if a.degree > b.degree else -1)


def test_monomial_degree_cached():
    m = mono(3, 0, 2)
    assert m.degree == 5 and m.nvars == 3
    with pytest.raises(ValueError):
        mono(1, -1)


# ---- enumerate_monomials ----------------------------------------------------


def test_enumerate_paper_degree_two():
    got = enumerate_monomials(3, 2)
    assert {str(m) for m in got} == {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"}
    order = MonomialOrder(GREVLEX, 3)
    assert all(order.compare(a, b) == 1 for a, b in zip(got, got[1:]))


def test_enumerate_edge_cases():
    assert enumerate_monomials(1, 5) == [mono(5)]
    assert enumerate_monomials(4, 0) == [mono(0, 0, 0, 0)]


@pytest.mark.parametrize("d, D", [(d, D) for d in range(1, 6) for D in range(0, 6)])
def test_enumerate_count(d, D):
    ms = enumerate_monomials(d, D)
    assert len(ms) == len(set(ms)) == comb(D + d - 1, d - 1)
    assert all(m.degree == D for m in ms)


# ---- leading terms, arithmetic ----------------------------------------------


def test_leading_monomial_paper():
    assert leading_monomial(P("x2^2 - x1*x3")) == mono(0, 2, 0)
    assert leading_monomial(P("x2^2 - x1*x3", GRLEX)) == mono(1, 0, 1)
    assert leading_coefficient(P("x2^2 - x1*x3", GRLEX)).value == -1
    assert leading_monomial(P("x1^5")) == mono(5, 0, 0)


def test_leading_monomial_of_zero():
    with pytest.raises(ValueError):
        P("0").leading_monomial()


def test_add_mul_examples():
    assert poly_add(P("x2^2 - x1*x3"), P("x1*x3")) == P("x2^2")
    assert poly_mul(P("x1 + x2"), P("x1 - x2")) == P("x1^2 - x2^2")
    p = P("3*x1*x2 - 1/2*x3 + 7")
    assert (p + (-p)).is_zero() and (p + (-p)).raw_terms == ()
    assert poly_scale(p, 2) == P("6*x1*x2 - x3 + 14")


def test_mismatched_contexts():
    with pytest.raises(DomainMismatchError):
        P("x1") + P("x1", GRLEX)
    with pytest.raises(DomainMismatchError):
        P("x1") * P("x1", field=F101)
    with pytest.raises(DomainMismatchError):
        P("x1") - P("x1", d=4)


def test_terms_strictly_descending_no_zeros():
    p = P("x1 + x2^2 + x1*x3 - x1 + x3^2 + 5")
    order = p.order
    ms = [m for m, _ in p.terms]
    assert all(order.compare(a, b) == 1 for a, b in zip(ms, ms[1:]))
    assert all(not c.is_zero() for _, c in p.terms)


def test_to_order_is_explicit():
    p = P("x2^2 - x1*x3")
    q = p.to_order(MonomialOrder(GRLEX, 3))
    assert p != q
    assert str(q) == "-x1*x3 + x2^2"
    assert q.to_order(p.order) == p


def test_evaluate():
    p = P("x2^2 - x1*x3 + 1/2")
    assert p.evaluate([1, 2, 3]).value == Fraction(3, 2)
    assert P("x1^3", field=F101).evaluate([5, 0, 0]).value == 125 % 101


# ---- text form --------------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    ["x2^2 - x1*x3", "0", "-x1", "3/2*x1^2*x3 - 5", "x3^4 + x1*x2*x3 + 2*x1^3 - 1/7"],
)
def test_render_parse_roundtrip(text):
    p = P(text)
    assert str(p) == text
    assert P(str(p)) == p


def test_parse_rejects_garbage():
    for bad in ["", "x1 +", "y1", "x4", "2x1"]:
        with pytest.raises((ValueError, DimensionError)):
            P(bad)


# ---- division and S-polynomials ---------------------------------------------


def _minors(order):
    shape = ShiftShape(4, 3)
    return [p for _, p in enumerate_minors(shape, Q, shape.order(order))]


def test_reduce_x2sq_grevlex_to_zero():
    G = _minors(GREVLEX)
    q, r = reduce(P("x2^2"), G)
    assert r.is_zero()
    assert sum((qi * gi for qi, gi in zip(q, G)), P("0")) == P("x2^2")


def test_reduce_x2sq_grlex_stuck():
    G = _minors(GRLEX)
    # oracle: no grlex leading monomial of the six minors divides x2^2
    leads = [g.leading_monomial().exponents for g in G]
    assert not any(divides(e, (0, 2, 0)) for e in leads)
    _, r = reduce(P("x2^2", GRLEX), G)
    assert r == P("x2^2", GRLEX)


def test_reduce_zero():
    G = _minors(GREVLEX)
    q, r = reduce(P("0"), G)
    assert r.is_zero() and all(qi.is_zero() for qi in q)


def test_reduce_rejects_zero_divisor():
    with pytest.raises(ValueError):
        reduce(P("x1"), [P("0")])
    with pytest.raises(ValueError):
        reduce(P("x1"), [])


def test_s_polynomial_examples():
    assert s_polynomial(P("x1^2"), P("x1*x2")).is_zero()
    f, g = P("x2^2 - x1*x3"), P("x2*x3")
    # hand expansion: x3*f - x2*g
    assert P("x3") * f - P("x2") * g == P("-x1*x3^2")
    assert s_polynomial(f, g) == P("-x1*x3^2")
    assert s_polynomial(f, f).is_zero()
    with pytest.raises(ValueError):
        s_polynomial(f, P("0"))


def test_s_polynomial_cancels_leads_with_coefficients():
    f, g = P("3*x1^2*x2 + x3^3"), P("-2*x1*x2^2 + x1*x3^2")
    s = s_polynomial(f, g)
    lcm = f.leading_monomial().lcm(g.leading_monomial())
    assert s.coefficient(lcm).is_zero()


_ORDER = MonomialOrder(GREVLEX, 3)

terms = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-5, 5)),
    max_size=6,
)


def _poly(ts, order=_ORDER, field=Q):
    return Polynomial(ts, field, order)


@settings(max_examples=150, deadline=None)
@given(terms, st.lists(terms.filter(lambda t: any(c for _, c in t)), min_size=1, max_size=4),
       st.sampled_from(ORDER_KINDS), st.sampled_from([Q, F101]))
def test_division_identity(f_terms, g_terms, kind, field):
    order = MonomialOrder(kind, 3)
    f = _poly(f_terms, order, field)
    G = [_poly(t, order, field) for t in g_terms]
    G = [g for g in G if g]
    if not G:
        return
    q, r = reduce(f, G)
    recomposed = r
    for qi, gi in zip(q, G):
        recomposed = recomposed + qi * gi
    assert recomposed == f
    for m, _ in r.terms:
        assert not any(g.leading_monomial().divides(m) for g in G)


@pytest.mark.parametrize("n, d", [(4, 3), (5, 3), (6, 4), (6, 2)])
def test_normal_form_independent_of_divisor_order(n, d):
    shape = ShiftShape(n, d)
    G = [p for _, p in enumerate_minors(shape, Q, shape.order(GREVLEX))]
    rng = random.Random(n * 10 + d)
    order = shape.order(GREVLEX)
    for _ in range(10):
        f = Polynomial([(tuple(rng.randint(0, 3) for _ in range(d)), rng.randint(-4, 4)) for _ in range(6)], Q, order)
        base = reduce(f, G)[1]
        shuffled = G[:]
        rng.shuffle(shuffled)
        assert reduce(f, shuffled)[1] == base
