import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polyent.groebner import ZeroDivisorInList, ZeroInput, divide, s_polynomial
from polyent.poly import (GREVLEX, GRLEX, LEX, MonomialOrder, ParseError,
                          Polynomial, RingMismatch, compare, parse_polynomial,
                          parse_scalar)
from polyent.scalars import I, ONE, SQRT3, ZERO, scalar


RING2 = ("x", "y")


def P(text, ring=RING2):
    return parse_polynomial(text, ring)


def test_order_examples():
    # lex: leftmost difference decides
    assert compare((2, 0), (1, 1), LEX) == 1
    # graded: total degree first
    assert compare((0, 3), (2, 0), GRLEX) == 1
    # graded reverse: rightmost nonzero difference is negative for the bigger
    assert compare((2, 1, 1), (1, 2, 1), GREVLEX) == 1


def test_order_mismatch():
    with pytest.raises(RingMismatch):
        compare((1, 0), (1, 0, 0), LEX)


def test_precedence_permutation():
    # y greatest: lex with precedence (1, 0) on ring (x, y)
    order = MonomialOrder("lex", (1, 0))
    assert compare((0, 1), (3, 0), order) == 1


def monomials(n=3, deg=4):
    return st.tuples(*[st.integers(0, deg) for _ in range(n)])


@settings(max_examples=200, deadline=None)
@given(monomials(), monomials(), monomials())
def test_orders_total_and_multiplicative(a, b, g):
    for order in (LEX, GRLEX, GREVLEX):
        c = compare(a, b, order)
        assert c == -compare(b, a, order)
        if c != 0:
            ag = tuple(x + y for x, y in zip(a, g))
            bg = tuple(x + y for x, y in zip(b, g))
            assert compare(ag, bg, order) == c


def test_division_order_dependence():
    f = P("x*y^2 - x")
    g1, g2 = P("x*y + 1"), P("y^2 - 1")
    q, r = divide(f, [g1, g2], LEX)
    assert q[0] == P("y") and q[1].is_zero()
    assert r == P("-x - y")
    q2, r2 = divide(f, [g2, g1], LEX)
    assert q2[0] == P("x") and q2[1].is_zero() and r2.is_zero()


def test_division_zero_divisor():
    with pytest.raises(ZeroDivisorInList):
        divide(P("x"), [Polynomial.zero(RING2)], LEX)


def test_divide_zero_polynomial():
    q, r = divide(Polynomial.zero(RING2), [P("x*y+1")], LEX)
    assert r.is_zero() and all(qq.is_zero() for qq in q)


def rand_poly(rng, ring, terms=4, deg=3):
    out = {}
    for _ in range(terms):
        mono = tuple(rng.randint(0, deg) for _ in ring)
        out[mono] = scalar(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return Polynomial(ring, out)


def test_division_identity_randomized():
    rng = random.Random(11)
    ring = ("x", "y", "z")
    for order in (LEX, GRLEX, GREVLEX):
        for _ in range(40):
            f = rand_poly(rng, ring)
            divisors = [g for g in (rand_poly(rng, ring, 3, 2)
                                    for _ in range(rng.randint(1, 3)))
                        if not g.is_zero()]
            if not divisors:
                continue
            q, r = divide(f, divisors, order)
            total = r
            for qi, gi in zip(q, divisors):
                total = total + qi * gi
            assert total == f
            lead = [g.leading_monomial(order) for g in divisors]
            for mono in r.terms:
                assert not any(all(a <= b for a, b in zip(lm, mono))
                               for lm in lead)


def test_s_polynomial():
    f, g = P("x*y + 1"), P("y^2 - 1")
    s = s_polynomial(f, g, LEX)
    assert s == P("x + y")
    assert s_polynomial(f, f, LEX).is_zero()
    with pytest.raises(ZeroInput):
        s_polynomial(f, Polynomial.zero(RING2), LEX)


def test_parse_scalar_literals():
    assert parse_scalar("(-1+i*sqrt3)/2") == (scalar(-1) + I * SQRT3) \
        * scalar(Fraction(1, 2))
    assert parse_scalar("3/4") == scalar(Fraction(3, 4))
    with pytest.raises(ParseError):
        parse_scalar("x + 1")


def test_parse_format_round_trip():
    rng = random.Random(23)
    ring = ("x", "y", "z")
    for _ in range(25):
        p = rand_poly(rng, ring)
        again = parse_polynomial(p.format(LEX), ring)
        assert again == p


def test_substitute_and_evaluate():
    p = P("x^2*y - 2*x + 1")
    q = p.substitute({"x": scalar(3)})
    assert q == P("9*y - 5")
    assert p.evaluate({"x": scalar(3), "y": scalar(2)}) == scalar(13)
