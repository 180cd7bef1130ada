import random
from fractions import Fraction

import pytest

from polyent.groebner import (EmptyIdeal, NotAGroebnerBasis, WrongOrder,
                              buchberger, elimination_ideal, groebner,
                              ideal_membership, ideals_equal, is_consistent,
                              reduce_basis, remainder, s_polynomial)
from polyent.poly import LEX, GRLEX, MonomialOrder, Polynomial, parse_polynomial
from polyent.scalars import scalar

RING = ("x", "y", "z")


def P(text, ring=RING):
    return parse_polynomial(text, ring)


GOLDEN_GENS = [P("x*y^2 - z"), P("x*z + y^2"), P("x*y - 1")]
GOLDEN_BASIS = [P("z^2 + 1"), P("y - z"), P("x + z")]


def test_golden_lex_basis():
    gb = groebner(GOLDEN_GENS, LEX)
    assert sorted(g.format(LEX) for g in gb) == \
        sorted(g.format(LEX) for g in GOLDEN_BASIS)


def test_single_generator():
    gb = groebner([P("x")], LEX)
    assert [g.format(LEX) for g in gb] == ["x"]


def test_empty_ideal():
    with pytest.raises(EmptyIdeal):
        buchberger([Polynomial.zero(RING)], LEX)


def test_reduce_basis_minimal_example():
    ring = ("x", "y")
    gens = [parse_polynomial(t, ring) for t in ("x", "2*x", "x + y")]
    gb = reduce_basis(buchberger(gens, LEX))
    assert sorted(g.format(LEX) for g in gb) == ["x", "y"]


def test_reduced_idempotent_and_unique_under_permutation():
    rng = random.Random(4)
    for _ in range(12):
        gens = []
        for _k in range(3):
            terms = {}
            for _t in range(3):
                mono = tuple(rng.randint(0, 2) for _ in RING)
                terms[mono] = scalar(Fraction(rng.randint(-4, 4),
                                              rng.randint(1, 2)))
            p = Polynomial(RING, terms)
            if not p.is_zero():
                gens.append(p)
        if not gens:
            continue
        gb1 = groebner(gens, LEX)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        gb2 = groebner(shuffled, LEX)
        assert gb1.generators == gb2.generators
        again = reduce_basis(gb1)
        assert again.generators == gb1.generators


def test_spair_certificate():
    rng = random.Random(9)
    orders = [LEX, GRLEX]
    for trial in range(25):
        gens = []
        for _ in range(rng.randint(2, 3)):
            terms = {}
            for _t in range(3):
                mono = tuple(rng.randint(0, 2) for _ in RING)
                terms[mono] = scalar(rng.randint(-3, 3))
            p = Polynomial(RING, terms)
            if not p.is_zero():
                gens.append(p)
        if not gens:
            continue
        order = orders[trial % 2]
        gb = groebner(gens, order)
        for i in range(len(gb)):
            for j in range(i):
                s = s_polynomial(gb[i], gb[j], order)
                assert remainder(s, gb.generators, order).is_zero()


def test_not_a_groebner_basis_detected():
    from polyent.groebner import GroebnerBasis
    fake = GroebnerBasis(GOLDEN_GENS, LEX, reduced=False)
    with pytest.raises(NotAGroebnerBasis):
        reduce_basis(fake, check=True)


def test_membership():
    gb = groebner(GOLDEN_GENS, LEX)
    assert ideal_membership(P("x + z"), gb)
    assert ideal_membership(GOLDEN_GENS[0], gb)
    assert not ideal_membership(Polynomial.constant(RING, 1), gb)
    ring = ("x", "y")
    gb2 = groebner([parse_polynomial("x", ring),
                    parse_polynomial("y", ring)], LEX)
    assert not ideal_membership(Polynomial.constant(ring, 1), gb2)


def test_remainder_independent_of_listing():
    gb = groebner(GOLDEN_GENS, LEX)
    rng = random.Random(2)
    for _ in range(20):
        terms = {}
        for _t in range(4):
            mono = tuple(rng.randint(0, 3) for _ in RING)
            terms[mono] = scalar(rng.randint(-5, 5))
        f = Polynomial(RING, terms)
        perm = list(gb.generators)
        rng.shuffle(perm)
        assert remainder(f, gb.generators, LEX) == remainder(f, perm, LEX)


def test_elimination():
    gb = groebner(GOLDEN_GENS, LEX)
    elim = elimination_ideal(gb, 2)
    assert [g.format(LEX) for g in elim] == ["z^2+1"]
    assert elimination_ideal(gb, 0) is gb
    with pytest.raises(WrongOrder):
        elimination_ideal(groebner(GOLDEN_GENS, GRLEX), 1)


def test_consistency():
    ring = ("x",)
    gens = [parse_polynomial("x", ring), parse_polynomial("x - 1", ring)]
    assert not is_consistent(gens)
    assert is_consistent(GOLDEN_GENS)


def test_ideal_equality():
    assert ideals_equal(GOLDEN_GENS, GOLDEN_BASIS)
    assert not ideals_equal(GOLDEN_GENS, [P("x")])
