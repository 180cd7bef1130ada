from fractions import Fraction

import pytest

from polyent.groebner import groebner
from polyent.poly import LEX, MonomialOrder, parse_polynomial
from polyent.scalars import I, OMEGA, ONE, SQRT2, SQRT3, ZERO, scalar
from polyent.solve import (NotZeroDimensional, UnsolvableOverTower,
                           exact_roots_squarefree, kth_roots_in_tower,
                           solve_zero_dim, split_exact_roots,
                           squarefree_decomposition, uni_monic)


def P(text, ring):
    return parse_polynomial(text, ring)


def test_single_variable():
    ring = ("x",)
    gb = groebner([P("x - 1", ring)], LEX)
    sols = solve_zero_dim(gb)
    assert len(sols) == 1 and sols[0]["x"] == ONE


def test_triangular_system():
    ring = ("x", "y", "z")
    gb = groebner([P("x*y^2 - z", ring), P("x*z + y^2", ring),
                   P("x*y - 1", ring)], LEX)
    sols = solve_zero_dim(gb, allow_numeric=False)
    assert len(sols) == 2
    for s in sols:
        assert s.exact
        assert s["z"] in (I, -I)
        assert s["y"] == s["z"] and s["x"] == -s["z"]


def test_not_zero_dimensional():
    ring = ("x", "y")
    gb = groebner([P("x*y - 1", ring)], LEX)
    with pytest.raises(NotZeroDimensional):
        solve_zero_dim(gb)


def test_unsolvable_over_tower_raises():
    ring = ("x",)
    gb = groebner([P("x^2 - 5", ring)], LEX)
    with pytest.raises(UnsolvableOverTower):
        solve_zero_dim(gb, allow_numeric=False)
    sols = solve_zero_dim(gb, allow_numeric=True)
    assert len(sols) == 2 and not sols[0].exact
    assert sorted(round(s["x"].real, 6) for s in sols) == \
        [round(-5 ** 0.5, 6), round(5 ** 0.5, 6)]


def test_squarefree_decomposition():
    # t^2 (8 t^2 - 1)^3, scaled monic
    ring = ("t",)
    f = P("t^2 * (8*t^2 - 1)^3", ring)
    coeffs = [ZERO] * 9
    for mono, c in f.terms.items():
        coeffs[mono[0]] = c
    parts = squarefree_decomposition(coeffs)
    assert sorted(m for _, m in parts) == [2, 3]
    for factor, mult in parts:
        if mult == 2:
            assert len(factor) == 2  # the linear factor t
        else:
            assert len(factor) == 3  # the quadratic 8 t^2 - 1, monic


def test_sixth_roots_of_unity():
    roots = kth_roots_in_tower(ONE, 6)
    assert roots is not None and len(roots) == 6
    for r in roots:
        assert r ** 6 == ONE
    assert OMEGA in roots


def test_biquadratic_roots():
    # x^4 + x^2 + 1 = (x^2 + x + 1)(x^2 - x + 1): all roots are sixth
    # roots of unity
    coeffs = [ONE, ZERO, ONE, ZERO, ONE]
    roots = exact_roots_squarefree(coeffs)
    assert roots is not None and len(roots) == 4
    for r in roots:
        val = ((r ** 4) + (r ** 2) + ONE)
        assert val.is_zero()


def test_partial_root_split():
    # (x - 1)(x^2 - 5): one exact root, an unresolved quadratic
    ring = ("x",)
    f = P("(x - 1)*(x^2 - 5)", ring)
    coeffs = [ZERO] * 4
    for mono, c in f.terms.items():
        coeffs[mono[0]] = c
    roots, rest = split_exact_roots(uni_monic(coeffs))
    assert roots == [ONE]
    assert rest is not None and len(rest) == 3


def test_mub_solution_values():
    ring = ("x1", "y1", "x2", "y2")
    gens = [P("x1^2 + y1^2 - 1", ring), P("x2^2 + y2^2 - 1", ring),
            P("x1 + x2 + x1*x2 + y1*y2", ring),
            P("y1 - x2*y1 - y2 + x1*y2", ring)]
    gb = groebner(gens, LEX)
    sols = solve_zero_dim(gb, allow_numeric=False)
    assert len(sols) == 6
    half = scalar(Fraction(1, 2))
    expected = {
        (-half, -half * SQRT3, ONE, ZERO),
        (-half, half * SQRT3, ONE, ZERO),
        (ONE, ZERO, -half, -half * SQRT3),
        (-half, -half * SQRT3, -half, -half * SQRT3),
        (ONE, ZERO, -half, half * SQRT3),
        (-half, half * SQRT3, -half, half * SQRT3),
    }
    got = {(s["x1"], s["y1"], s["x2"], s["y2"]) for s in sols}
    assert got == expected
