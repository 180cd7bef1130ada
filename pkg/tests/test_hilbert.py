import random
from itertools import combinations
from math import comb

from polyent.hilbert import (MonomialIdeal, affine_hilbert_function,
                             hilbert_function_monomial,
                             monomial_ideal_dimension, segre_ideal,
                             variety_dim_degree)
from polyent.poly import GREVLEX, LEX, Polynomial
from polyent.scalars import ONE, scalar


def brute_force_dimension(ideal):
    n = ideal.nvars
    best = 0
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            s = set(subset)
            ok = True
            for g in ideal.generators:
                support = {i for i, e in enumerate(g) if e}
                if support <= s:
                    ok = False
                    break
            if ok:
                best = max(best, size)
    return best


def brute_force_count(ideal, s):
    n = ideal.nvars
    count = 0
    def rec(prefix, remaining):
        nonlocal count
        if len(prefix) == n:
            if not ideal.contains(tuple(prefix)):
                count += 1
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)
    rec([], s)
    return count


def test_monomial_dimension_examples():
    assert monomial_ideal_dimension(MonomialIdeal(2, [(2, 5), (4, 3)])) == 1
    assert monomial_ideal_dimension(MonomialIdeal(3, [])) == 3
    assert monomial_ideal_dimension(
        MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 0


def test_monomial_counts_match_enumeration():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n))
                for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        ideal = MonomialIdeal(n, gens)
        for s in range(0, 8):
            assert hilbert_function_monomial(ideal, s) == \
                brute_force_count(ideal, s)


def test_dimension_matches_brute_force_on_random_ideals():
    rng = random.Random(77)
    for _ in range(50):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n))
                for _ in range(rng.randint(1, 5))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        ideal = MonomialIdeal(n, gens)
        assert monomial_ideal_dimension(ideal) == brute_force_dimension(ideal)


def test_binomial_counts():
    zero = MonomialIdeal(2, [])
    assert hilbert_function_monomial(zero, 3) == comb(5, 2)
    axis = MonomialIdeal(2, [(1, 0)])
    assert hilbert_function_monomial(axis, 4) == 5


def test_affine_hilbert_function_requires_graded():
    import pytest
    from polyent.hilbert import NotGradedOrder
    gens = segre_ideal(1, 1)
    with pytest.raises(NotGradedOrder):
        affine_hilbert_function(gens, LEX, 3)
    assert affine_hilbert_function(gens, GREVLEX, 3) > 0


def test_segre_counts_and_vanishing():
    assert len(segre_ideal(1, 1)) == 1
    assert len(segre_ideal(2, 2)) == 9
    rng = random.Random(5)
    gens = segre_ideal(2, 2)
    ring = gens[0].ring
    for _ in range(5):
        x = [scalar(rng.randint(-5, 5)) for _ in range(3)]
        y = [scalar(rng.randint(-5, 5)) for _ in range(3)]
        assignment = {}
        for i in range(3):
            for j in range(3):
                assignment["z%d_%d" % (i, j)] = x[i] * y[j]
        for g in gens:
            assert g.evaluate(assignment).is_zero()


def test_segre_dim_degree():
    assert variety_dim_degree(segre_ideal(1, 1), homogeneous=True) == (2, 2)
    assert variety_dim_degree(segre_ideal(1, 2), homogeneous=True) == (3, 3)
    assert variety_dim_degree(segre_ideal(2, 2), homogeneous=True) == (4, 6)


def test_zero_ideal_projective():
    ring = ("x", "y", "z")
    lin = Polynomial.variable(ring, "x")
    # a hyperplane in P^2: dimension 1, degree 1
    assert variety_dim_degree([lin], homogeneous=True) == (1, 1)


def test_non_homogeneous_rejected():
    import pytest
    from polyent.hilbert import NonHomogeneousInput
    ring = ("x", "y")
    p = Polynomial.from_terms(ring, [((1, 0), ONE), ((0, 0), ONE)])
    with pytest.raises(NonHomogeneousInput):
        variety_dim_degree([p], homogeneous=True)


def test_projective_hf_order_independent():
    # graded structure of a homogeneous ideal is order independent
    gens = segre_ideal(1, 2)
    from polyent.hilbert import leading_term_ideal
    lt_lex = leading_term_ideal(gens, LEX)
    lt_grev = leading_term_ideal(gens, GREVLEX)
    for s in range(8):
        assert hilbert_function_monomial(lt_lex, s, projective=True) == \
            hilbert_function_monomial(lt_grev, s, projective=True)
