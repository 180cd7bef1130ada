"""Dimension and degree of varieties via leading-term ideals and Hilbert
functions; Segre ideal generation."""

from __future__ import annotations

from itertools import combinations
from math import comb

from .groebner import groebner
from .poly import GREVLEX, MonomialOrder, Polynomial, monomial_divides
from .scalars import ONE


class NotGradedOrder(ValueError):
    pass


class NonHomogeneousInput(ValueError):
    pass


class MonomialIdeal:
    """A monomial ideal held by its minimal generators."""

    __slots__ = ("nvars", "generators")

    def __init__(self, nvars, generators):
        gens = sorted(set(tuple(g) for g in generators))
        minimal = []
        for g in gens:
            if any(monomial_divides(h, g) for h in gens if h != g):
                continue
            minimal.append(g)
        self.nvars = nvars
        self.generators = tuple(minimal)

    def contains(self, mono):
        return any(monomial_divides(g, mono) for g in self.generators)

    def __repr__(self):
        return "MonomialIdeal(%d vars, %d gens)" % (self.nvars,
                                                    len(self.generators))


def monomial_ideal_dimension(ideal):
    """Dimension of the largest coordinate subspace avoiding the ideal.

    A coordinate subset S works iff no generator is supported inside S;
    found by subset enumeration over the generator supports.
    """
    n = ideal.nvars
    if not ideal.generators:
        return n
    supports = [frozenset(i for i, e in enumerate(g) if e)
                for g in ideal.generators]
    if frozenset() in supports:
        # the ideal contains a nonzero constant monomial: empty variety
        return -1
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                return size
    return 0


def _count_at_most(ideal, s):
    """Number of monomials of total degree <= s outside the ideal,
    by inclusion-exclusion over the minimal generators."""
    n = ideal.nvars
    total = comb(n + s, n)
    gens = ideal.generators
    for k in range(1, len(gens) + 1):
        sign = -1 if k % 2 else 1
        for combo in combinations(gens, k):
            lcm = tuple(max(g[i] for g in combo) for i in range(n))
            d = sum(lcm)
            if d <= s:
                total += sign * comb(n + s - d, n)
    return total


def hilbert_function_monomial(ideal, s, projective=False):
    """Affine Hilbert function (degree <= s), or the graded count
    (degree exactly s) when projective."""
    if projective:
        if s == 0:
            return _count_at_most(ideal, 0)
        return _count_at_most(ideal, s) - _count_at_most(ideal, s - 1)
    return _count_at_most(ideal, s)


def leading_term_ideal(gens, order):
    gb = groebner(gens, order)
    if gb.is_trivial():
        nvars = len(gb.ring)
        return MonomialIdeal(nvars, [(0,) * nvars])
    nvars = len(gb.ring)
    return MonomialIdeal(nvars,
                         [g.leading_monomial(order) for g in gb.generators])


def affine_hilbert_function(gens, order, s):
    """Values of the affine Hilbert function at s, via the LT ideal of a
    Groebner basis under a graded order."""
    if not order.is_graded():
        raise NotGradedOrder("affine Hilbert function needs a graded order")
    lt = leading_term_ideal(gens, order)
    return hilbert_function_monomial(lt, s)


def _fit_from_samples(values, s0):
    """Finite-difference interpolation: (degree, list of binomial-basis
    coefficients b_0..b_deg with HP(s) = sum b_i * C(s - s0, deg - i) ...).

    Returns (degree, leading coefficient as Fraction, full Newton table).
    """
    diffs = [list(values)]
    while len(diffs[-1]) > 1:
        prev = diffs[-1]
        diffs.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    deg = 0
    for k in range(len(diffs) - 1, -1, -1):
        if any(diffs[k]):
            deg = k
            break
    lead = diffs[deg][0]
    return deg, lead, [d[0] for d in diffs]


def _stable_fit(hf, max_degree, windows=3, start=None):
    """Increase the sample window until the fitted polynomial is stable
    for the requested number of consecutive windows."""
    width = max_degree + 2
    s0 = start if start is not None else max_degree
    fits = []
    for attempt in range(40):
        base = s0 + attempt
        values = [hf(base + k) for k in range(width)]
        deg, lead, newton = _fit_from_samples(values, base)
        fits.append((deg, lead, tuple(newton[:deg + 1]), base, tuple(values)))
        if len(fits) >= windows:
            tail = fits[-windows:]
            if all(f[0] == tail[0][0] and f[1] == tail[0][1] for f in tail):
                # check full polynomial agreement by cross-evaluating
                if _same_polynomial(tail):
                    return tail[-1]
    raise RuntimeError("Hilbert fit did not stabilize")


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _newton_eval(newton, base, s):
    total = 0
    for k, c in enumerate(newton):
        term = c
        for j in range(k):
            term = term * (s - base - j)
        total += term // _factorial(k)
    return total


def _same_polynomial(fits):
    # every earlier window's Newton form must reproduce the last window
    last = fits[-1]
    points = [last[3] + k for k in range(len(last[4]))]
    for _, _, newton, base, _ in fits[:-1]:
        for idx, s in enumerate(points):
            if _newton_eval(newton, base, s) != last[4][idx]:
                return False
    return True


def variety_dim_degree(gens, homogeneous):
    """(dimension, degree) of the variety cut out by gens.

    Homogeneous input is treated projectively: the dimension is read off
    the coordinate subspaces of the leading-term ideal and the degree is
    the top binomial-basis coefficient of the fitted Hilbert polynomial.
    """
    gens = [g for g in gens if not g.is_zero()]
    order = GREVLEX
    if homogeneous:
        for g in gens:
            degs = {sum(m) for m in g.terms}
            if len(degs) > 1:
                raise NonHomogeneousInput("generator is not homogeneous")
    if not gens:
        raise ValueError("no generators")
    lt = leading_term_ideal(gens, order)
    affine_dim = monomial_ideal_dimension(lt)
    if affine_dim < 0:
        return (-1, 0)
    if homogeneous:
        dim = affine_dim - 1
        hf = lambda s: hilbert_function_monomial(lt, s, projective=True)
    else:
        dim = affine_dim
        hf = lambda s: hilbert_function_monomial(lt, s)
    if dim < 0:
        return (dim, 0)
    deg_fit, lead, newton, base, values = _stable_fit(hf, max(dim, 1))
    if deg_fit != dim:
        raise RuntimeError(
            "Hilbert polynomial degree %d disagrees with the coordinate "
            "subspace dimension %d" % (deg_fit, dim))
    # leading Newton coefficient = degree-th finite difference = b_0
    return (dim, lead)


def segre_ideal(n, m):
    """All 2x2 minors of the (n+1) x (m+1) coordinate matrix z_{i,j}."""
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    ring = tuple("z%d_%d" % (i, j) for i in range(n + 1) for j in range(m + 1))
    idx = {(i, j): i * (m + 1) + j for i in range(n + 1) for j in range(m + 1)}
    gens = []
    nv = len(ring)
    for i, k in combinations(range(n + 1), 2):
        for j, l in combinations(range(m + 1), 2):
            mono_a = [0] * nv
            mono_a[idx[(i, j)]] += 1
            mono_a[idx[(k, l)]] += 1
            mono_b = [0] * nv
            mono_b[idx[(i, l)]] += 1
            mono_b[idx[(k, j)]] += 1
            gens.append(Polynomial(ring, {tuple(mono_a): ONE,
                                          tuple(mono_b): -ONE}))
    return gens
