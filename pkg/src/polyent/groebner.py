"""Multivariate division, Buchberger's algorithm and reduced Groebner bases."""

from __future__ import annotations

import heapq

from .poly import (GREVLEX, LEX, MonomialOrder, Polynomial, ZeroPolynomialError,
                   monomial_div, monomial_divides, monomial_lcm, monomial_mul,
                   total_degree)
from .scalars import ONE


class ZeroDivisorInList(ValueError):
    pass


class ZeroInput(ValueError):
    pass


class EmptyIdeal(ValueError):
    pass


class NotAGroebnerBasis(ValueError):
    pass


class WrongOrder(ValueError):
    pass


class GroebnerBasis:
    """An ordered generator list together with its monomial order."""

    __slots__ = ("generators", "order", "reduced")

    def __init__(self, generators, order, reduced=False):
        self.generators = tuple(generators)
        self.order = order
        self.reduced = reduced

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, k):
        return self.generators[k]

    @property
    def ring(self):
        return self.generators[0].ring if self.generators else ()

    def is_trivial(self):
        """True when the basis is {1}, i.e. the ideal is the whole ring."""
        return (len(self.generators) == 1
                and self.generators[0].is_constant()
                and not self.generators[0].is_zero())

    def __repr__(self):
        return "GroebnerBasis(%d gens, %s%s)" % (
            len(self.generators), self.order.kind,
            ", reduced" if self.reduced else "")


def divide(f, divisors, order):
    """Multivariate division: f = sum(q_i g_i) + r.

    No monomial of r is divisible by any leading monomial of the divisors,
    and leading monomials of the products q_i*g_i never exceed that of f.
    """
    divisors = list(divisors)
    for g in divisors:
        if g.is_zero():
            raise ZeroDivisorInList("zero divisor in the division list")
    ring = f.ring
    lead = [(g.leading_monomial(order), g.leading_coefficient(order))
            for g in divisors]
    quotients = [Polynomial.zero(ring) for _ in divisors]
    remainder = {}
    p = dict(f.terms)
    key = order.key
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for i, (gm, gc) in enumerate(lead):
            if monomial_divides(gm, lm):
                qm = monomial_div(lm, gm)
                qc = lc / gc
                quotients[i] = quotients[i] + Polynomial(
                    ring, {qm: qc}, _clean=True)
                for m, c in divisors[i].terms.items():
                    mm = monomial_mul(m, qm)
                    s = p.get(mm)
                    s = -(qc * c) if s is None else s - qc * c
                    if s.is_zero():
                        p.pop(mm, None)
                    else:
                        p[mm] = s
                break
        else:
            remainder[lm] = lc
            del p[lm]
    return quotients, Polynomial(ring, remainder, _clean=True)


def remainder(f, divisors, order):
    return divide(f, divisors, order)[1]


def s_polynomial(f, g, order):
    """S(f, g): the leading terms cancel against their monomial lcm."""
    if f.is_zero() or g.is_zero():
        raise ZeroInput("S-polynomial of the zero polynomial")
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = monomial_lcm(fm, gm)
    left = f.mul_term(fc.inverse(), monomial_div(lcm, fm))
    right = g.mul_term(gc.inverse(), monomial_div(lcm, gm))
    return left - right


def buchberger(gens, order):
    """Groebner basis by Buchberger's algorithm (normal pair selection,
    coprime and chain criteria)."""
    work = [g for g in gens if not g.is_zero()]
    if not work:
        raise EmptyIdeal("no nonzero generators")
    basis = []
    for g in work:
        r = remainder(g, basis, order) if basis else g
        if not r.is_zero():
            basis.append(r.monic(order))
    lms = [g.leading_monomial(order) for g in basis]
    key = order.key
    heap = []
    pending = set()

    def push_pairs(j):
        for i in range(j):
            lcm = monomial_lcm(lms[i], lms[j])
            heapq.heappush(heap, (key(lcm), i, j, lcm))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        # coprime leading monomials: the S-polynomial reduces to zero
        if lcm == monomial_mul(lms[i], lms[j]):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if monomial_divides(lms[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = remainder(s, basis, order)
        if r.is_zero():
            continue
        basis.append(r.monic(order))
        lms.append(basis[-1].leading_monomial(order))
        push_pairs(len(basis) - 1)
    return GroebnerBasis(basis, order, reduced=False)


def _minimalize(gens, order):
    lead = [(g.leading_monomial(order), g) for g in gens]
    lead.sort(key=lambda t: order.key(t[0]))
    kept = []
    for lm, g in lead:
        if any(monomial_divides(km, lm) for km, _ in kept):
            continue
        kept.append((lm, g))
    return [g for _, g in kept]


def _spair_certificate(gens, order, sample_limit=None):
    pairs = [(i, j) for i in range(len(gens)) for j in range(i)]
    if sample_limit is not None and len(pairs) > sample_limit:
        step = len(pairs) // sample_limit
        pairs = pairs[::step][:sample_limit]
    for i, j in pairs:
        s = s_polynomial(gens[i], gens[j], order)
        if not remainder(s, gens, order).is_zero():
            return False
    return True


def reduce_basis(gb, check=True):
    """Unique reduced Groebner basis: minimal, self-reduced, monic,
    sorted by leading monomial."""
    order = gb.order
    gens = [g for g in gb.generators if not g.is_zero()]
    if not gens:
        raise EmptyIdeal("no nonzero generators")
    if check and not gb.reduced:
        limit = None if len(gens) <= 15 else 60
        if not _spair_certificate(gens, order, sample_limit=limit):
            raise NotAGroebnerBasis("an S-pair does not reduce to zero")
    minimal = _minimalize(gens, order)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = remainder(g, others, order) if others else g
        reduced.append(r.monic(order))
    # self-reduction can change leading-term interactions; iterate to a fixpoint
    changed = True
    while changed:
        changed = False
        for i in range(len(reduced)):
            others = reduced[:i] + reduced[i + 1:]
            r = remainder(reduced[i], others, order) if others else reduced[i]
            if r.is_zero():
                reduced.pop(i)
                changed = True
                break
            r = r.monic(order)
            if r != reduced[i]:
                reduced[i] = r
                changed = True
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(reduced, order, reduced=True)


def groebner(gens, order):
    """Reduced Groebner basis of the ideal generated by gens."""
    return reduce_basis(buchberger(gens, order), check=False)


def ideal_membership(f, gb):
    """f lies in the ideal iff its remainder against the basis vanishes."""
    if f.is_zero():
        return True
    return remainder(f, gb.generators, gb.order).is_zero()


def elimination_ideal(gb, k):
    """Generators of the ideal with the k greatest lex variables eliminated.

    Requires a lex basis whose eliminated variables are the k greatest in
    the order's precedence.
    """
    if gb.order.kind != "lex":
        raise WrongOrder("elimination needs a lex basis")
    if k == 0:
        return gb
    ring = gb.ring
    n = len(ring)
    prec = gb.order.precedence or tuple(range(n))
    eliminated = set(prec[:k])
    kept = []
    for g in gb.generators:
        if not (g.variables_used() & eliminated):
            kept.append(g)
    return GroebnerBasis(kept, gb.order, reduced=gb.reduced)


def is_consistent(gens, order=None):
    """False exactly when the reduced basis is {1} (no solutions over C)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return True
    order = order or GREVLEX
    for g in gens:
        if g.is_constant():
            return False
    gb = groebner(gens, order)
    return not gb.is_trivial()


def ideals_equal(gens_a, gens_b, order=None):
    """Ideal equality via uniqueness of the reduced basis."""
    order = order or LEX
    ga = groebner(gens_a, order)
    gb = groebner(gens_b, order)
    return ga.generators == gb.generators
