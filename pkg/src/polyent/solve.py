"""Back-substitution solver for zero-dimensional lex Groebner bases.

Triangular eliminants are factored exactly when they split into linear or
quadratic pieces over Q(i, sqrt2, sqrt3) (after squarefree decomposition
and rational-root extraction); anything harder falls back to floating
roots, and every returned assignment is verified against the generators.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

import numpy as np

from .scalars import ONE, TWO, ZERO, scalar, sqrt_in_tower


class NotZeroDimensional(ValueError):
    pass


class UnsolvableOverTower(ValueError):
    pass


# -- dense univariate helpers (coefficient lists, low degree first) ---------

def uni_trim(c):
    while c and c[-1].is_zero():
        c.pop()
    return c


def uni_degree(c):
    return len(c) - 1


def uni_monic(c):
    if not c:
        return c
    inv = c[-1].inverse()
    return [inv * x for x in c]


def uni_divmod(a, b):
    a = list(a)
    db, lb = uni_degree(b), b[-1]
    q = [ZERO] * max(0, len(a) - db)
    while a and uni_degree(a) >= db:
        k = uni_degree(a) - db
        f = a[-1] / lb
        q[k] = f
        for i in range(db + 1):
            a[i + k] = a[i + k] - f * b[i]
        uni_trim(a)
    return q, a


def uni_gcd(a, b):
    a, b = uni_trim(list(a)), uni_trim(list(b))
    while b:
        _, r = uni_divmod(a, b)
        a, b = b, r
    return uni_monic(a)


def uni_derivative(c):
    return uni_trim([scalar(k) * c[k] for k in range(1, len(c))])


def uni_eval(c, x):
    acc = ZERO
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def squarefree_decomposition(c):
    """List of (monic squarefree factor, multiplicity); char-0 gcd method."""
    f = uni_monic(uni_trim(list(c)))
    if uni_degree(f) <= 0:
        return []
    out = []
    g = uni_gcd(f, uni_derivative(f))
    w, _ = uni_divmod(f, g)
    i = 1
    while uni_degree(w) > 0:
        y = uni_gcd(w, g)
        z, _ = uni_divmod(w, y)
        if uni_degree(z) > 0:
            out.append((uni_monic(z), i))
        w = y
        g, _ = uni_divmod(g, y)
        i += 1
    return out


def _quadratic_roots(c0, c1, c2):
    disc = c1 * c1 - scalar(4) * c2 * c0
    sq = sqrt_in_tower(disc)
    if sq is None:
        return None
    inv = (TWO * c2).inverse()
    return [(-c1 + sq) * inv, (-c1 - sq) * inv]


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_root_candidates(c):
    fracs = [x.to_fraction() for x in c]
    den = 1
    for f in fracs:
        den = den * f.denominator // _int_gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    a0 = next(x for x in ints if x != 0)
    an = ints[-1]
    for p in _divisors(abs(a0)):
        for q in _divisors(abs(an)):
            yield Fraction(p, q)
            yield Fraction(-p, q)


def _integer_kth_root(n, k):
    if n < 0:
        return None
    lo, hi = 0, max(1, int(round(n ** (1.0 / k))) + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


def cube_roots_in_tower(x):
    """All cube roots inside the field, for rational perfect cubes."""
    from .scalars import OMEGA
    if not x.is_rational():
        return None
    f = x.to_fraction()
    neg = f < 0
    if neg:
        f = -f
    rn = _integer_kth_root(f.numerator, 3)
    rd = _integer_kth_root(f.denominator, 3)
    if rn is None or rd is None:
        return None
    base = scalar(Fraction(rn, rd))
    if neg:
        base = -base
    return [base, base * OMEGA, base * OMEGA * OMEGA]


def kth_roots_in_tower(x, k):
    """All k-th roots of x inside the field, or None (k a 2-3 smooth
    integer; other factors are out of reach)."""
    if k == 1:
        return [x]
    if k % 2 == 0:
        subs = kth_roots_in_tower(x, k // 2)
        if subs is None:
            return None
        out = []
        for s in subs:
            r = sqrt_in_tower(s)
            if r is None:
                return None
            out.extend([r, -r])
        return _dedupe_exact(out)
    if k % 3 == 0:
        subs = kth_roots_in_tower(x, k // 3)
        if subs is None:
            return None
        out = []
        for s in subs:
            r = cube_roots_in_tower(s)
            if r is None:
                return None
            out.extend(r)
        return _dedupe_exact(out)
    return None


def _dedupe_exact(values):
    out = []
    for v in values:
        if all(v != w for w in out):
            out.append(v)
    return out


def _decimated(c):
    """(d, g) with c(x) = g(x^d) for the largest d, or None when d = 1."""
    exps = [k for k, v in enumerate(c) if not v.is_zero() and k > 0]
    if not exps:
        return None
    d = 0
    for e in exps:
        d = _int_gcd(d, e)
    if d <= 1:
        return None
    g = [c[k * d] if k * d < len(c) else ZERO
         for k in range(uni_degree(c) // d + 1)]
    return d, g


def exact_roots_squarefree(c):
    """Roots of a monic squarefree polynomial inside the field, or None."""
    deg = uni_degree(c)
    if deg <= 0:
        return []
    if deg == 1:
        return [-c[0] / c[1]]
    if deg == 2:
        return _quadratic_roots(c[0], c[1], c[2])
    roots = []
    work = list(c)
    if work[0].is_zero():
        roots.append(ZERO)
        work = work[1:]
    if all(x.is_rational() for x in work):
        found = True
        while found and uni_degree(work) > 2:
            found = False
            for cand in _rational_root_candidates(work):
                val = scalar(cand)
                if uni_eval(work, val).is_zero():
                    roots.append(val)
                    work, _ = uni_divmod(work, [-val, ONE])
                    found = True
                    break
    deg = uni_degree(work)
    if deg == 0:
        return roots
    if deg == 1:
        roots.append(-work[0] / work[1])
        return roots
    if deg == 2:
        quad = _quadratic_roots(work[0], work[1], work[2])
        if quad is None:
            return None
        return roots + quad
    # polynomial in x^d: solve the decimated polynomial and take d-th roots
    dec = _decimated(work)
    if dec is not None:
        d, g = dec
        inner = exact_roots_squarefree(uni_monic(g))
        if inner is not None:
            for u in inner:
                rts = kth_roots_in_tower(u, d)
                if rts is None:
                    return None
                roots.extend(rts)
            return roots
    return None


def split_exact_roots(c):
    """(exact roots, unresolved factor or None) for a monic squarefree
    polynomial: linear factors are peeled off for every exact root."""
    full = exact_roots_squarefree(c)
    if full is not None:
        return full, None
    roots = []
    work = list(c)
    if work[0].is_zero():
        roots.append(ZERO)
        work = work[1:]
    if all(x.is_rational() for x in work):
        found = True
        while found and uni_degree(work) > 0:
            found = False
            for cand in _rational_root_candidates(work):
                val = scalar(cand)
                if uni_eval(work, val).is_zero():
                    roots.append(val)
                    work, _ = uni_divmod(work, [-val, ONE])
                    found = True
                    break
    if uni_degree(work) <= 0:
        return roots, None
    if uni_degree(work) == 1:
        roots.append(-work[0] / work[1])
        return roots, None
    if uni_degree(work) == 2:
        quad = _quadratic_roots(work[0], work[1], work[2])
        if quad is not None:
            return roots + quad, None
    return roots, work


def numeric_roots(coeffs, newton=True):
    """Floating roots of a coefficient list (low degree first)."""
    arr = np.array([complex(x) for x in reversed(coeffs)])
    raw = np.roots(arr)
    if not newton:
        return [complex(r) for r in raw]
    darr = np.polyder(arr)
    out = []
    for r in raw:
        for _ in range(40):
            d = np.polyval(darr, r)
            if abs(d) < 1e-14:
                break
            step = np.polyval(arr, r) / d
            r = r - step
            if abs(step) < 1e-15:
                break
        out.append(complex(r))
    return out


def _distinct_numeric(roots, tol):
    out = []
    for r in roots:
        if all(abs(r - s) > 10 * tol for s in out):
            out.append(r)
    return out


class Solution:
    """A solved assignment; values are AlgebraicScalars when exact."""

    __slots__ = ("values", "exact")

    def __init__(self, values, exact):
        self.values = dict(values)
        self.exact = exact

    def __getitem__(self, name):
        return self.values[name]

    def as_complex(self):
        return {k: (v.to_complex() if hasattr(v, "to_complex") else complex(v))
                for k, v in self.values.items()}

    def __repr__(self):
        kind = "exact" if self.exact else "numeric"
        return "Solution(%s, %s)" % (self.values, kind)


def _is_zero_dimensional(gb):
    n = len(gb.ring)
    covered = [False] * n
    for g in gb.generators:
        lm = g.leading_monomial(gb.order)
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            covered[nz[0]] = True
    return all(covered)


def _univariate_in(p, var_idx):
    coeffs = {}
    for mono, c in p.terms.items():
        for i, e in enumerate(mono):
            if e and i != var_idx:
                return None
        coeffs[mono[var_idx]] = c
    if not coeffs:
        return []
    out = [coeffs.get(k, ZERO) for k in range(max(coeffs) + 1)]
    return uni_trim(out)


def _numeric_univariate(p, var_idx, cassign, ring):
    coeffs = {}
    for mono, c in p.terms.items():
        val = c.to_complex()
        for i, e in enumerate(mono):
            if not e or i == var_idx:
                continue
            name = ring[i]
            if name not in cassign:
                return None
            val *= cassign[name] ** e
        k = mono[var_idx]
        coeffs[k] = coeffs.get(k, 0j) + val
    if not coeffs:
        return []
    out = [coeffs.get(k, 0j) for k in range(max(coeffs) + 1)]
    scale = max(abs(x) for x in out)
    while out and abs(out[-1]) <= 1e-12 * max(1.0, scale):
        out.pop()
    return out


def solve_zero_dim(gb, allow_numeric=True, tol=1e-9):
    """All solutions of a zero-dimensional lex basis, by back-substitution.

    Exact roots are preferred; with allow_numeric the solver emits floating
    roots for eliminant factors outside the field, otherwise it raises
    UnsolvableOverTower.  Every assignment is verified by substitution.
    """
    if gb.order.kind != "lex":
        raise NotZeroDimensional("back-substitution needs a lex basis")
    if gb.is_trivial():
        return []
    if not _is_zero_dimensional(gb):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    ring = gb.ring
    prec = gb.order.precedence or tuple(range(len(ring)))
    solve_order = list(reversed(prec))  # smallest variable first

    branches = [({}, True)]
    for var_idx in solve_order:
        name = ring[var_idx]
        next_branches = []
        for assignment, exact in branches:
            if exact:
                next_branches.extend(
                    _extend_exact(gb, assignment, var_idx, allow_numeric, tol))
            else:
                next_branches.extend(
                    _extend_numeric(gb, assignment, var_idx, tol))
        branches = next_branches

    solutions = []
    for assignment, exact in branches:
        if exact:
            if all(g.evaluate(assignment).is_zero() for g in gb.generators):
                solutions.append(Solution(assignment, True))
        else:
            cassign = {k: (v.to_complex() if hasattr(v, "to_complex")
                           else complex(v)) for k, v in assignment.items()}
            if all(abs(g.evaluate_complex(cassign)) <= tol * 10
                   for g in gb.generators):
                solutions.append(Solution(assignment, False))
    return solutions


def _extend_exact(gb, assignment, var_idx, allow_numeric, tol):
    ring = gb.ring
    name = ring[var_idx]
    polys = []
    for g in gb.generators:
        sg = g.substitute(assignment) if assignment else g
        u = _univariate_in(sg, var_idx)
        if u is None or not u:
            continue
        if uni_degree(u) == 0:
            return []  # inconsistent branch
        polys.append(u)
    if not polys:
        raise NotZeroDimensional("no eliminant for variable %r" % name)
    g = polys[0]
    for other in polys[1:]:
        g = uni_gcd(g, other)
    if uni_degree(g) == 0:
        return []
    collected = []
    leftovers = []
    for factor, _mult in squarefree_decomposition(g):
        r, rest = split_exact_roots(factor)
        collected.extend(r)
        if rest is not None:
            leftovers.append(rest)
    out = []
    for r in collected:
        na = dict(assignment)
        na[name] = r
        out.append((na, True))
    if leftovers:
        if not allow_numeric:
            raise UnsolvableOverTower(
                "eliminant for %r does not split over the field" % name)
        for rest in leftovers:
            for r in _distinct_numeric(
                    numeric_roots([x.to_complex() for x in rest]), tol):
                na = dict(assignment)
                na[name] = r
                out.append((na, False))
    return out


def _extend_numeric(gb, assignment, var_idx, tol):
    ring = gb.ring
    name = ring[var_idx]
    cassign = {k: (v.to_complex() if hasattr(v, "to_complex") else complex(v))
               for k, v in assignment.items()}
    candidate = None
    filters = []
    for g in gb.generators:
        coeffs = _numeric_univariate(g, var_idx, cassign, ring)
        if coeffs is None or len(coeffs) == 0:
            continue
        if len(coeffs) == 1:
            continue  # tiny residue of an inconsistent branch; caught later
        if candidate is None or len(coeffs) < len(candidate):
            if candidate is not None:
                filters.append(candidate)
            candidate = coeffs
        else:
            filters.append(coeffs)
    if candidate is None:
        raise NotZeroDimensional("no eliminant for variable %r" % name)
    out = []
    for r in _distinct_numeric(numeric_roots(candidate), tol):
        ok = True
        for oc in filters:
            val = 0j
            for coeff in reversed(oc):
                val = val * r + coeff
            if abs(val) > tol * 100 * max(1.0, max(abs(x) for x in oc)):
                ok = False
                break
        if ok:
            na = dict(assignment)
            na[name] = r
            out.append((na, False))
    return out
