"""Completely entangled subspace detection.

A subspace of C^n (x) C^m is completely entangled when it contains no
product vector.  Membership of a (x) b is a bilinear polynomial system
against the orthogonal complement; dehomogenizations pin one coordinate
of each factor to 1 so that the zero vector and projective duplicates
drop out.
"""

from __future__ import annotations

from itertools import product as iproduct

from ..groebner import groebner
from ..linalg import ExactMatrix, exact_kernel
from ..poly import MonomialOrder, Polynomial
from ..scalars import ONE, ZERO, scalar
from ..solve import NotZeroDimensional, solve_zero_dim


def _membership_ring(n, m):
    return tuple(["a%d" % i for i in range(1, n + 1)]
                 + ["b%d" % j for j in range(1, m + 1)])


def _membership_equations(basis, n, m):
    """Equations for a (x) b lying in the span of the given basis vectors."""
    rows = [[x.conjugate() for x in v] for v in basis]
    complement = exact_kernel(ExactMatrix.from_rows(rows))
    ring = _membership_ring(n, m)
    eqs = []
    for w in complement:
        terms = {}
        for i in range(n):
            for j in range(m):
                c = w[i * m + j].conjugate()
                if c.is_zero():
                    continue
                mono = [0] * (n + m)
                mono[i] = 1
                mono[n + j] = 1
                terms[tuple(mono)] = c
        eqs.append(Polynomial(ring, terms))
    return ring, eqs, complement


def _cells(n, m, four_pattern):
    """Dehomogenization cells as (fixed-one a index, fixed-one b index,
    forced-zero a indices, forced-zero b indices)."""
    if not four_pattern:
        for i, j in iproduct(range(n), range(m)):
            yield i, j, (), ()
        return
    # disjoint decomposition: split on the vanishing of a_1 and b_1
    yield 0, 0, (), ()
    for i in range(1, n):
        yield i, 0, tuple(range(i)), ()
    for j in range(1, m):
        yield 0, j, (), tuple(range(j))
    for i in range(1, n):
        for j in range(1, m):
            yield i, j, tuple(range(i)), tuple(range(j))


def ces_check(basis, n, m, four_pattern=False, allow_numeric=False, tol=1e-9):
    """Decide whether the span of basis is completely entangled; when not,
    return the product vectors (when finitely many)."""
    ring, eqs, _ = _membership_equations(basis, n, m)
    order = MonomialOrder("lex")
    vectors = []
    keys = set()
    infinite = False
    for ai, bj, azero, bzero in _cells(n, m, four_pattern):
        assignment = {ring[ai]: ONE, ring[n + bj]: ONE}
        for k in azero:
            assignment[ring[k]] = ZERO
        for k in bzero:
            assignment[ring[n + k]] = ZERO
        cell_eqs = [e.substitute(assignment) for e in eqs]
        cell_eqs = [e for e in cell_eqs if not e.is_zero()]
        if any(e.is_constant() for e in cell_eqs):
            continue
        free = sorted({v for e in cell_eqs for v in e.variables_used()})
        if not cell_eqs:
            infinite = True
            continue
        names = tuple(ring[v] for v in free)
        reduced = [_restrict(e, ring, names) for e in cell_eqs]
        gb = groebner(reduced, order)
        if gb.is_trivial():
            continue
        try:
            sols = solve_zero_dim(gb, allow_numeric=allow_numeric, tol=tol)
        except NotZeroDimensional:
            infinite = True
            continue
        for sol in sols:
            full = dict(assignment)
            for name in names:
                full[name] = sol.values[name]
            for k in range(n):
                full.setdefault(ring[k], ZERO)
            for k in range(m):
                full.setdefault(ring[n + k], ZERO)
            if not sol.exact:
                continue
            a = tuple(full[ring[k]] for k in range(n))
            b = tuple(full[ring[n + k]] for k in range(m))
            for e in eqs:
                if not e.evaluate(full).is_zero():
                    raise AssertionError("candidate fails re-verification")
            key = (_proj_key(a), _proj_key(b))
            if key not in keys:
                keys.add(key)
                vectors.append((a, b))
    return {
        "is_ces": not infinite and not vectors,
        "product_vectors": vectors,
        "infinite": infinite,
    }


def _restrict(p, ring, names):
    pos = [ring.index(nm) for nm in names]
    out = {}
    for mono, c in p.terms.items():
        out[tuple(mono[k] for k in pos)] = c
    return Polynomial(names, out)


def _proj_key(v):
    for x in v:
        if not x.is_zero():
            inv = x.inverse()
            return tuple(inv * y for y in v)
    return tuple(v)


def hermitian_complement(basis):
    """Basis of the orthogonal complement (Hermitian inner product)."""
    rows = [[x.conjugate() for x in v] for v in basis]
    return exact_kernel(ExactMatrix.from_rows(rows))


def vz_family(z, conjugate_z=None):
    """The six-vector family in C^3 (x) C^4 whose span (and complement)
    is completely entangled away from z in {-1, 0, 1}."""
    z = scalar(z)
    zc = z.conjugate() if conjugate_z is None else scalar(conjugate_z)
    if z.is_zero():
        raise ValueError("the family is defined for nonzero z")
    n, m = 3, 4

    def basis_vec(entries):
        v = [ZERO] * (n * m)
        for (i, j), c in entries.items():
            v[i * m + j] = c
        return tuple(v)

    zs = [ONE, z, z * z, z * z * z, z ** 4, z ** 5]
    vs = [
        basis_vec({(0, 0): ONE, (1, 1): ONE}),
        basis_vec({(1, 0): ONE, (2, 1): zs[1]}),
        basis_vec({(2, 0): ONE, (0, 2): zs[2]}),
        basis_vec({(0, 1): ONE, (2, 3): zs[3]}),
        basis_vec({(1, 2): ONE, (0, 3): zs[4]}),
        basis_vec({(2, 2): ONE, (1, 3): zs[5]}),
    ]
    return vs, (n, m)
