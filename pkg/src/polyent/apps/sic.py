"""Symmetric informationally complete vector search in C3.

The nine vectors are a Heisenberg-group orbit of a fiducial
psi0 = (a, x+iy, z+it); equality of all squared overlaps within the orbit
plus normalization give a polynomial system in (x, y, z, t) for a fixed
real first coordinate a.
"""

from __future__ import annotations

from fractions import Fraction

from ..groebner import elimination_ideal, groebner
from ..poly import MonomialOrder, Polynomial
from ..scalars import I, OMEGA, ONE, ZERO, scalar, sqrt_in_tower
from ..solve import solve_zero_dim

_RING = ("x", "y", "z", "t")


def heisenberg_generators():
    """The shift and clock matrices on C3, exact."""
    x = [[ZERO, ZERO, ONE], [ONE, ZERO, ZERO], [ZERO, ONE, ZERO]]
    w = OMEGA
    z = [[ONE, ZERO, ZERO], [ZERO, w, ZERO], [ZERO, ZERO, w * w]]
    return x, z


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(3)), ZERO)
             for j in range(3)] for i in range(3)]


def _group_elements():
    xm, zm = heisenberg_generators()
    out = {}
    for n in range(3):
        for m in range(3):
            g = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
            for _ in range(n):
                g = _matmul(xm, g)
            for _ in range(m):
                g = _matmul(zm, g)
            out[(n, m)] = g
    return out


def fiducial_system(a):
    """Squared-overlap equality equations plus normalization, for a fixed
    real first coordinate a with |a| < 1."""
    a = scalar(a)
    if not a.is_real() or (a * a - ONE).sign() >= 0:
        raise ValueError("the first coordinate must be real with |a| < 1")
    x, y, z, t = (Polynomial.variable(_RING, v) for v in _RING)
    const = lambda c: Polynomial.constant(_RING, c)
    psi = [const(a), x + y.scale(I), z + t.scale(I)]
    psi_c = [const(a), x - y.scale(I), z - t.scale(I)]
    overlaps2 = []
    for (n, m), g in sorted(_group_elements().items()):
        if (n, m) == (0, 0):
            continue
        gv = [sum((const(g[i][k]) * psi[k] for k in range(3)),
                  Polynomial.zero(_RING)) for i in range(3)]
        o = sum((psi_c[i] * gv[i] for i in range(3)), Polynomial.zero(_RING))
        overlaps2.append(o * o.conjugate_coefficients())
    distinct = []
    for p in overlaps2:
        if all(p != q for q in distinct):
            distinct.append(p)
    eqs = []
    for i in range(len(distinct)):
        for j in range(i + 1, len(distinct)):
            d = distinct[i] - distinct[j]
            if not d.is_zero() and all(d != e and -d != e for e in eqs):
                eqs.append(d)
    eqs.append(const(a * a) + x * x + y * y + z * z + t * t - const(ONE))
    return eqs


def sic3(a=None, tol=1e-12):
    """Fiducial vectors for the orbit construction; default first
    coordinate sqrt(2/3).

    Returns the eliminant in t, the solved fiducials and the verified
    orbit of the first fiducial."""
    if a is None:
        a = sqrt_in_tower(Fraction(2, 3))
    a = scalar(a)
    eqs = fiducial_system(a)
    order = MonomialOrder("lex")
    gb = groebner(eqs, order)
    elim = elimination_ideal(gb, 3)
    sols = solve_zero_dim(gb, allow_numeric=False)
    fiducials = []
    for sol in sols:
        psi = (a, sol["x"] + I * sol["y"], sol["z"] + I * sol["t"])
        fiducials.append((psi, {v: sol[v] for v in _RING}))
    fiducials.sort(key=lambda f: tuple(
        (x.to_complex().real, x.to_complex().imag) for x in f[0]))
    # conjugate closure: the componentwise conjugate of a fiducial is one
    coord_set = {tuple(c
                       for c in (vals["x"], vals["y"], vals["z"], vals["t"]))
                 for _, vals in fiducials}
    for _, vals in fiducials:
        mirrored = (vals["x"], -vals["y"], vals["z"], -vals["t"])
        if mirrored not in coord_set:
            raise AssertionError("fiducial set is not conjugate closed")
    orbit = None
    overlap_error = None
    if fiducials:
        psi0 = fiducials[0][0]
        orbit = []
        for (n, m), g in sorted(_group_elements().items()):
            v = tuple(sum((g[i][k] * psi0[k] for k in range(3)), ZERO)
                      for i in range(3))
            orbit.append(v)
        overlap_error = _orbit_overlap_error(orbit)
        if overlap_error > tol:
            raise AssertionError("orbit overlaps deviate by %g"
                                 % overlap_error)
    return {
        "a": a,
        "basis": gb,
        "eliminant": list(elim.generators),
        "fiducials": fiducials,
        "orbit": orbit,
        "overlap_error": overlap_error,
    }


def _orbit_overlap_error(orbit):
    import numpy as np
    vecs = [np.array([x.to_complex() for x in v]) for v in orbit]
    worst = 0.0
    for i in range(len(vecs)):
        for j in range(len(vecs)):
            if i == j:
                continue
            ov = abs(np.vdot(vecs[i], vecs[j])) ** 2
            worst = max(worst, abs(ov - 0.25))
    return worst
