"""Full set of mutually unbiased bases in C3, found by solving the
unbiasedness equations exactly."""

from __future__ import annotations

from fractions import Fraction

from ..groebner import groebner
from ..poly import MonomialOrder, Polynomial
from ..scalars import I, OMEGA, ONE, ZERO, scalar, sqrt_in_tower
from ..solve import solve_zero_dim

_RING = ("x1", "y1", "x2", "y2")


def fourier_basis():
    """Columns of the 3x3 Fourier matrix, exactly normalized."""
    w = OMEGA
    inv_sqrt3 = sqrt_in_tower(Fraction(1, 3))
    cols = []
    for j in range(3):
        cols.append(tuple(inv_sqrt3 * w ** ((i * j) % 3) for i in range(3)))
    return cols


def unbiasedness_system():
    """Polynomial system for a unit vector (1, x1+iy1, x2+iy2)/sqrt3 to be
    unbiased against the Fourier columns, with the circle constraints."""
    x1 = Polynomial.variable(_RING, "x1")
    y1 = Polynomial.variable(_RING, "y1")
    x2 = Polynomial.variable(_RING, "x2")
    y2 = Polynomial.variable(_RING, "y2")
    one = Polynomial.constant(_RING, 1)
    eqs = [x1 * x1 + y1 * y1 - one, x2 * x2 + y2 * y2 - one]
    w = OMEGA
    # |<F3 column j, v>|^2 = 1/3 with v = (1, x1+iy1, x2+iy2)/sqrt3
    # reduces to |sum_i conj(w^(ij)) (1, x1+iy1, x2+iy2)_i|^2 = 3
    for j in range(3):
        col = [w ** ((i * j) % 3) for i in range(3)]
        acc_re = Polynomial.constant(_RING, 1)
        acc_im = Polynomial.zero(_RING)
        for comp, (xr, yr) in zip(col[1:], ((x1, y1), (x2, y2))):
            c = comp.conjugate()
            cr, ci = c.real(), (c - c.real()) * (-I)
            # (cr + i ci)(x + i y) = (cr x - ci y) + i(cr y + ci x)
            acc_re = acc_re + xr.scale(cr) - yr.scale(ci)
            acc_im = acc_im + yr.scale(cr) + xr.scale(ci)
        eqs.append(acc_re * acc_re + acc_im * acc_im
                   - Polynomial.constant(_RING, 3))
    return eqs


def mub3():
    """The six unbiased vectors and the grouping into two extra bases;
    all squared overlaps verified exactly."""
    gb = groebner(unbiasedness_system(), MonomialOrder("lex"))
    sols = solve_zero_dim(gb, allow_numeric=False)
    vectors = []
    inv_sqrt3 = sqrt_in_tower(Fraction(1, 3))
    for sol in sols:
        v = (inv_sqrt3,
             inv_sqrt3 * (sol["x1"] + I * sol["y1"]),
             inv_sqrt3 * (sol["x2"] + I * sol["y2"]))
        vectors.append(v)
    vectors.sort(key=lambda v: tuple(
        (x.to_complex().real, x.to_complex().imag) for x in v))
    # group into orthonormal triples
    third = scalar(Fraction(1, 3))
    groups = []
    used = set()
    for i in range(len(vectors)):
        if i in used:
            continue
        group = [i]
        for j in range(i + 1, len(vectors)):
            if j in used:
                continue
            if all(_overlap2(vectors[j], vectors[t]).is_zero()
                   for t in group):
                group.append(j)
        if len(group) == 3:
            used.update(group)
            groups.append(group)
    e_basis = [tuple(ONE if i == j else ZERO for i in range(3))
               for j in range(3)]
    bases = [e_basis, fourier_basis()] + \
        [[vectors[i] for i in g] for g in groups]
    # verify: all cross-basis squared overlaps are exactly 1/3
    for a in range(len(bases)):
        for b in range(a + 1, len(bases)):
            for u in bases[a]:
                for v in bases[b]:
                    if _overlap2(u, v) != third:
                        raise AssertionError("unbiasedness failed")
    return {"vectors": vectors, "groups": groups, "bases": bases}


def _overlap2(u, v):
    ip = ZERO
    for x, y in zip(u, v):
        ip = ip + x.conjugate() * y
    return ip * ip.conjugate()
