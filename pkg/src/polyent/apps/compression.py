"""Common rank-2 compression subspaces of two commuting Hermitians on C4.

With shared eigenbasis v1..v4 and spectra lambda_i, chi_i, a common
compression P H_k P = value * P exists iff the bilinear constraint system
on the eigenvalue offsets and the weight magnitudes has a nonnegative
real solution.
"""

from __future__ import annotations

from fractions import Fraction

from ..groebner import groebner
from ..poly import MonomialOrder, Polynomial
from ..scalars import ONE, ZERO, scalar, sqrt_in_tower
from ..solve import NotZeroDimensional, solve_zero_dim

_RING = ("l1", "l2", "l3", "l4", "h1", "h2", "h3", "h4",
         "alpha", "beta", "gamma", "delta")


class DegenerateSpectrum(ValueError):
    pass


def compression_system(lambdas, chis):
    lambdas = [Fraction(v) for v in lambdas]
    chis = [Fraction(v) for v in chis]
    if len(lambdas) != 4 or len(chis) != 4:
        raise DegenerateSpectrum("need four eigenvalues per operator")
    if any(b <= a for a, b in zip(lambdas, lambdas[1:])) or \
            any(b <= a for a, b in zip(chis, chis[1:])):
        raise DegenerateSpectrum("spectra must be strictly increasing")
    v = {name: Polynomial.variable(_RING, name) for name in _RING}
    c = lambda x: Polynomial.constant(_RING, scalar(x))
    eqs = [
        v["alpha"] * v["h3"] * v["l1"] - v["gamma"] * v["h1"] * v["l3"],
        v["beta"] * v["h4"] * v["l1"] - v["delta"] * v["h1"] * v["l4"],
        v["beta"] * v["h3"] * v["l2"] - v["delta"] * v["h2"] * v["l3"],
        v["alpha"] * v["h4"] * v["l2"] - v["gamma"] * v["h2"] * v["l4"],
        v["alpha"] + v["beta"] - c(1),
        v["gamma"] + v["delta"] - c(1),
        v["l1"] - v["l2"] - c(lambdas[1] - lambdas[0]),
        v["l2"] + v["l3"] - c(lambdas[2] - lambdas[1]),
        v["l3"] - v["l4"] - c(lambdas[2] - lambdas[3]),
        v["h1"] - v["h2"] - c(chis[1] - chis[0]),
        v["h2"] + v["h3"] - c(chis[2] - chis[1]),
        v["h3"] - v["h4"] - c(chis[2] - chis[3]),
    ]
    return eqs


def compression(lambdas, chis, tol=1e-9):
    """Solve the compression system; report raw solutions, the nonnegative
    ones, and their compression values (xi, zeta)."""
    lambdas = [Fraction(v) for v in lambdas]
    chis = [Fraction(v) for v in chis]
    eqs = compression_system(lambdas, chis)
    gb = groebner(eqs, MonomialOrder("lex"))
    try:
        sols = solve_zero_dim(gb, allow_numeric=True, tol=tol)
    except NotZeroDimensional:
        return {"family": True, "raw": [], "admissible": []}
    raw = []
    admissible = []
    for sol in sols:
        values = {name: sol.values[name] for name in _RING}
        raw.append((values, sol.exact))
        if not sol.exact:
            ok = all(isinstance(v, complex) or True for v in values.values())
            vals = {k: (v if isinstance(v, complex) else v.to_complex())
                    for k, v in values.items()}
            if any(abs(v.imag) > tol for v in vals.values()):
                continue
            if any(v.real < -tol for v in vals.values()):
                continue
            admissible.append(_admissible_entry(values, lambdas, chis, False))
            continue
        if any(not v.is_real() or v.sign() < 0 for v in values.values()):
            continue
        admissible.append(_admissible_entry(values, lambdas, chis, True))
    return {"family": False, "raw": raw, "admissible": admissible}


def _admissible_entry(values, lambdas, chis, exact):
    if exact:
        xi = scalar(lambdas[0]) + values["l1"]
        zeta = scalar(chis[0]) + values["h1"]
        weights = {k: values[k] for k in ("alpha", "beta", "gamma", "delta")}
        amps = {k: sqrt_in_tower(weights[k]) for k in weights}
    else:
        xi = float(lambdas[0]) + values["l1"].real
        zeta = float(chis[0]) + values["h1"].real
        weights = {k: values[k] for k in ("alpha", "beta", "gamma", "delta")}
        amps = {k: abs(weights[k]) ** 0.5 if not hasattr(weights[k], "sign")
                else None for k in weights}
    return {
        "values": values,
        "xi": xi,
        "zeta": zeta,
        "weights": weights,
        "amplitudes": amps,
        "exact": exact,
    }


def verify_compression(entry, lambdas, chis):
    """Build the rank-2 projector of an exact admissible solution (phase
    zero representative) and confirm P H P = value * P for both
    operators."""
    from ..linalg import ExactMatrix, exact_inverse
    from ..qmat import ComplexMatrix
    lambdas = [scalar(Fraction(v)) for v in lambdas]
    chis = [scalar(Fraction(v)) for v in chis]
    xi, zeta = entry["xi"], entry["zeta"]
    a = entry["amplitudes"]["alpha"]
    b = entry["amplitudes"]["beta"]
    if a is None or b is None:
        raise ValueError("amplitudes outside the field")
    l_off = [xi - lambdas[0], xi - lambdas[1], lambdas[2] - xi,
             lambdas[3] - xi]
    roots = [sqrt_in_tower(x) for x in l_off]
    if any(r is None for r in roots):
        raise ValueError("offsets outside the field")
    s1, s2, s3, s4 = roots
    u1 = [s1.inverse(), ZERO, a / s3, -b / s4]
    u2 = [ZERO, s2.inverse(), b / s3, a / s4]
    basis = ExactMatrix.from_rows([u1, u2])
    gram = basis @ basis.transpose().conjugate()
    ginv = exact_inverse(gram)
    proj = basis.transpose().conjugate() @ ginv @ basis
    p = ComplexMatrix("exact", 4, 4, proj.entries)
    for spec, val in ((lambdas, xi), (chis, zeta)):
        h = ComplexMatrix.exact(
            [[spec[i] if i == j else ZERO for j in range(4)]
             for i in range(4)])
        lhs = p @ h @ p
        if lhs != p.scale(val):
            return False
    return True
