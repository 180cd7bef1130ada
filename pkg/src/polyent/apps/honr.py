"""Rank-2 numerical range and code carrier for 3x3 matrices.

A compression P M P = lambda P with a rank-2 projector splits into the
Hermitian and anti-Hermitian parts of M.  For a Hermitian operator with
eigenvalues l1 < l2 < l3 the carrier is the circle family
span{x2, kappa e^(i phi) x1 + eta x3}; intersecting two carriers reduces
to determinant conditions linear in the circle phases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..linalg import ExactMatrix, exact_det, exact_kernel
from ..qmat import ComplexMatrix
from ..scalars import HALF, I, ONE, TWO, ZERO, scalar, sqrt_in_tower
from ..solve import exact_roots_squarefree, squarefree_decomposition, uni_monic


class SpectrumOutsideField(ValueError):
    pass


@dataclass
class CarrierFamily:
    kind: str                 # 'full', 'single', 'circle'
    value: object             # the compression value (middle eigenvalue)
    x1: tuple = None
    x2: tuple = None
    x3: tuple = None
    kappa: object = None
    eta: object = None
    subspace: tuple = None    # for 'single': a pair of spanning vectors


def _hermitian_eigensystem(h):
    """Exact eigenvalues (sorted ascending) with eigenvectors, when the
    characteristic polynomial splits over the field."""
    coeffs = h.char_poly()
    roots = []
    for factor, mult in squarefree_decomposition(uni_monic(list(coeffs))):
        r = exact_roots_squarefree(factor)
        if r is None:
            raise SpectrumOutsideField("eigenvalues leave the field")
        for x in r:
            roots.extend([x] * mult)
    roots.sort()
    eig = []
    seen = {}
    for lam in roots:
        key = lam
        if key in seen:
            eig.append((lam, seen[key].pop(0)))
            continue
        shifted = ExactMatrix(3, 3, [h[i, j] - (lam if i == j else ZERO)
                                     for i in range(3) for j in range(3)])
        vecs = list(exact_kernel(shifted))
        eig.append((lam, vecs.pop(0)))
        seen[key] = vecs
    return eig


def _normalize_exact(v):
    nrm2 = ZERO
    for x in v:
        nrm2 = nrm2 + x.conjugate() * x
    root = sqrt_in_tower(nrm2)
    if root is None:
        raise SpectrumOutsideField("eigenvector norm leaves the field")
    inv = root.inverse()
    return tuple(inv * x for x in v)


def carrier_rank2(h):
    """The rank-2 code carrier of an exact Hermitian 3x3 matrix."""
    if not h.is_hermitian():
        raise ValueError("carrier of a non-Hermitian matrix")
    # proportional to identity?
    c = h[0, 0]
    if h == ComplexMatrix.identity(3).scale(c):
        return CarrierFamily("full", c)
    eig = _hermitian_eigensystem(h)
    (l1, v1), (l2, v2), (l3, v3) = eig
    v1, v2, v3 = (_normalize_exact(v) for v in (v1, v2, v3))
    if l1 == l2 or l2 == l3:
        # carrier is the projector onto the middle eigenvalue's eigenspace
        if l1 == l2:
            span = (v1, v2)
        else:
            span = (v2, v3)
        return CarrierFamily("single", l2, subspace=span)
    kappa = sqrt_in_tower((l3 - l2) / (l3 - l1))
    eta = sqrt_in_tower((l2 - l1) / (l3 - l1))
    if kappa is None or eta is None:
        raise SpectrumOutsideField("carrier parameters leave the field")
    return CarrierFamily("circle", l2, x1=v1, x2=v2, x3=v3,
                         kappa=kappa, eta=eta)


def _det_columns(a, b, c):
    return exact_det(ExactMatrix(3, 3, [a[0], b[0], c[0],
                                        a[1], b[1], c[1],
                                        a[2], b[2], c[2]]))


def _phase_candidates(alpha, beta):
    """Unit-modulus solutions u of alpha*u + beta = 0; None means every
    phase works."""
    if alpha.is_zero() and beta.is_zero():
        return None
    if alpha.is_zero():
        return []
    u = -(beta / alpha)
    if (u * u.conjugate()) == ONE:
        return [u]
    return []


def _carrier_vector(fam, u):
    return tuple(fam.kappa * u * a + fam.eta * b
                 for a, b in zip(fam.x1, fam.x3))


def _intersect_circle_circle(fa, fb):
    sols = []
    free_phase = False
    det1_alpha = _det_columns(fa.x2, tuple(fa.kappa * x for x in fa.x1),
                              fb.x2)
    det1_beta = _det_columns(fa.x2, tuple(fa.eta * x for x in fa.x3), fb.x2)
    cand = _phase_candidates(det1_alpha, det1_beta)
    if cand is None:
        free_phase = True
        cand = []
    for u in cand:
        w = _carrier_vector(fa, u)
        alpha2 = _det_columns(fa.x2, w, tuple(fb.kappa * x for x in fb.x1))
        beta2 = _det_columns(fa.x2, w, tuple(fb.eta * x for x in fb.x3))
        cand2 = _phase_candidates(alpha2, beta2)
        if cand2 is None:
            sols.append((u, None))
        else:
            for u2 in cand2:
                wb = _carrier_vector(fb, u2)
                # the two subspaces span{x2, w} and span{x2', wb} coincide
                if _same_plane(fa.x2, w, fb.x2, wb):
                    sols.append((u, u2))
    return sols, free_phase


def _same_plane(a1, a2, b1, b2):
    m = ExactMatrix.from_rows([list(a1), list(a2), list(b1)])
    if exact_det(ExactMatrix(3, 3, m.entries)) != ZERO:
        return False
    m2 = ExactMatrix.from_rows([list(a1), list(a2), list(b2)])
    return exact_det(ExactMatrix(3, 3, m2.entries)) == ZERO


def _subspace_membership(span_pair, fam):
    """Phases u for which the circle-family plane equals the given one."""
    a1, a2 = span_pair
    alpha = _det_columns(a1, a2, tuple(fam.kappa * x for x in fam.x1))
    beta = _det_columns(a1, a2, tuple(fam.eta * x for x in fam.x3))
    cand = _phase_candidates(alpha, beta)
    if cand is None:
        return None
    out = []
    for u in cand:
        w = _carrier_vector(fam, u)
        if _same_plane(a1, w, a1, a2) or _same_plane(a1, a2, fam.x2, w):
            # require both x2 and w inside the plane
            if _in_plane(fam.x2, a1, a2) and _in_plane(w, a1, a2):
                out.append(u)
    return out


def _in_plane(v, a1, a2):
    return exact_det(ExactMatrix(3, 3,
                                 [a1[0], a2[0], v[0],
                                  a1[1], a2[1], v[1],
                                  a1[2], a2[2], v[2]])) == ZERO


def honr2(m):
    """Second-order numerical range and code carrier of an exact 3x3
    matrix, via the Hermitian/anti-Hermitian split."""
    if m.backend != "exact" or m.rows != 3 or m.cols != 3:
        raise ValueError("exact 3x3 input required")
    mh = (m + m.conj_transpose()).scale(HALF)
    ma = (m - m.conj_transpose()).scale(-I * HALF)  # (m - m*) / (2i)
    fa = carrier_rank2(mh)
    fb = carrier_rank2(ma)
    result = {"hermitian": fa, "antihermitian": fb}
    value = fa.value + I * fb.value
    if fa.kind == "full" and fb.kind == "full":
        result["range"] = [value]
        result["carrier"] = "full"
        return result
    if fa.kind == "full" or fb.kind == "full":
        result["range"] = [value]
        result["carrier"] = fb if fa.kind == "full" else fa
        return result
    if fa.kind == "single" and fb.kind == "single":
        same = _same_plane(fa.subspace[0], fa.subspace[1], fb.subspace[0],
                           fb.subspace[1]) and \
            _in_plane(fb.subspace[1], fa.subspace[0], fa.subspace[1])
        result["range"] = [value] if same else []
        result["carrier"] = ([fa.subspace] if same else [])
        return result
    if fa.kind == "single" or fb.kind == "single":
        single = fa if fa.kind == "single" else fb
        circle = fb if fa.kind == "single" else fa
        phases = _subspace_membership(single.subspace, circle)
        if phases is None:
            result["range"] = [value]
            result["carrier"] = [single.subspace]
        elif phases:
            result["range"] = [value]
            result["carrier"] = [single.subspace]
        else:
            result["range"] = []
            result["carrier"] = []
        return result
    sols, free_phase = _intersect_circle_circle(fa, fb)
    if free_phase:
        result["range"] = [value]
        result["carrier"] = "one-parameter-family"
        return result
    carriers = []
    for u, _ in sols:
        carriers.append((fa.x2, _carrier_vector(fa, u)))
    result["range"] = [value] if carriers else []
    result["carrier"] = carriers
    return result
