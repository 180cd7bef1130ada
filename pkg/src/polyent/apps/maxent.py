"""Maximally entangled vectors inside a linear subspace of C3 (x) C3.

A vector sum A_ij e_i (x) e_j is maximally entangled iff its coordinate
matrix is a unitary up to scale, i.e. conj(A) = adj(A)^T / det(A).  With
A constrained to the orthogonality kernel of the input product vectors,
the adjugate must lie in the conjugated kernel span: five quadratic
conditions on the projective coefficient vector.  Conjugate consistency
then reduces to a positive-real scale matching per candidate.
"""

from __future__ import annotations

from ..groebner import groebner
from ..linalg import ExactMatrix, exact_kernel, exact_solve
from ..poly import MonomialOrder, Polynomial
from ..qmat import ComplexMatrix, tensor_vec
from ..scalars import ONE, ZERO, scalar, sqrt_in_tower
from ..solve import NotZeroDimensional, UnsolvableOverTower, solve_zero_dim


def _orthogonality_kernel(pvs):
    rows = []
    for phi, psi in pvs:
        rows.append([x.conjugate() for x in tensor_vec(phi, psi)])
    return exact_kernel(ExactMatrix.from_rows(rows))


def _adjugate_conditions(pvs, kernel_basis, ring, fixed):
    """The five quadratic conditions: the transposed adjugate of A(c)
    must be annihilated by the bilinear pairing with each product
    vector."""
    k = len(kernel_basis)

    def a_entry(i, j):
        terms = {}
        const = ZERO
        for l in range(k):
            c = kernel_basis[l][i * 3 + j]
            if c.is_zero():
                continue
            if l in fixed:
                const = const + fixed[l] * c
                continue
            mono = [0] * len(ring)
            mono[ring.index("c%d" % (l + 1))] = 1
            terms[tuple(mono)] = c
        p = Polynomial(ring, terms)
        if not const.is_zero():
            p = p + Polynomial.constant(ring, const)
        return p

    a = [[a_entry(i, j) for j in range(3)] for i in range(3)]

    def cof(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [s for s in range(3) if s != j]
        m = (a[rows[0]][cols[0]] * a[rows[1]][cols[1]]
             - a[rows[0]][cols[1]] * a[rows[1]][cols[0]])
        return m if (i + j) % 2 == 0 else -m

    # adj(A)^T entry (p, q) = cofactor(p, q)
    eqs = []
    for phi, psi in pvs:
        v = tensor_vec(phi, psi)
        acc = Polynomial.zero(ring)
        for p in range(3):
            for q in range(3):
                coeff = v[p * 3 + q]
                if coeff.is_zero():
                    continue
                acc = acc + cof(p, q).scale(coeff)
        if not acc.is_zero():
            eqs.append(acc)
    return eqs, a


def maxent_search(pvs, tol=1e-9):
    """Search the orthogonal complement of the given product vectors for
    maximally entangled states.

    Returns a dict with a verdict and the distinct coordinate matrices
    found; states are exact unitaries with a real positive anchor."""
    kernel_basis = _orthogonality_kernel(pvs)
    if not kernel_basis:
        return {"states": [], "verdict": "empty-complement"}
    k = len(kernel_basis)
    states = []
    keys = set()
    family = False
    irrational = False
    for cell in range(k):
        fixed = {l: ZERO for l in range(cell)}
        fixed[cell] = ONE
        active = list(range(cell + 1, k))
        ring = tuple("c%d" % (l + 1) for l in active)
        eqs, _ = _adjugate_conditions(pvs, kernel_basis, ring, fixed)
        eqs = [e for e in eqs if not e.is_zero()]
        if any(e.is_constant() for e in eqs):
            continue
        if ring:
            gb = groebner(eqs, MonomialOrder("lex")) if eqs else None
            if gb is not None and gb.is_trivial():
                continue
            if gb is None:
                family = True
                continue
            try:
                sols = solve_zero_dim(gb, allow_numeric=False)
            except NotZeroDimensional:
                family = True
                continue
            except UnsolvableOverTower:
                irrational = True
                continue
            cell_solutions = [
                {l: sol.values["c%d" % (l + 1)] for l in active}
                for sol in sols]
        else:
            if eqs:
                continue
            cell_solutions = [{}]
        for extra in cell_solutions:
            coeffs = dict(fixed)
            coeffs.update(extra)
            mat = _conjugate_consistent_state(kernel_basis, coeffs)
            if mat is None:
                continue
            if mat == "irrational":
                irrational = True
                continue
            key = _projective_matrix_key(mat)
            if key in keys:
                continue
            keys.add(key)
            states.append(mat)
    if not states and family:
        return {"states": [], "verdict": "undetermined-family"}
    if not states and irrational:
        return {"states": [], "verdict": "scale-outside-field"}
    return {"states": states, "verdict": "found" if states else "none"}


def _conjugate_consistent_state(kernel_basis, coeffs):
    """Scale a projective candidate to an exact unitary, or reject it."""
    k = len(kernel_basis)
    a = [[ZERO] * 3 for _ in range(3)]
    for l in range(k):
        c = coeffs.get(l, ZERO)
        if c.is_zero():
            continue
        for i in range(3):
            for j in range(3):
                a[i][j] = a[i][j] + c * kernel_basis[l][i * 3 + j]
    mat = ComplexMatrix.exact(a)
    gram = mat @ mat.conj_transpose()
    # A A* = |t|^-2 * 1 must hold for some scale, i.e. gram is a positive
    # multiple of the identity
    g00 = gram[0, 0]
    if g00.is_zero() or not g00.is_real() or g00.sign() <= 0:
        return None
    if gram != ComplexMatrix.identity(3).scale(g00):
        return None
    t = sqrt_in_tower(g00.inverse())
    if t is None:
        return "irrational"
    return mat.scale(t)


def _projective_matrix_key(mat):
    flat = [mat[i, j] for i in range(3) for j in range(3)]
    for x in flat:
        if not x.is_zero():
            inv = x.inverse()
            return tuple(inv * y for y in flat)
    return tuple(flat)
