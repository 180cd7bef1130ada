"""Generalized unextendible product bases in C3 (x) C3 and the rank-4
PPT state machinery built on them.

Five product vectors with all triples independent reduce, projectively,
to a four-parameter normal form
(e1|e1), (e2|e2), (e3|e3), ((1,1,1)|(1,1,1)), ((1,p,q)|(1,r,s)).
Determinant-ratio invariants decide local equivalence to an orthogonal
product basis, and the admissible sign patterns decide which parameter
choices support a positive rank-4 state with the five vectors in its
kernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import (ExactMatrix, exact_det, exact_inverse, exact_kernel,
                     exact_rank)
from .groebner import groebner
from .poly import LEX, MonomialOrder, Polynomial, parse_polynomial
from .qmat import ComplexMatrix, partial_transpose, tensor_vec
from .scalars import ONE, ZERO, scalar, sqrt_in_tower
from .signdata import ADMISSIBLE, FORBIDDEN, QUANTITY_NAMES
from .solve import solve_zero_dim


class WrongCount(ValueError):
    pass


class TooLarge(ValueError):
    pass


class NotMinimalGUPB(ValueError):
    pass


class DegenerateTriple(ValueError):
    pass


class ZeroQuantity(ValueError):
    pass


class Infeasible(ValueError):
    pass


class CountMismatch(ValueError):
    pass


class InputNotRank4PPT(ValueError):
    pass


# the twelve pentagram-inequivalent permutations, zero-indexed images
PERMUTATIONS = (
    (0, 1, 2, 3, 4), (0, 2, 1, 3, 4), (1, 0, 2, 3, 4), (1, 2, 0, 3, 4),
    (2, 0, 1, 3, 4), (2, 1, 0, 3, 4), (0, 1, 3, 2, 4), (0, 3, 1, 2, 4),
    (1, 0, 3, 2, 4), (1, 3, 0, 2, 4), (0, 2, 3, 1, 4), (0, 3, 2, 1, 4),
)

# closed forms of the invariants for each permutation, as numerator /
# denominator expression pairs in p, q, r, s
_CLOSED_FORM_STRINGS = (
    (("-p", "q"), ("q-1", "1"), ("r-s", "s"), ("r", "1-r")),
    (("-q", "p"), ("p-1", "1"), ("s-r", "r"), ("s", "1-s")),
    (("-1", "q"), ("q-p", "p"), ("1-s", "s"), ("1", "r-1")),
    (("-q", "1"), ("1-p", "p"), ("s-1", "1"), ("s", "r-s")),
    (("-1", "p"), ("p-q", "q"), ("1-r", "r"), ("1", "s-1")),
    (("-p", "1"), ("1-q", "q"), ("r-1", "1"), ("r", "s-r")),
    (("p-q", "q"), ("1", "q-1"), ("-r", "s"), ("s-r", "r-1")),
    (("q", "p-q"), ("1-p", "q-1"), ("r", "s-r"), ("-s", "1")),
    (("1-q", "q"), ("p", "q-p"), ("-1", "s"), ("1-s", "r-1")),
    (("q", "1-q"), ("p-1", "q-p"), ("1", "s-1"), ("-s", "r")),
    (("q-p", "p"), ("1", "p-1"), ("-s", "r"), ("r-s", "s-1")),
    (("p", "q-p"), ("1-q", "p-1"), ("s", "r-s"), ("-r", "1")),
)

_PQRS_RING = ("p", "q", "r", "s")

CLOSED_FORMS = tuple(
    tuple((parse_polynomial(num, _PQRS_RING), parse_polynomial(den, _PQRS_RING))
          for num, den in row)
    for row in _CLOSED_FORM_STRINGS)


def closed_form_quad(perm_index, p, q, r, s):
    """Invariant quadruple for the permuted normal form, by the stored
    closed-form expressions."""
    assignment = {"p": p, "q": q, "r": r, "s": s}
    out = []
    for num, den in CLOSED_FORMS[perm_index]:
        d = den.evaluate(assignment)
        if d.is_zero():
            raise DegenerateTriple("closed form denominator vanishes")
        out.append(num.evaluate(assignment) / d)
    return tuple(out)


def _vec3(v):
    return tuple(scalar(x) for x in v)


def _det3(a, b, c):
    return exact_det(ExactMatrix(3, 3, [a[0], b[0], c[0],
                                        a[1], b[1], c[1],
                                        a[2], b[2], c[2]]))


class ProductVectorSet:
    """Ordered product vectors (phi_i, psi_i) in C3 (x) C3, exact entries."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        clean = []
        for phi, psi in pairs:
            phi, psi = _vec3(phi), _vec3(psi)
            if all(x.is_zero() for x in phi) or all(x.is_zero() for x in psi):
                raise ValueError("zero factor in a product vector")
            clean.append((phi, psi))
        self.pairs = tuple(clean)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, k):
        return self.pairs[k]

    def phis(self):
        return [p for p, _ in self.pairs]

    def psis(self):
        return [q for _, q in self.pairs]

    def permuted(self, perm):
        return ProductVectorSet([self.pairs[i] for i in perm])

    def product_coordinates(self):
        """Nine-dimensional coordinates of each phi_i (x) psi_i."""
        return [tensor_vec(phi, psi) for phi, psi in self.pairs]

    def __repr__(self):
        return "ProductVectorSet(%d pairs)" % len(self.pairs)


def projective_normalize(v):
    """Scale so the first nonzero coordinate is one."""
    for x in v:
        if not x.is_zero():
            inv = x.inverse()
            return tuple(inv * y for y in v)
    raise ValueError("zero vector")


def projectively_equal(u, v):
    return projective_normalize(u) == projective_normalize(v)


def is_minimal_gupb(pvs):
    """Five pairs form a minimal gUPB iff every triple on each side is
    linearly independent."""
    if len(pvs) != 5:
        raise WrongCount("minimal gUPB test needs exactly 5 pairs")
    for side in (pvs.phis(), pvs.psis()):
        for i, j, k in combinations(range(5), 3):
            if _det3(side[i], side[j], side[k]).is_zero():
                return False
    return True


def is_gupb(pvs):
    """General test: for every disjoint index bipartition, one side spans."""
    n = len(pvs)
    if n > 12:
        raise TooLarge("partition scan limited to 12 pairs")
    if n < 5:
        return False
    phis, psis = pvs.phis(), pvs.psis()
    for mask in range(1 << n):
        left = [phis[i] for i in range(n) if mask >> i & 1]
        right = [psis[i] for i in range(n) if not mask >> i & 1]
        if left and exact_rank(ExactMatrix.from_rows(left)) == 3:
            continue
        if right and exact_rank(ExactMatrix.from_rows(right)) == 3:
            continue
        return False
    return True


@dataclass
class CanonicalForm:
    """Normal-form parameters of a minimal gUPB together with the projective
    transforms that realize them.

    a_left and b_right are invertible (the normal form is projective, so
    no determinant normalization is imposed); applying them to the input
    pairs and rescaling each vector reproduces the canonical columns.
    """

    p: object
    q: object
    r: object
    s: object
    a_left: ExactMatrix
    b_right: ExactMatrix
    permutation: tuple = (0, 1, 2, 3, 4)

    def parameters(self):
        return (self.p, self.q, self.r, self.s)

    def canonical_pairs(self):
        return canonical_pairs(self.p, self.q, self.r, self.s)


def canonical_pairs(p, q, r, s):
    """The four-parameter normal form as an explicit ProductVectorSet."""
    e1, e2, e3 = (ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)
    ones = (ONE, ONE, ONE)
    return ProductVectorSet([
        (e1, e1), (e2, e2), (e3, e3), (ones, ones),
        ((ONE, scalar(p), scalar(q)), (ONE, scalar(r), scalar(s))),
    ])


def _frame_transform(vs):
    """Invertible map sending v1, v2, v3 to the coordinate axes and v4 to
    a multiple of (1,1,1)."""
    m = ExactMatrix(3, 3, [vs[0][0], vs[1][0], vs[2][0],
                           vs[0][1], vs[1][1], vs[2][1],
                           vs[0][2], vs[1][2], vs[2][2]])
    minv = exact_inverse(m)
    c = minv.mat_vec(vs[3])
    if any(x.is_zero() for x in c):
        raise NotMinimalGUPB("frame vector lies on a coordinate plane")
    rows = []
    for i in range(3):
        inv = c[i].inverse()
        rows.append([inv * minv[i, j] for j in range(3)])
    return ExactMatrix.from_rows(rows)


def canonicalize_five(pvs):
    """Bring a minimal gUPB to the normal form; the frame is the first
    index triple (always independent for a minimal gUPB), so no
    relabelling occurs."""
    if len(pvs) != 5:
        raise WrongCount("canonicalization needs exactly 5 pairs")
    if not is_minimal_gupb(pvs):
        raise NotMinimalGUPB("a triple of factors is linearly dependent")
    a = _frame_transform(pvs.phis())
    b = _frame_transform(pvs.psis())
    a5 = a.mat_vec(pvs[4][0])
    b5 = b.mat_vec(pvs[4][1])
    p = a5[1] / a5[0]
    q = a5[2] / a5[0]
    r = b5[1] / b5[0]
    s = b5[2] / b5[0]
    cf = CanonicalForm(p, q, r, s, a, b)
    # sanity: transformed pairs coincide projectively with the normal form
    target = cf.canonical_pairs()
    for i in range(5):
        if not projectively_equal(a.mat_vec(pvs[i][0]), target[i][0]) or \
                not projectively_equal(b.mat_vec(pvs[i][1]), target[i][1]):
            raise NotMinimalGUPB("canonicalization failed to verify")
    return cf


def invariants(pvs):
    """The four determinant-ratio invariants of five product pairs."""
    if len(pvs) != 5:
        raise WrongCount("invariants need exactly 5 pairs")
    f = pvs.phis()
    g = pvs.psis()

    def ratio(n1, n2, d1, d2):
        den = _det3(*d1) * _det3(*d2)
        if den.is_zero():
            raise DegenerateTriple("invariant denominator vanishes")
        return -(_det3(*n1) * _det3(*n2)) / den

    s1 = ratio((f[0], f[1], f[3]), (f[0], f[2], f[4]),
               (f[0], f[1], f[4]), (f[0], f[2], f[3]))
    s2 = ratio((f[0], f[1], f[2]), (f[1], f[3], f[4]),
               (f[0], f[1], f[3]), (f[1], f[2], f[4]))
    s3 = ratio((g[0], g[2], g[1]), (g[0], g[4], g[3]),
               (g[0], g[2], g[3]), (g[0], g[4], g[1]))
    s4 = ratio((g[0], g[2], g[4]), (g[2], g[1], g[3]),
               (g[0], g[2], g[1]), (g[2], g[4], g[3]))
    return (s1, s2, s3, s4)


def _quad_is_positive(quad):
    return all(x.is_real() and x.sign() > 0 for x in quad)


def orthogonal_equivalence(pvs):
    """Scan the twelve permutations; return (index, permutation, quad) for
    the one whose invariants are all real and positive, or None.

    At most one permutation can succeed; this is asserted by scanning all.
    """
    if not is_minimal_gupb(pvs):
        raise NotMinimalGUPB("orthogonal equivalence needs a minimal gUPB")
    hits = []
    for k, perm in enumerate(PERMUTATIONS):
        quad = invariants(pvs.permuted(perm))
        if _quad_is_positive(quad):
            hits.append((k, perm, quad))
    if not hits:
        return None
    if len(hits) > 1:
        raise AssertionError("multiple all-positive permutations: %r"
                             % [h[0] for h in hits])
    return hits[0]


def pentagon_construct(a, b):
    """Five vectors in C3 whose only orthogonality relations are between
    cyclically consecutive ones."""
    a, b = scalar(a), scalar(b)
    if not (a.is_real() and b.is_real() and a.sign() > 0 and b.sign() > 0):
        raise ValueError("pentagon parameters must be positive reals")
    return [
        (ONE, ZERO, ZERO),
        (ZERO, ONE, ZERO),
        (a, ZERO, b),
        (b, ONE, -a),
        (ZERO, a, ONE),
    ]


# index pairs (row-major, 3x3 split) of the six nonzero diagonal entries
_DIAG_POSITIONS = (1, 2, 3, 5, 6, 7)
_MINOR_POSITIONS = ((1, 2), (1, 7), (2, 5), (3, 5), (3, 6), (6, 7))


def nineteen_quantities(p, q, r, s):
    """The nineteen sign-determining quantities, in table column order."""
    p, q, r, s = scalar(p), scalar(q), scalar(r), scalar(s)
    one = ONE
    return (
        p, q, r, s, p - one, q - one, r - one, s - one, p - q, r - s,
        p - r, p - s, r - q, q - s, q * r - p, q * r - s, p * s - q,
        r - p * s, q * r - p * s,
    )


def _check_quantities_nonzero(p, q, r, s):
    vals = nineteen_quantities(p, q, r, s)
    for name, v in zip(QUANTITY_NAMES, vals):
        if v.is_zero():
            raise ZeroQuantity("quantity %s vanishes" % name)
    return vals


def _hermitian_kernel_state(pvs):
    """The line of real symmetric matrices annihilating the given five
    real product vectors and their partial transposes."""
    vecs = pvs.product_coordinates()
    # unknowns: x_{ij} for i <= j over a real symmetric 9x9 matrix
    unknowns = [(i, j) for i in range(9) for j in range(i, 9)]
    index = {ij: k for k, ij in enumerate(unknowns)}

    def entry(i, j):
        return index[(i, j) if i <= j else (j, i)]

    rows = []
    for v in vecs:
        # rho v = 0
        for k in range(9):
            row = [ZERO] * len(unknowns)
            for l in range(9):
                if not v[l].is_zero():
                    idx = entry(k, l)
                    row[idx] = row[idx] + v[l]
            rows.append(row)
        # rho^{T1} v = 0: (rho^{T1})[(k1,k2),(l1,l2)] = rho[(l1,k2),(k1,l2)]
        for k1 in range(3):
            for k2 in range(3):
                row = [ZERO] * len(unknowns)
                for l1 in range(3):
                    for l2 in range(3):
                        c = v[l1 * 3 + l2]
                        if not c.is_zero():
                            idx = entry(l1 * 3 + k2, k1 * 3 + l2)
                            row[idx] = row[idx] + c
                rows.append(row)
    kernel = exact_kernel(ExactMatrix.from_rows(rows))
    if len(kernel) != 1:
        raise Infeasible("state solution space has dimension %d" % len(kernel))
    x = kernel[0]
    data = [ZERO] * 81
    for (i, j), k in index.items():
        data[i * 9 + j] = x[k]
        data[j * 9 + i] = x[k]
    return ComplexMatrix("exact", 9, 9, data, (3, 3))


def reconstruct_ppt_state(cf):
    """The unique rank-4 PPT state annihilating the canonical five pairs,
    or Infeasible when neither global sign is positive semidefinite.

    Returns (state, sign) with the state normalized to unit trace.
    """
    p, q, r, s = (scalar(v) for v in cf.parameters())
    for v in (p, q, r, s):
        if not v.is_real():
            raise ZeroQuantity("normal-form parameters must be real")
    _check_quantities_nonzero(p, q, r, s)
    pairs = canonical_pairs(p, q, r, s)
    rho0 = _hermitian_kernel_state(pairs)
    # anchor the free real scale: the (1,1) entry of the solution line is a
    # nonzero multiple of (qr-s)/(r(q-1)); the ")+(" choice is the one whose
    # (1,1) entry equals that reference value
    reference = (q * r - s) / (r * (q - ONE))
    anchor = rho0[1, 1]
    if anchor.is_zero():
        raise AssertionError("reconstruction anchor entry vanished")
    rho0 = rho0.scale(reference / anchor)
    accepted = None
    for sign in (1, -1):
        cand = rho0 if sign == 1 else rho0.scale(scalar(-1))
        if cand.is_psd():
            accepted = (cand, sign)
            break
    if accepted is None:
        raise Infeasible("neither sign yields a positive state")
    state, sign = accepted
    tr = state.trace()
    state = state.scale(tr.inverse())
    if state.rank() != 4:
        raise Infeasible("reconstructed state has rank %d" % state.rank())
    pt = partial_transpose(state, 2)
    if not pt.is_psd() or pt.rank() != 4:
        raise Infeasible("partial transpose fails the rank-4 PPT property")
    for v in pairs.product_coordinates():
        img = state.mat_vec(v)
        if any(not x.is_zero() for x in img):
            raise AssertionError("state does not annihilate a kernel vector")
    return state, sign


def _lambda_ring(n):
    return tuple("l%d" % i for i in range(1, n + 1))


class _CellSolution:
    __slots__ = ("values", "exact")

    def __init__(self, values, exact):
        self.values = values
        self.exact = exact


def product_vectors_in_span(basis, allow_numeric=False, tol=1e-9):
    """All product vectors (projectively distinct) inside the span of the
    given nine-dimensional vectors, via the rank-one minor equations."""
    n = len(basis)
    names = _lambda_ring(n)
    found = []
    keys = set()
    for cell in range(n):
        # first nonzero coordinate lambda_cell = 1; earlier ones vanish,
        # so only the later lambdas remain as unknowns
        active = list(range(cell + 1, n))
        ring = tuple(names[j] for j in active)
        nv = len(ring)
        entries = []
        for pos in range(9):
            terms = {}
            const_part = basis[cell][pos]
            mono0 = (0,) * nv
            if not const_part.is_zero():
                terms[mono0] = const_part
            for t, j in enumerate(active):
                c = basis[j][pos]
                if c.is_zero():
                    continue
                mono = tuple(1 if u == t else 0 for u in range(nv))
                terms[mono] = terms.get(mono, ZERO) + c
            entries.append(Polynomial(ring, terms))
        eqs = []
        for i1, i2 in combinations(range(3), 2):
            for j1, j2 in combinations(range(3), 2):
                f = (entries[i1 * 3 + j1] * entries[i2 * 3 + j2]
                     - entries[i1 * 3 + j2] * entries[i2 * 3 + j1])
                if not f.is_zero():
                    eqs.append(f)
        if nv == 0:
            # fully pinned cell: the basis vector itself must be a product
            if any(not e.constant_value().is_zero() for e in eqs):
                continue
            assignments = [{}]
            exact_flags = [True]
        elif not eqs:
            continue
        else:
            order = MonomialOrder("lex")
            gb = groebner(eqs, order)
            if gb.is_trivial():
                continue
            sols = solve_zero_dim(gb, allow_numeric=allow_numeric, tol=tol)
            assignments = [s.values for s in sols]
            exact_flags = [s.exact for s in sols]
        for values, sol_exact in zip(assignments, exact_flags):
            sol = _CellSolution(values, sol_exact)
            lam = [ZERO] * n
            for t, j in enumerate(active):
                lam[j] = sol.values.get(ring[t], ZERO)
            lam[cell] = ONE
            if not sol.exact:
                lam = [x if isinstance(x, complex) else
                       (x.to_complex() if hasattr(x, "to_complex") else
                        complex(x)) for x in lam]
                w = [sum(complex(lam[t]) * basis[t][pos].to_complex()
                         for t in range(n)) for pos in range(9)]
                pair = _split_product_numeric(w, tol)
                if pair is None:
                    continue
                key = _numeric_key(pair, tol)
                if key not in keys:
                    keys.add(key)
                    found.append((pair, False))
                continue
            w = [ZERO] * 9
            for t in range(n):
                lt = lam[t]
                if isinstance(lt, complex):
                    continue
                if lt.is_zero():
                    continue
                for pos in range(9):
                    w[pos] = w[pos] + lt * basis[t][pos]
            pair = _split_product_exact(w)
            if pair is None:
                continue
            key = (projective_normalize(pair[0]), projective_normalize(pair[1]))
            if key not in keys:
                keys.add(key)
                found.append((pair, True))
    return found


def _split_product_exact(w):
    rows = [w[0:3], w[3:6], w[6:9]]
    pivot = None
    for i in range(3):
        for j in range(3):
            if not rows[i][j].is_zero():
                pivot = (i, j)
                break
        if pivot:
            break
    if pivot is None:
        return None
    i0, j0 = pivot
    psi = projective_normalize(rows[i0])
    phi = projective_normalize(tuple(rows[i][j0] for i in range(3)))
    # confirm rank one
    for i in range(3):
        for j in range(3):
            if rows[i][j] != rows[i][j0] * rows[i0][j] / rows[i0][j0]:
                return None
    return (phi, psi)


def _split_product_numeric(w, tol):
    import numpy as np
    m = np.array(w, dtype=complex).reshape(3, 3)
    u, sv, vh = np.linalg.svd(m)
    if sv[1] > tol * 100 * max(1.0, sv[0]):
        return None
    phi = u[:, 0] * sv[0] ** 0.5
    psi = vh[0].conj() * sv[0] ** 0.5
    return (tuple(phi), tuple(psi))


def _numeric_key(pair, tol):
    out = []
    for v in pair:
        arr = list(v)
        piv = max(range(3), key=lambda k: abs(arr[k]))
        arr = [x / arr[piv] for x in arr]
        out.extend(round(x.real, 6) + 1j * round(x.imag, 6) for x in arr)
    return tuple(out)


def sixth_product_vector(cf, state):
    """The unique sixth product vector in the kernel of a reconstructed
    state; the kernel carries exactly six in total."""
    pairs = cf.canonical_pairs()
    basis = pairs.product_coordinates()
    found = product_vectors_in_span(basis, allow_numeric=False)
    if len(found) != 6:
        raise CountMismatch("found %d kernel product vectors, expected 6"
                            % len(found))
    known = [(projective_normalize(tensor_vec(*pr))) for pr in pairs]
    extras = []
    for (phi, psi), exact in found:
        key = projective_normalize(tensor_vec(phi, psi))
        if key not in known:
            extras.append((phi, psi))
    if len(extras) != 1:
        raise CountMismatch("expected exactly one new product vector, got %d"
                            % len(extras))
    phi, psi = extras[0]
    img = state.mat_vec(tensor_vec(phi, psi))
    if any(not x.is_zero() for x in img):
        raise CountMismatch("sixth vector fails to annihilate the state")
    return extras[0]


# -- sign-table validation ----------------------------------------------------


def _sign_pattern(p, q, r, s):
    """Integer signs of the nineteen quantities for rational parameters."""
    vals = (p, q, r, s, p - 1, q - 1, r - 1, s - 1, p - q, r - s,
            p - r, p - s, r - q, q - s, q * r - p, q * r - s, p * s - q,
            r - p * s, q * r - p * s)
    out = []
    for v in vals:
        if v > 0:
            out.append(1)
        elif v < 0:
            out.append(-1)
        else:
            return None
    return tuple(out)


def _matches(pattern, row):
    return all(rv == 0 or rv == pv for pv, rv in zip(pattern, row))


@dataclass
class SignTableReport:
    samples: int
    seed: int
    forbidden_hits: list
    witnesses: dict          # permutation index -> (p, q, r, s) Fractions
    witness_signs: dict      # permutation index -> accepted state sign
    positive_quads: dict     # permutation index -> list of all-positive rows
    plus_minus_split: tuple  # (#rows with +, #rows with -)

    def ok(self):
        return (not self.forbidden_hits
                and len(self.witnesses) == len(PERMUTATIONS)
                and all(v == [k] for k, v in self.positive_quads.items()))


def _random_quad_params(rng, perm_index):
    """Invert the closed forms: draw a positive target quadruple and solve
    for (p, q, r, s) with our own machinery."""
    ring = _PQRS_RING
    targets = [Fraction(rng.randint(1, 12), rng.randint(1, 6))
               for _ in range(4)]
    eqs = []
    for (num, den), t in zip(CLOSED_FORMS[perm_index], targets):
        eqs.append(num - den.scale(scalar(t)))
    gb = groebner(eqs, MonomialOrder("lex"))
    if gb.is_trivial():
        return None
    try:
        sols = solve_zero_dim(gb, allow_numeric=False)
    except Exception:
        return None
    for sol in sols:
        vals = [sol.values.get(v) for v in ring]
        if any(v is None or not v.is_rational() for v in vals):
            continue
        fracs = tuple(v.to_fraction() for v in vals)
        if _sign_pattern(*fracs) is not None:
            return fracs
    return None


def validate_sign_tables(samples=100000, seed=20110913):
    """Randomized audit of the sign tables.

    (a) no random real parameter choice realizes a forbidden pattern;
    (b) every admissible row is realized by a witness whose reconstruction
        is positive semidefinite, recording the global sign used;
    (c) per witness, exactly one of the twelve invariant quadruples is
        all-positive, and it belongs to the matching row.
    """
    rng = random.Random(seed)
    forbidden_hits = []
    for _ in range(samples):
        p = Fraction(rng.randint(-240, 240), rng.randint(1, 16))
        q = Fraction(rng.randint(-240, 240), rng.randint(1, 16))
        r = Fraction(rng.randint(-240, 240), rng.randint(1, 16))
        s = Fraction(rng.randint(-240, 240), rng.randint(1, 16))
        pattern = _sign_pattern(p, q, r, s)
        if pattern is None:
            continue
        for row_index, row in enumerate(FORBIDDEN):
            if _matches(pattern, row):
                forbidden_hits.append((row_index, (p, q, r, s)))
                break

    witnesses = {}
    witness_signs = {}
    positive_quads = {}
    for k in range(len(PERMUTATIONS)):
        params = None
        for _attempt in range(60):
            params = _random_quad_params(rng, k)
            if params is not None:
                break
        if params is None:
            continue
        p, q, r, s = params
        pattern = _sign_pattern(p, q, r, s)
        if pattern != ADMISSIBLE[k]:
            raise AssertionError(
                "witness for row %d realizes pattern %r instead of %r"
                % (k + 1, pattern, ADMISSIBLE[k]))
        sp, sq, sr, ss = (scalar(v) for v in params)
        rows = []
        for j in range(len(PERMUTATIONS)):
            quad = closed_form_quad(j, sp, sq, sr, ss)
            if _quad_is_positive(quad):
                rows.append(j)
        positive_quads[k] = rows
        cf = CanonicalForm(sp, sq, sr, ss, None, None)
        state, sign = reconstruct_ppt_state(cf)
        # the six nonzero diagonal entries and six nontrivial minors must
        # all be positive for the accepted sign
        for pos in _DIAG_POSITIONS:
            if state[pos, pos].sign() <= 0:
                raise AssertionError("nonpositive diagonal in witness %d" % k)
        for i, j in _MINOR_POSITIONS:
            minor = state[i, i] * state[j, j] - state[i, j] * state[j, i]
            if minor.sign() <= 0:
                raise AssertionError("nonpositive minor in witness %d" % k)
        witnesses[k] = params
        witness_signs[k] = sign
    plus = sum(1 for v in witness_signs.values() if v > 0)
    minus = sum(1 for v in witness_signs.values() if v < 0)
    return SignTableReport(samples, seed, forbidden_hits, witnesses,
                           witness_signs, positive_quads, (plus, minus))


# -- orthogonal realization and the main pipeline ------------------------------

# the fixed pentagon relabelling connecting the two orthogonality patterns
_PENTAGON_SIGMA = (0, 2, 4, 1, 3)          # i -> sigma(i), zero-indexed
_PENTAGON_SIGMA_INV = (0, 3, 1, 4, 2)


@dataclass
class OrthogonalRealization:
    upb: list                 # five (v_i, w_i) pairs, unnormalized
    left: object              # transform applied to the phi side
    right: object             # transform applied to the psi side
    exact: bool
    pentagon_parameters: tuple


def _projective_map(sources, targets):
    """The unique projective transform sending four source vectors in
    general position to four targets; exact."""
    f_src = _frame_transform(sources)
    f_tgt = _frame_transform(targets)
    return exact_inverse(f_tgt) @ f_src


def realize_orthogonal_upb(pvs, quad=None):
    """Transform a minimal gUPB with an all-positive invariant quadruple
    (identity permutation) into an orthogonal UPB.

    Returns an OrthogonalRealization whose transforms are exact whenever
    the pentagon parameters stay inside the field; otherwise floating.
    """
    if quad is None:
        quad = invariants(pvs)
    if not _quad_is_positive(quad):
        raise Infeasible("invariants are not all positive")
    s1, s2, s3, s4 = quad
    a = sqrt_in_tower(s1)
    b = sqrt_in_tower(s1 * s2)
    a2 = sqrt_in_tower(s3)
    b2 = sqrt_in_tower(s3 * s4)
    exact = all(v is not None for v in (a, b, a2, b2))
    if exact:
        u_phi = pentagon_construct(a, b)
        u_psi = pentagon_construct(a2, b2)
        phis = pvs.phis()
        psis = pvs.psis()
        t_phi = _projective_map(phis[:4], u_phi[:4])
        if not projectively_equal(t_phi.mat_vec(phis[4]), u_phi[4]):
            raise AssertionError("pentagon frame map misses the fifth vector")
        psi_sources = [psis[_PENTAGON_SIGMA[i]] for i in range(5)]
        t_psi = _projective_map(psi_sources[:4], u_psi[:4])
        if not projectively_equal(t_psi.mat_vec(psi_sources[4]), u_psi[4]):
            raise AssertionError("pentagon frame map misses the fifth vector")
        upb = []
        for i in range(5):
            v = t_phi.mat_vec(phis[i])
            w = t_psi.mat_vec(psis[i])
            upb.append((v, w))
        _check_orthogonal_upb_exact(upb)
        return OrthogonalRealization(upb, t_phi, t_psi, True,
                                     (a, b, a2, b2))
    import numpy as np
    fa = [complex(x.to_complex()) for x in
          (s1, s1 * s2, s3, s3 * s4)]
    av, bv, a2v, b2v = (abs(x) ** 0.5 for x in fa)
    u_phi = _pentagon_float(av, bv)
    u_psi = _pentagon_float(a2v, b2v)
    phis = [np.array([x.to_complex() for x in v]) for v in pvs.phis()]
    psis = [np.array([x.to_complex() for x in v]) for v in pvs.psis()]
    t_phi = _projective_map_float(phis[:4], u_phi[:4])
    t_psi = _projective_map_float(
        [psis[_PENTAGON_SIGMA[i]] for i in range(4)], u_psi[:4])
    upb = [(t_phi @ phis[i], t_psi @ psis[i]) for i in range(5)]
    return OrthogonalRealization(upb, t_phi, t_psi, False,
                                 (av, bv, a2v, b2v))


def _pentagon_float(a, b):
    return [
        (1.0, 0.0, 0.0),
        (0.0, 1.0, 0.0),
        (a, 0.0, b),
        (b, 1.0, -a),
        (0.0, a, 1.0),
    ]


def _projective_map_float(sources, targets):
    import numpy as np
    m = np.column_stack(sources[:3])
    minv = np.linalg.inv(m)
    c = minv @ np.asarray(sources[3], dtype=complex)
    f_src = np.diag(1.0 / c) @ minv
    mt = np.column_stack([np.asarray(t, dtype=complex) for t in targets[:3]])
    mtinv = np.linalg.inv(mt)
    ct = mtinv @ np.asarray(targets[3], dtype=complex)
    f_tgt = np.diag(1.0 / ct) @ mtinv
    return np.linalg.inv(f_tgt) @ f_src


def _check_orthogonal_upb_exact(upb):
    for i in range(5):
        for j in range(i + 1, 5):
            ipv = ZERO
            for x, y in zip(upb[i][0], upb[j][0]):
                ipv = ipv + x.conjugate() * y
            ipw = ZERO
            for x, y in zip(upb[i][1], upb[j][1]):
                ipw = ipw + x.conjugate() * y
            if not (ipv * ipw).is_zero():
                raise AssertionError("realized vectors %d, %d not orthogonal"
                                     % (i, j))


def complement_projector_unnormalized(upb):
    """1 - sum of projectors onto the (possibly unnormalized) product
    vectors; exact, using norm-squared divisions only."""
    size = 9
    data = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    for phi, psi in upb:
        v = tensor_vec(phi, psi)
        nrm = ZERO
        for x in v:
            nrm = nrm + x.conjugate() * x
        inv = nrm.inverse()
        for i in range(size):
            if v[i].is_zero():
                continue
            for j in range(size):
                data[i][j] = data[i][j] - inv * v[i] * v[j].conjugate()
    return ComplexMatrix.exact(data, split=(3, 3))


@dataclass
class MainTheoremCertificate:
    matched: bool
    stage: str
    kernel_product_vectors: list = field(default_factory=list)
    subset: tuple = ()
    permutation_index: int = -1
    quad: tuple = ()
    canonical_form: object = None
    sign: int = 0
    scale: object = None
    canonical_state: object = None
    transported_state: object = None
    realization: object = None

    def __bool__(self):
        return self.matched


def _states_proportional(a, b):
    """Positive real c with a == c*b, or None."""
    ratio = None
    for i in range(a.rows):
        for j in range(a.cols):
            x, y = a[i, j], b[i, j]
            if x.is_zero() != y.is_zero():
                return None
            if not y.is_zero() and ratio is None:
                ratio = x / y
    if ratio is None or not ratio.is_real() or ratio.sign() <= 0:
        return None
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != ratio * b[i, j]:
                return None
    return ratio


def verify_main_theorem(rho, realize=True, allow_numeric=False):
    """Full pipeline: find the kernel product vectors of a rank-4 PPT
    two-qutrit state, certify the gUPB and its positive permuted
    invariants, reconstruct, and match the input up to positive scale.
    """
    if rho.backend != "exact":
        raise InputNotRank4PPT("pipeline requires the exact backend")
    if rho.split != (3, 3):
        raise InputNotRank4PPT("state must carry a 3x3 split")
    if not rho.is_hermitian() or not rho.is_psd():
        raise InputNotRank4PPT("state is not positive semidefinite")
    if rho.rank() != 4:
        raise InputNotRank4PPT("state rank is %d, not 4" % rho.rank())
    if not partial_transpose(rho, 2).is_psd():
        raise InputNotRank4PPT("state is not PPT")

    kernel = exact_kernel(rho.to_exact_matrix())
    try:
        found = product_vectors_in_span(kernel, allow_numeric=allow_numeric)
    except Exception as exc:
        return MainTheoremCertificate(False,
                                      "kernel-scan failed: %s" % exc)
    exact_found = [pair for pair, ex in found if ex]
    if len(found) != 6 or len(exact_found) != 6:
        return MainTheoremCertificate(
            False, "kernel holds %d product vectors, not 6" % len(found),
            kernel_product_vectors=[pair for pair, _ in found])

    last_stage = "no five-subset forms a minimal gUPB"
    for subset in combinations(range(6), 5):
        pvs = ProductVectorSet([exact_found[i] for i in subset])
        if not is_minimal_gupb(pvs):
            continue
        last_stage = "no permutation yields positive invariants"
        hit = orthogonal_equivalence(pvs)
        if hit is None:
            continue
        k, perm, quad = hit
        ordered = pvs.permuted(perm)
        cf = canonicalize_five(ordered)
        state, sign = reconstruct_ppt_state(cf)
        big = _kron_exact(cf.a_left, cf.b_right)
        transported = big.conj_transpose() @ state @ big
        transported = ComplexMatrix("exact", 9, 9, transported.data, (3, 3))
        scale = _states_proportional(rho, transported)
        if scale is None:
            last_stage = "reconstruction does not match the input state"
            continue
        realization = None
        if realize:
            realization = realize_orthogonal_upb(ordered, quad)
            if realization.exact:
                pi = complement_projector_unnormalized(realization.upb)
                tl = _to_exact_matrix_any(realization.left)
                tr = _to_exact_matrix_any(realization.right)
                back = _kron_exact(tl, tr)
                check = back.conj_transpose() @ pi @ back
                check = ComplexMatrix("exact", 9, 9, check.data, (3, 3))
                if _states_proportional(rho, check) is None:
                    raise AssertionError(
                        "orthogonal realization does not reproduce the state")
        return MainTheoremCertificate(
            True, "matched", [pair for pair, _ in found], subset, k, quad,
            cf, sign, scale, state, transported, realization)
    return MainTheoremCertificate(False, last_stage,
                                  kernel_product_vectors=[p for p, _ in found])


def _kron_exact(a, b):
    from .qmat import tensor_product
    ca = ComplexMatrix("exact", a.rows, a.cols, a.entries)
    cb = ComplexMatrix("exact", b.rows, b.cols, b.entries)
    return tensor_product(ca, cb)


def _to_exact_matrix_any(t):
    if isinstance(t, ExactMatrix):
        return t
    raise AssertionError("expected an exact transform")
