import random
from fractions import Fraction

import numpy as np
import pytest

from polyent.qmat import (ComplexMatrix, LinearMapRep, NoSplit, NotHermitian,
                          NotNormalized, NotOrthogonal, choi_matrix,
                          operator_schmidt_rank, partial_trace,
                          partial_transpose, tensor_product, tensor_vec,
                          upb_complement_projector)
from polyent.scalars import (HALF, I, ONE, SQRT2, SQRT3, TWO, ZERO, scalar,
                             sqrt_in_tower)


def rand_exact(rng, n, m=None, split=None):
    m = n if m is None else m
    data = [scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 2)))
            + I * scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 2)))
            for _ in range(n * m)]
    return ComplexMatrix("exact", n, m, data, split)


def rand_hermitian(rng, n, split=None):
    m = rand_exact(rng, n)
    h = m + m.conj_transpose()
    return ComplexMatrix("exact", n, n, h.data, split)


def test_tensor_identity():
    assert tensor_product(ComplexMatrix.identity(2),
                          ComplexMatrix.identity(3)) == \
        ComplexMatrix.identity(6, split=(2, 3))


def test_tensor_rank_one_position():
    e1 = ComplexMatrix.exact([[ONE, ZERO], [ZERO, ZERO]])
    e2 = ComplexMatrix.exact([[ZERO, ZERO], [ZERO, ONE]])
    t = tensor_product(e1, e2)
    assert t[1, 1] == ONE and t.trace() == ONE and t.rank() == 1


def test_pauli_shift_of_bell_state():
    s = sqrt_in_tower(Fraction(1, 2))
    phi_plus = (s, ZERO, ZERO, s)
    sx = ComplexMatrix.exact([[ZERO, ONE], [ONE, ZERO]])
    big = tensor_product(sx, ComplexMatrix.identity(2))
    out = big.mat_vec(phi_plus)
    assert out == (ZERO, s, s, ZERO)  # the other symmetric Bell state


def test_partial_transpose_involution_and_composition():
    rng = random.Random(3)
    for _ in range(30):
        m = rand_exact(rng, 6, 6, split=(2, 3))
        pt1 = partial_transpose(m, 1)
        pt2 = partial_transpose(m, 2)
        assert partial_transpose(pt1, 1) == m
        assert partial_transpose(pt2, 2) == m
        both = partial_transpose(pt1, 2)
        assert both == m.transpose()


def test_partial_transpose_needs_split():
    rng = random.Random(4)
    m = rand_exact(rng, 4, 4)
    with pytest.raises(NoSplit):
        partial_transpose(m, 1)


def test_partial_transpose_of_factorized():
    rng = random.Random(5)
    a = rand_exact(rng, 2)
    b = rand_exact(rng, 3)
    t = tensor_product(a, b)
    assert partial_transpose(t, 2) == tensor_product(a, b.transpose())


def test_partial_trace():
    rng = random.Random(6)
    a = rand_exact(rng, 2)
    b = rand_exact(rng, 3)
    t = tensor_product(a, b)
    tb = partial_trace(t, 2)
    assert tb == a.scale(b.trace())
    for _ in range(10):
        m = rand_exact(rng, 6, 6, split=(2, 3))
        assert partial_trace(m, 1).trace() == m.trace()
        assert partial_trace(m, 2).trace() == m.trace()


def test_max_entangled_partial_trace():
    s = sqrt_in_tower(Fraction(1, 3))
    v = [ZERO] * 9
    for i in range(3):
        v[i * 3 + i] = s
    proj = ComplexMatrix("exact", 9, 9,
                         [v[i] * v[j].conjugate() for i in range(9)
                          for j in range(9)], (3, 3))
    red = partial_trace(proj, 1)
    third = scalar(Fraction(1, 3))
    assert red == ComplexMatrix.identity(3).scale(third)


def test_is_psd_exact():
    assert ComplexMatrix.identity(4).is_psd()
    d = ComplexMatrix.exact([[ONE, ZERO], [ZERO, -ONE]])
    assert not d.is_psd()
    with pytest.raises(NotHermitian):
        ComplexMatrix.exact([[ZERO, ONE], [ZERO, ZERO]]).is_psd()


def test_psd_exact_float_agreement():
    rng = random.Random(9)
    agree = 0
    for _ in range(100):
        h = rand_hermitian(rng, 3)
        eig = np.linalg.eigvalsh(h.to_numpy())
        if min(abs(eig)) < 1e-6:
            continue
        assert h.is_psd() == h.to_float().is_psd()
        agree += 1
    assert agree > 50


def test_choi_identity_map():
    c = choi_matrix(LinearMapRep.identity(2))
    expected = np.zeros((4, 4), dtype=complex)
    for k in range(2):
        for l in range(2):
            f = np.zeros((2, 2))
            f[k, l] = 1
            expected += np.kron(f, f)
    assert np.allclose(c.to_numpy(), expected)
    assert c.split == (2, 2)


def test_choi_of_conjugation_is_rank_one():
    v = ComplexMatrix.exact([[ONE, I], [ZERO, SQRT2], [ONE, -ONE]])
    c = choi_matrix(LinearMapRep.ad_v(v))
    assert c.rank() == 1
    assert c.is_psd()


def test_choi_isometry():
    rng = random.Random(12)
    for _ in range(100):
        v = rand_exact(rng, 3)
        w = rand_exact(rng, 3)
        phi = LinearMapRep.ad_v(v)
        psi = LinearMapRep.ad_v(w)
        lhs = phi.hs_inner(psi)
        rhs = choi_matrix(phi).hs_inner(choi_matrix(psi))
        assert lhs == rhs


def pyramid_pairs():
    s2 = sqrt_in_tower(Fraction(1, 2))
    s3 = sqrt_in_tower(Fraction(1, 3))
    v0 = (ONE, ZERO, ZERO)
    v1 = (s2, ZERO, s2)
    v2 = (ZERO, s2, s2)
    v3 = (ZERO, ONE, ZERO)
    v4 = (s3, s3, -s3)
    return [(v0, v2), (v1, v0), (v2, v3), (v3, v1), (v4, v4)]


def test_upb_complement_projector():
    p = upb_complement_projector(pyramid_pairs())
    assert p.rank() == 4
    assert p @ p == p
    assert p.conj_transpose() == p
    pt = partial_transpose(p, 2)
    assert pt @ pt == pt
    assert pt.is_psd()


def test_upb_projector_input_validation():
    s2 = sqrt_in_tower(Fraction(1, 2))
    with pytest.raises(NotNormalized):
        upb_complement_projector([((ONE, ONE, ZERO), (ONE, ZERO, ZERO))])
    v = (s2, s2, ZERO)
    with pytest.raises(NotOrthogonal):
        upb_complement_projector([(v, v), (v, v)])


def test_operator_schmidt_rank():
    rng = random.Random(15)
    a = rand_hermitian(rng, 2)
    b = rand_hermitian(rng, 3)
    t = tensor_product(a, b)
    assert operator_schmidt_rank(t) == 1
    # maximally entangled projector on 3x3 realigns to full rank
    s = sqrt_in_tower(Fraction(1, 3))
    v = [ZERO] * 9
    for i in range(3):
        v[i * 3 + i] = s
    proj = ComplexMatrix("exact", 9, 9,
                         [v[i] * v[j].conjugate() for i in range(9)
                          for j in range(9)], (3, 3))
    assert operator_schmidt_rank(proj) == 9
