"""Complex bipartite linear algebra with exact and floating backends.

Exact matrices carry AlgebraicScalar entries; floating ones wrap numpy
arrays.  Operations that need the bipartite structure (partial transpose,
partial trace, Schmidt rank) require an explicit (dA, dB) split.
"""

from __future__ import annotations

import numpy as np

from .linalg import ExactMatrix, exact_det, exact_kernel, exact_rank
from .scalars import ONE, ZERO, AlgebraicScalar, scalar


class BackendMismatch(ValueError):
    pass


class NoSplit(ValueError):
    pass


class NotHermitian(ValueError):
    pass


class NotOrthogonal(ValueError):
    pass


class NotNormalized(ValueError):
    pass


class ComplexMatrix:
    """Dense complex matrix, exact or floating, with an optional
    bipartite dimension split."""

    __slots__ = ("backend", "rows", "cols", "data", "split")

    def __init__(self, backend, rows, cols, data, split=None):
        self.backend = backend
        self.rows = rows
        self.cols = cols
        if split is not None:
            da, db = split
            if da * db != rows or rows != cols:
                raise ValueError("split %r does not match shape" % (split,))
            split = (da, db)
        self.split = split
        if backend == "exact":
            data = tuple(scalar(x) for x in data)
            if len(data) != rows * cols:
                raise ValueError("bad entry count")
            self.data = data
        elif backend == "float":
            arr = np.asarray(data, dtype=complex).reshape(rows, cols)
            arr.flags.writeable = False
            self.data = arr
        else:
            raise ValueError("unknown backend %r" % backend)

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact(cls, rows, split=None):
        rows = [list(r) for r in rows]
        n, m = len(rows), len(rows[0])
        return cls("exact", n, m, [e for r in rows for e in r], split)

    @classmethod
    def floating(cls, array, split=None):
        arr = np.asarray(array, dtype=complex)
        return cls("float", arr.shape[0], arr.shape[1], arr, split)

    @classmethod
    def identity(cls, n, backend="exact", split=None):
        if backend == "exact":
            return cls("exact", n, n,
                       [ONE if i == j else ZERO for i in range(n)
                        for j in range(n)], split)
        return cls("float", n, n, np.eye(n, dtype=complex), split)

    @classmethod
    def zeros(cls, n, m, backend="exact", split=None):
        if backend == "exact":
            return cls("exact", n, m, [ZERO] * (n * m), split)
        return cls("float", n, m, np.zeros((n, m), dtype=complex), split)

    def with_split(self, da, db):
        return ComplexMatrix(self.backend, self.rows, self.cols,
                             self.data if self.backend == "float"
                             else list(self.data), (da, db))

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        if self.backend == "exact":
            return self.data[i * self.cols + j]
        return self.data[i, j]

    def to_exact_matrix(self):
        if self.backend != "exact":
            raise BackendMismatch("not an exact matrix")
        return ExactMatrix(self.rows, self.cols, self.data)

    def to_numpy(self):
        if self.backend == "float":
            return np.array(self.data)
        return np.array([[self[i, j].to_complex() for j in range(self.cols)]
                         for i in range(self.rows)])

    def to_float(self):
        return ComplexMatrix("float", self.rows, self.cols, self.to_numpy(),
                             self.split)

    def _check(self, other):
        if self.backend != other.backend:
            raise BackendMismatch("mixed exact and float operands")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        if self.backend == "exact":
            return ComplexMatrix("exact", self.rows, self.cols,
                                 [a + b for a, b in zip(self.data, other.data)],
                                 self.split)
        return ComplexMatrix("float", self.rows, self.cols,
                             self.data + other.data, self.split)

    def __sub__(self, other):
        self._check(other)
        if self.backend == "exact":
            return ComplexMatrix("exact", self.rows, self.cols,
                                 [a - b for a, b in zip(self.data, other.data)],
                                 self.split)
        return ComplexMatrix("float", self.rows, self.cols,
                             self.data - other.data, self.split)

    def scale(self, c):
        if self.backend == "exact":
            c = scalar(c)
            return ComplexMatrix("exact", self.rows, self.cols,
                                 [c * x for x in self.data], self.split)
        return ComplexMatrix("float", self.rows, self.cols,
                             complex(c) * self.data, self.split)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        if self.backend == "float":
            return ComplexMatrix("float", self.rows, other.cols,
                                 self.data @ other.data)
        em = self.to_exact_matrix() @ other.to_exact_matrix()
        return ComplexMatrix("exact", em.rows, em.cols, em.entries)

    def conj_transpose(self):
        if self.backend == "exact":
            out = [self[j, i].conjugate() for i in range(self.cols)
                   for j in range(self.rows)]
            return ComplexMatrix("exact", self.cols, self.rows, out, self.split)
        return ComplexMatrix("float", self.cols, self.rows,
                             self.data.conj().T, self.split)

    def transpose(self):
        if self.backend == "exact":
            out = [self[j, i] for i in range(self.cols) for j in range(self.rows)]
            return ComplexMatrix("exact", self.cols, self.rows, out, self.split)
        return ComplexMatrix("float", self.cols, self.rows, self.data.T,
                             self.split)

    def trace(self):
        if self.backend == "exact":
            acc = ZERO
            for i in range(min(self.rows, self.cols)):
                acc = acc + self[i, i]
            return acc
        return complex(np.trace(self.data))

    def hs_inner(self, other):
        """Hilbert-Schmidt inner product <self, other> = tr(self* other)."""
        return (self.conj_transpose() @ other).trace()

    def mat_vec(self, v):
        if self.backend == "exact":
            return self.to_exact_matrix().mat_vec([scalar(x) for x in v])
        return tuple(np.asarray(self.data) @ np.asarray(v, dtype=complex))

    def rank(self, tol=1e-9):
        if self.backend == "exact":
            return exact_rank(self.to_exact_matrix())
        return int(np.linalg.matrix_rank(self.data, tol=tol))

    def kernel(self, tol=1e-9):
        if self.backend == "exact":
            return exact_kernel(self.to_exact_matrix())
        u, s, vh = np.linalg.svd(self.data)
        null = [vh[i].conj() for i in range(len(s)) if s[i] <= tol]
        null += [vh[i].conj() for i in range(len(s), vh.shape[0])]
        return [tuple(v) for v in null]

    def is_hermitian(self, tol=1e-9):
        if self.rows != self.cols:
            return False
        if self.backend == "exact":
            return all(self[i, j] == self[j, i].conjugate()
                       for i in range(self.rows) for j in range(i, self.cols))
        return bool(np.allclose(self.data, self.data.conj().T, atol=tol))

    def char_poly(self):
        """Coefficients c of det(lambda*I - M) = sum c[k] lambda^k, exact
        backend, via the Faddeev-LeVerrier recursion."""
        if self.backend != "exact":
            raise BackendMismatch("char_poly needs the exact backend")
        n = self.rows
        em = self.to_exact_matrix()
        coeffs = [ZERO] * (n + 1)
        coeffs[n] = ONE
        mk = ExactMatrix.identity(n)
        ck = ONE
        for k in range(1, n + 1):
            mk = em @ mk
            tr = ZERO
            for i in range(n):
                tr = tr + mk[i, i]
            ck = -(tr / scalar(k))
            coeffs[n - k] = ck
            if k < n:
                mk = ExactMatrix(n, n,
                                 [mk[i, j] + (ck if i == j else ZERO)
                                  for i in range(n) for j in range(n)])
        return coeffs

    def is_psd(self, tol=1e-9):
        """Positive semidefiniteness; exact backend uses the signs of the
        characteristic polynomial coefficients, float uses eigenvalues."""
        if not self.is_hermitian(tol):
            raise NotHermitian("matrix is not Hermitian")
        if self.backend == "float":
            eig = np.linalg.eigvalsh(self.data)
            return bool(eig.min() >= -tol)
        coeffs = self.char_poly()
        n = self.rows
        # det(lambda I - M) = sum_k (-1)^k e_k lambda^(n-k): e_k >= 0 for all k
        for k in range(n + 1):
            e_k = coeffs[n - k] if k % 2 == 0 else -coeffs[n - k]
            e_k = e_k.real() if not e_k.is_real() else e_k
            if e_k.sign() < 0:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.backend != other.backend or self.rows != other.rows \
                or self.cols != other.cols:
            return False
        if self.backend == "exact":
            return self.data == other.data
        return bool(np.array_equal(self.data, other.data))

    def __repr__(self):
        s = "" if self.split is None else ", split=%dx%d" % self.split
        return "ComplexMatrix(%s, %dx%d%s)" % (self.backend, self.rows,
                                               self.cols, s)


def tensor_product(a, b):
    """Kronecker product; the result carries the (rowsA, rowsB) split when
    both factors are square."""
    a._check(b)
    rows, cols = a.rows * b.rows, a.cols * b.cols
    split = (a.rows, b.rows) if (a.rows == a.cols and b.rows == b.cols) else None
    if a.backend == "float":
        return ComplexMatrix("float", rows, cols, np.kron(a.data, b.data), split)
    out = []
    for i1 in range(a.rows):
        for i2 in range(b.rows):
            for j1 in range(a.cols):
                for j2 in range(b.cols):
                    out.append(a[i1, j1] * b[i2, j2])
    return ComplexMatrix("exact", rows, cols, out, split)


def tensor_vec(x, y):
    """Coordinates of x (x) y, row-major in the second factor."""
    out = []
    for xi in x:
        for yj in y:
            out.append(xi * yj if hasattr(xi, "is_zero") else xi * yj)
    return tuple(out)


def _require_split(m):
    if m.split is None:
        raise NoSplit("operation needs a bipartite split")
    return m.split


def partial_transpose(m, subsystem):
    """Transpose on one tensor factor; involutive."""
    da, db = _require_split(m)
    if subsystem not in (1, 2):
        raise ValueError("subsystem must be 1 or 2")
    idx = lambda i, j: i * db + j

    def src(i1, i2, j1, j2):
        if subsystem == 1:
            return (idx(j1, i2), idx(i1, j2))
        return (idx(i1, j2), idx(j1, i2))

    if m.backend == "exact":
        out = []
        for i1 in range(da):
            for i2 in range(db):
                for j1 in range(da):
                    for j2 in range(db):
                        out.append(m[src(i1, i2, j1, j2)])
        return ComplexMatrix("exact", m.rows, m.cols, out, m.split)
    arr = np.array(m.data).reshape(da, db, da, db)
    if subsystem == 1:
        arr = arr.transpose(2, 1, 0, 3)
    else:
        arr = arr.transpose(0, 3, 2, 1)
    return ComplexMatrix("float", m.rows, m.cols,
                         arr.reshape(m.rows, m.cols), m.split)


def partial_trace(m, subsystem):
    """Trace out one tensor factor; preserves the total trace."""
    da, db = _require_split(m)
    if subsystem not in (1, 2):
        raise ValueError("subsystem must be 1 or 2")
    if m.backend == "float":
        arr = np.array(m.data).reshape(da, db, da, db)
        if subsystem == 1:
            out = np.einsum("ijik->jk", arr)
        else:
            out = np.einsum("ijkj->ik", arr)
        return ComplexMatrix("float", out.shape[0], out.shape[1], out)
    if subsystem == 1:
        n = db
        out = []
        for j in range(db):
            for l in range(db):
                acc = ZERO
                for i in range(da):
                    acc = acc + m[i * db + j, i * db + l]
                out.append(acc)
    else:
        n = da
        out = []
        for i in range(da):
            for k in range(da):
                acc = ZERO
                for j in range(db):
                    acc = acc + m[i * db + j, k * db + j]
                out.append(acc)
    return ComplexMatrix("exact", n, n, out)


def is_psd(m, tol=1e-9):
    return m.is_psd(tol)


class LinearMapRep:
    """A linear map on matrices, stored by its images of the matrix units
    f_kl of the input space."""

    __slots__ = ("dim_in", "dim_out", "images")

    def __init__(self, dim_in, dim_out, images):
        self.dim_in = dim_in
        self.dim_out = dim_out
        self.images = dict(images)
        for (k, l), img in self.images.items():
            if img.rows != dim_out or img.cols != dim_out:
                raise ValueError("image of f_%d%d has wrong shape" % (k, l))

    @classmethod
    def identity(cls, d):
        images = {}
        for k in range(d):
            for l in range(d):
                images[(k, l)] = _matrix_unit(d, k, l)
        return cls(d, d, images)

    @classmethod
    def ad_v(cls, v):
        """The conjugation map rho -> V rho V* for a dim_out x dim_in V."""
        n, m = v.rows, v.cols
        images = {}
        for k in range(m):
            for l in range(m):
                img = v @ _matrix_unit(m, k, l) @ v.conj_transpose()
                images[(k, l)] = img
        return cls(m, n, images)

    def hs_inner(self, other):
        acc = ZERO
        for key, img in self.images.items():
            acc = acc + img.hs_inner(other.images[key])
        return acc


def _matrix_unit(d, k, l):
    return ComplexMatrix("exact", d, d,
                         [ONE if (i == k and j == l) else ZERO
                          for i in range(d) for j in range(d)])


def choi_matrix(phi):
    """C_Phi = sum f_kl (x) Phi(f_kl), with the (dim_in, dim_out) split."""
    m, n = phi.dim_in, phi.dim_out
    size = m * n
    out = [ZERO] * (size * size)
    for (k, l), img in phi.images.items():
        for i in range(n):
            for j in range(n):
                v = img[i, j]
                if isinstance(v, AlgebraicScalar) and v.is_zero():
                    continue
                out[(k * n + i) * size + (l * n + j)] = \
                    out[(k * n + i) * size + (l * n + j)] + v
    return ComplexMatrix("exact", size, size, out, (m, n))


def upb_complement_projector(vectors):
    """1 - sum of projectors onto the given orthonormal product vectors.

    vectors: list of (phi, psi) pairs of exact coordinate tuples; the
    product vectors must be mutually orthogonal and normalized.
    """
    if not vectors:
        raise ValueError("empty vector list needs an explicit dimension")
    da = len(vectors[0][0])
    db = len(vectors[0][1])
    prods = [tensor_vec(tuple(scalar(x) for x in phi),
                        tuple(scalar(x) for x in psi))
             for phi, psi in vectors]
    for i, v in enumerate(prods):
        nrm = ZERO
        for x in v:
            nrm = nrm + x.conjugate() * x
        if nrm != ONE:
            raise NotNormalized("product vector %d is not normalized" % i)
        for j in range(i):
            ip = ZERO
            for x, y in zip(prods[j], v):
                ip = ip + x.conjugate() * y
            if not ip.is_zero():
                raise NotOrthogonal("product vectors %d and %d overlap" % (j, i))
    size = da * db
    out = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    for v in prods:
        for i in range(size):
            vi = v[i]
            if vi.is_zero():
                continue
            for j in range(size):
                out[i][j] = out[i][j] - vi * v[j].conjugate()
    return ComplexMatrix("exact", size, size,
                         [e for row in out for e in row], (da, db))


def operator_schmidt_rank(m):
    """Rank of the realigned coefficient matrix of a bipartite operator."""
    da, db = _require_split(m)
    if not m.is_hermitian():
        raise NotHermitian("operator Schmidt rank defined for Hermitian input")
    if m.backend == "exact":
        rows = []
        for i in range(da):
            for k in range(da):
                row = []
                for j in range(db):
                    for l in range(db):
                        row.append(m[i * db + j, k * db + l])
                rows.append(row)
        return exact_rank(ExactMatrix.from_rows(rows))
    arr = np.array(m.data).reshape(da, db, da, db)
    re = arr.transpose(0, 2, 1, 3).reshape(da * da, db * db)
    return int(np.linalg.matrix_rank(re, tol=1e-9))


def identity_complement(dim, split):
    """Identity matrix used for empty UPBs."""
    return ComplexMatrix.identity(dim, "exact", split)
