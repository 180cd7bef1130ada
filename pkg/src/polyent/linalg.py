"""Exact dense linear algebra over Q(i, sqrt2, sqrt3)."""

from __future__ import annotations

from .scalars import ZERO, ONE, AlgebraicScalar, scalar


class NotSquareError(ValueError):
    pass


class ExactMatrix:
    """Immutable dense matrix with AlgebraicScalar entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(scalar(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError("need %d entries, got %d" % (rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO
                          for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, n, m):
        return cls(n, m, [ZERO] * (n * m))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return ExactMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols)
                            for i in range(self.rows)])

    def conjugate(self):
        return ExactMatrix(self.rows, self.cols,
                           [e.conjugate() for e in self.entries])

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return ExactMatrix(self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return ExactMatrix(self.rows, self.cols,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c):
        c = scalar(c)
        return ExactMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = ri[k]
                    if a.is_zero():
                        continue
                    acc = acc + a * other[k, j]
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, out)

    def mat_vec(self, v):
        if self.cols != len(v):
            raise ValueError("shape mismatch")
        v = [scalar(x) for x in v]
        out = []
        for i in range(self.rows):
            acc = ZERO
            ri = self.row(i)
            for k in range(self.cols):
                if not ri[k].is_zero():
                    acc = acc + ri[k] * v[k]
            out.append(acc)
        return tuple(out)

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % (self.rows, self.cols)


def _bareiss_forward(rows_in, track_pivots=False):
    """Fraction-free forward elimination; returns (rows, pivot count, det_sign,
    last pivot, pivot columns)."""
    rows = [list(r) for r in rows_in]
    n = len(rows)
    m = len(rows[0]) if n else 0
    prev = ONE
    sign = 1
    piv_r = 0
    pivots = []
    for piv_c in range(m):
        if piv_r >= n:
            break
        k = None
        for i in range(piv_r, n):
            if not rows[i][piv_c].is_zero():
                k = i
                break
        if k is None:
            continue
        if k != piv_r:
            rows[piv_r], rows[k] = rows[k], rows[piv_r]
            sign = -sign
        p = rows[piv_r][piv_c]
        for i in range(piv_r + 1, n):
            ri = rows[i]
            rp = rows[piv_r]
            f = ri[piv_c]
            for j in range(piv_c, m):
                ri[j] = (p * ri[j] - f * rp[j]) / prev
            ri[piv_c] = ZERO
        prev = p
        pivots.append(piv_c)
        piv_r += 1
    return rows, piv_r, sign, prev, pivots


def exact_rank(m):
    """Rank via fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, r, _, _, _ = _bareiss_forward(m.to_lists())
    return r


def exact_det(m):
    """Determinant via the Bareiss algorithm."""
    if m.rows != m.cols:
        raise NotSquareError("determinant of a %dx%d matrix" % (m.rows, m.cols))
    if m.rows == 0:
        return ONE
    if m.rows == 1:
        return m[0, 0]
    if m.rows == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if m.rows == 3:
        a, b, c, d, e, f, g, h, i = m.entries
        return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
    rows, r, sign, last, _ = _bareiss_forward(m.to_lists())
    if r < m.rows:
        return ZERO
    det = rows[m.rows - 1][m.cols - 1]
    return -det if sign < 0 else det


def exact_kernel(m):
    """Basis of the right null space; empty list for injective maps."""
    n, cols = m.rows, m.cols
    if n == 0:
        return [tuple(ONE if i == j else ZERO for j in range(cols))
                for i in range(cols)]
    rows, _, _, _, pivots = _bareiss_forward(m.to_lists())
    # back-substitute to reduced row echelon form
    rank = len(pivots)
    for i in range(rank):
        p = rows[i][pivots[i]]
        inv = p.inverse()
        rows[i] = [inv * e for e in rows[i]]
    for i in range(rank - 1, -1, -1):
        for k in range(i):
            f = rows[k][pivots[i]]
            if f.is_zero():
                continue
            rows[k] = [a - f * b for a, b in zip(rows[k], rows[i])]
    free = [j for j in range(cols) if j not in set(pivots)]
    basis = []
    for j in free:
        v = [ZERO] * cols
        v[j] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][j]
        basis.append(tuple(v))
    return basis


def exact_solve(m, b):
    """One solution x of m @ x = b, or None when inconsistent."""
    n, cols = m.rows, m.cols
    aug = ExactMatrix(n, cols + 1,
                      [e for i in range(n)
                       for e in (list(m.row(i)) + [scalar(b[i])])])
    rows, _, _, _, pivots = _bareiss_forward(aug.to_lists())
    if pivots and pivots[-1] == cols:
        return None  # pivot in the constant column
    rank = len(pivots)
    for i in range(rank):
        inv = rows[i][pivots[i]].inverse()
        rows[i] = [inv * e for e in rows[i]]
    for i in range(rank - 1, -1, -1):
        for k in range(i):
            f = rows[k][pivots[i]]
            if not f.is_zero():
                rows[k] = [a - f * b_ for a, b_ in zip(rows[k], rows[i])]
    x = [ZERO] * cols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][cols]
    # rows below the rank must have zero constant part
    for i in range(rank, n):
        if not rows[i][cols].is_zero():
            return None
    return tuple(x)


def exact_inverse(m):
    if m.rows != m.cols:
        raise NotSquareError("inverse of a non-square matrix")
    n = m.rows
    cols = []
    for j in range(n):
        e = [ONE if i == j else ZERO for i in range(n)]
        x = exact_solve(m, e)
        if x is None:
            raise ZeroDivisionError("singular matrix")
        cols.append(x)
    return ExactMatrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])
