"""Exact arithmetic in the field Q(i, sqrt2, sqrt3).

Every scalar in the package is an element of this 8-dimensional algebra
over Q with basis {1, i, sqrt2, i*sqrt2, sqrt3, i*sqrt3, sqrt6, i*sqrt6}.
Coordinates are stored as integers over a common positive denominator,
gcd-reduced after every operation so equal values have equal
representations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

# Basis element k encodes i^(k&1) * sqrt2^((k>>1)&1) * sqrt3^((k>>2)&1).
_BASIS_NAMES = ("1", "i", "sqrt2", "i*sqrt2", "sqrt3", "i*sqrt3", "sqrt6", "i*sqrt6")

_SQ2 = 2 ** 0.5
_SQ3 = 3 ** 0.5
_BASIS_COMPLEX = (1, 1j, _SQ2, _SQ2 * 1j, _SQ3, _SQ3 * 1j, _SQ2 * _SQ3, _SQ2 * _SQ3 * 1j)


def _build_mul_table():
    table = []
    for j in range(8):
        row = []
        a1, b1, c1 = j & 1, (j >> 1) & 1, (j >> 2) & 1
        for k in range(8):
            a2, b2, c2 = k & 1, (k >> 1) & 1, (k >> 2) & 1
            coef = 1
            if a1 and a2:
                coef = -coef
            if b1 and b2:
                coef *= 2
            if c1 and c2:
                coef *= 3
            idx = (a1 ^ a2) | ((b1 ^ b2) << 1) | ((c1 ^ c2) << 2)
            row.append((coef, idx))
        table.append(tuple(row))
    return tuple(table)


_MUL = _build_mul_table()

_ZERO_NUMS = (0,) * 8


class DivisionByZero(ZeroDivisionError):
    pass


class NotRealError(ValueError):
    pass


class AlgebraicScalar:
    """An element of Q(i, sqrt2, sqrt3), stored in canonical reduced form."""

    __slots__ = ("nums", "den")

    def __init__(self, nums, den=1, _normalized=False):
        if _normalized:
            self.nums = nums
            self.den = den
            return
        nums = tuple(int(n) for n in nums)
        den = int(den)
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            nums = tuple(-n for n in nums)
            den = -den
        g = den
        for n in nums:
            if n:
                g = gcd(g, n)
                if g == 1:
                    break
        if g > 1:
            nums = tuple(n // g for n in nums)
            den //= g
        self.nums = nums
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value):
        f = Fraction(value)
        return cls((f.numerator, 0, 0, 0, 0, 0, 0, 0), f.denominator)

    @classmethod
    def from_coords(cls, coords):
        """Build from 8 rationals in basis order (1, i, sqrt2, ..., i*sqrt6)."""
        fracs = [Fraction(c) for c in coords]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = tuple(int(f * den) for f in fracs)
        return cls(nums, den)

    # -- predicates and coordinate access ------------------------------

    def is_zero(self):
        return self.nums == _ZERO_NUMS

    def is_rational(self):
        return all(n == 0 for n in self.nums[1:])

    def is_real(self):
        n = self.nums
        return n[1] == 0 and n[3] == 0 and n[5] == 0 and n[7] == 0

    def coords(self):
        return tuple(Fraction(n, self.den) for n in self.nums)

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational value: %s" % self)
        return Fraction(self.nums[0], self.den)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AlgebraicScalar):
            return NotImplemented
        a, b = self, other
        if a.den == b.den:
            return AlgebraicScalar(
                tuple(x + y for x, y in zip(a.nums, b.nums)), a.den)
        return AlgebraicScalar(
            tuple(x * b.den + y * a.den for x, y in zip(a.nums, b.nums)),
            a.den * b.den)

    def __sub__(self, other):
        if not isinstance(other, AlgebraicScalar):
            return NotImplemented
        a, b = self, other
        if a.den == b.den:
            return AlgebraicScalar(
                tuple(x - y for x, y in zip(a.nums, b.nums)), a.den)
        return AlgebraicScalar(
            tuple(x * b.den - y * a.den for x, y in zip(a.nums, b.nums)),
            a.den * b.den)

    def __neg__(self):
        return AlgebraicScalar(tuple(-n for n in self.nums), self.den,
                               _normalized=True)

    def __mul__(self, other):
        if not isinstance(other, AlgebraicScalar):
            return NotImplemented
        a, b = self.nums, other.nums
        # Fast path: both rational.
        if self.is_rational() and other.is_rational():
            return AlgebraicScalar(
                (a[0] * b[0], 0, 0, 0, 0, 0, 0, 0), self.den * other.den)
        out = [0] * 8
        for j in range(8):
            aj = a[j]
            if not aj:
                continue
            mj = _MUL[j]
            for k in range(8):
                bk = b[k]
                if not bk:
                    continue
                coef, idx = mj[k]
                out[idx] += aj * bk * coef
        return AlgebraicScalar(tuple(out), self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, AlgebraicScalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        n = self.nums
        return AlgebraicScalar((n[0], -n[1], n[2], -n[3], n[4], -n[5], n[6], -n[7]),
                               self.den, _normalized=True)

    def _conj_sqrt2(self):
        n = self.nums
        return AlgebraicScalar((n[0], n[1], -n[2], -n[3], n[4], n[5], -n[6], -n[7]),
                               self.den, _normalized=True)

    def _conj_sqrt3(self):
        n = self.nums
        return AlgebraicScalar((n[0], n[1], n[2], n[3], -n[4], -n[5], -n[6], -n[7]),
                               self.den, _normalized=True)

    def inverse(self):
        """Multiplicative inverse, by successive rationalization."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return AlgebraicScalar((self.den, 0, 0, 0, 0, 0, 0, 0), self.nums[0])
        w = self.conjugate()
        zr = self * w                      # real
        t3 = zr._conj_sqrt3()
        z3 = zr * t3                       # in Q(sqrt2)
        t2 = z3._conj_sqrt2()
        z2 = z3 * t2                       # rational norm
        num = w * t3 * t2
        q = Fraction(z2.nums[0], z2.den)
        return AlgebraicScalar(tuple(n * q.denominator for n in num.nums),
                               num.den * q.numerator)

    # -- real/imaginary structure ---------------------------------------

    def real(self):
        n = self.nums
        return AlgebraicScalar((n[0], 0, n[2], 0, n[4], 0, n[6], 0), self.den)

    def imag(self):
        n = self.nums
        return AlgebraicScalar((n[1], 0, n[3], 0, n[5], 0, n[7], 0), self.den)

    def abs2(self):
        """|z|^2, always a real element of the field."""
        return self * self.conjugate()

    def sign(self):
        """Exact sign of a real element: -1, 0 or +1."""
        if not self.is_real():
            raise NotRealError("sign of a non-real scalar")
        n = self.nums
        return _sign_q23(n[0], n[2], n[4], n[6])

    def is_positive(self):
        return self.sign() > 0

    def is_negative(self):
        return self.sign() < 0

    # -- comparisons (real values only, except equality) ----------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraicScalar):
            return NotImplemented
        return self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((self.nums, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    # -- conversions ----------------------------------------------------

    def to_complex(self):
        return sum(n * b for n, b in zip(self.nums, _BASIS_COMPLEX)) / self.den

    def __float__(self):
        if not self.is_real():
            raise NotRealError("float() of a non-real scalar")
        return self.to_complex().real

    def __repr__(self):
        return "AlgebraicScalar(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


def _sign_q2(a, b):
    # sign of a + b*sqrt2 for integers a, b
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    sa = 1 if a > 0 else -1
    sb = 1 if b > 0 else -1
    if sa == sb:
        return sa
    d = a * a - 2 * b * b
    return sa * ((d > 0) - (d < 0))


def _sign_q23(a, b, c, d):
    # sign of (a + b*sqrt2) + (c + d*sqrt2)*sqrt3 for integers
    su = _sign_q2(a, b)
    sv = _sign_q2(c, d)
    if sv == 0:
        return su
    if su == 0:
        return sv
    if su == sv:
        return su
    # sign(u + v*sqrt3) = sign(u) * sign(u^2 - 3 v^2) when signs differ
    pa = a * a + 2 * b * b - 3 * (c * c + 2 * d * d)
    pb = 2 * a * b - 6 * c * d
    return su * _sign_q2(pa, pb)


def scalar(value):
    """Coerce ints, Fractions and AlgebraicScalars to AlgebraicScalar."""
    if isinstance(value, AlgebraicScalar):
        return value
    return AlgebraicScalar.from_rational(value)


ZERO = AlgebraicScalar.from_rational(0)
ONE = AlgebraicScalar.from_rational(1)
TWO = AlgebraicScalar.from_rational(2)
HALF = AlgebraicScalar.from_rational(Fraction(1, 2))
THIRD = AlgebraicScalar.from_rational(Fraction(1, 3))
I = AlgebraicScalar((0, 1, 0, 0, 0, 0, 0, 0), 1)
SQRT2 = AlgebraicScalar((0, 0, 1, 0, 0, 0, 0, 0), 1)
SQRT3 = AlgebraicScalar((0, 0, 0, 0, 1, 0, 0, 0), 1)
SQRT6 = AlgebraicScalar((0, 0, 0, 0, 0, 0, 1, 0), 1)
# primitive cube root of unity, (-1 + i*sqrt3)/2
OMEGA = AlgebraicScalar((-1, 0, 0, 0, 0, 1, 0, 0), 2)


def _square_decompose(n):
    """n = s^2 * m with the powers of 2 and 3 split off; any remaining
    cofactor must be a perfect square for the root to stay in the field,
    so it is kept inside m otherwise."""
    s, m = 1, 1
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    r = isqrt(n)
    if r * r == n:
        s *= r
    else:
        m *= n
    return s, m


def sqrt_rational(q):
    """Square root of a nonnegative rational, if it stays in the field.

    Returns None when the root needs an irrationality outside
    {sqrt2, sqrt3, sqrt6}.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return ZERO
    n = q.numerator * q.denominator
    s, m = _square_decompose(n)
    base = {1: ONE, 2: SQRT2, 3: SQRT3, 6: SQRT6}.get(m)
    if base is None:
        return None
    return scalar(Fraction(s, q.denominator)) * base


def _sqrt_q2(w):
    """Square root of A + B*sqrt2 inside Q(sqrt2), or None."""
    c = w.coords()
    if any(c[k] != 0 for k in (1, 3, 4, 5, 6, 7)):
        return None
    big_a, big_b = c[0], c[2]
    if big_b == 0:
        if big_a < 0:
            return None
        # a^2 = A (rational) or 2 b^2 = A
        r = sqrt_rational(big_a)
        if r is not None and r.is_rational():
            return r
        half = big_a / 2
        rb = sqrt_rational(half) if half >= 0 else None
        if rb is not None and rb.is_rational():
            return scalar(rb.to_fraction()) * SQRT2
        return None
    # (a + b sqrt2)^2: a^2 + 2 b^2 = A, 2ab = B
    disc = big_a * big_a - 2 * big_b * big_b
    if disc < 0:
        return None
    rd = sqrt_rational(disc)
    if rd is None or not rd.is_rational():
        return None
    rdq = rd.to_fraction()
    for t in ((big_a + rdq) / 2, (big_a - rdq) / 2):
        if t < 0:
            continue
        a = sqrt_rational(t)
        if a is None or not a.is_rational() or a.is_zero():
            continue
        aq = a.to_fraction()
        cand = scalar(aq) + scalar(big_b / (2 * aq)) * SQRT2
        if cand * cand == w:
            return cand
    return None


def _sqrt_real_element(x):
    # x real; write x = X1 + X2*sqrt3 with X1, X2 in Q(sqrt2) and look for
    # y = u + v*sqrt3 there: the discriminant (u^2 - 3v^2)^2 is always a
    # perfect square in Q(sqrt2) when a root exists
    if x.sign() < 0:
        y = _sqrt_real_element(-x)
        return None if y is None else I * y
    c = x.coords()
    x1 = AlgebraicScalar.from_coords((c[0], 0, c[2], 0, 0, 0, 0, 0))
    x2 = AlgebraicScalar.from_coords((c[4], 0, c[6], 0, 0, 0, 0, 0))
    candidates = []
    if x2.is_zero():
        u = _sqrt_q2(x1)
        if u is not None:
            candidates.append(u)
        v2 = x1 * THIRD
        v = _sqrt_q2(v2)
        if v is not None:
            candidates.append(v * SQRT3)
    else:
        disc = x1 * x1 - scalar(3) * x2 * x2
        rd = _sqrt_q2(disc) if disc.sign() >= 0 else None
        if rd is not None:
            for t in ((x1 + rd) * HALF, (x1 - rd) * HALF):
                u = _sqrt_q2(t)
                if u is None or u.is_zero():
                    continue
                v = x2 / (TWO * u)
                candidates.append(u + v * SQRT3)
    for cand in candidates:
        if cand * cand == x:
            return cand if cand.sign() >= 0 else -cand
    return None


def sqrt_in_tower(x):
    """Exact square root of x inside Q(i, sqrt2, sqrt3), or None.

    The returned root y satisfies y*y == x exactly; for real positive x the
    nonnegative root is returned.
    """
    x = scalar(x)
    if x.is_zero():
        return ZERO
    if x.is_real():
        return _sqrt_real_element(x)
    # complex: y = u + i*v, u^2 - v^2 = re, 2uv = im
    re, im = x.real(), (x - x.real()) * (-I)
    norm = sqrt_in_tower(x.abs2())
    if norm is None or not norm.is_real():
        return None
    u2 = (re + norm) * HALF
    if u2.sign() < 0:
        return None
    u = _sqrt_real_element(u2)
    if u is None:
        return None
    if u.is_zero():
        v = _sqrt_real_element(-re)
        if v is None:
            return None
        cand = I * v
    else:
        v = im / (TWO * u)
        cand = u + I * v
    if (cand * cand) == x:
        return cand
    return None


def format_scalar(x):
    """Render a scalar in the literal grammar used across file formats."""
    parts = []
    for k, f in enumerate(x.coords()):
        if f == 0:
            continue
        name = _BASIS_NAMES[k]
        if k == 0:
            parts.append(_format_fraction(f))
        elif abs(f) == 1:
            parts.append(name if f > 0 else "-" + name)
        else:
            parts.append("%s*%s" % (_format_fraction(f), name))
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _format_fraction(f):
    if f.denominator == 1:
        return str(f.numerator)
    if f.numerator < 0:
        return "-%d/%d" % (-f.numerator, f.denominator)
    return "%d/%d" % (f.numerator, f.denominator)
