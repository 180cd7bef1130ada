"""Product numerical range of the tridiagonal two-qubit family.

The operator has 1/2 on the diagonal and a, b, c on the first
off-diagonal; its product numerical range is the interval
[(1-M)/2, (1+M)/2] where M maximizes |a x^2 + c y^2| + |b| x y over the
unit circle.  Closed forms cover |a| = |c| and a = r c with real r; other
parameter choices fall back to a dense grid.
"""

from __future__ import annotations

import cmath
import math


def pnr_bound(a, b, c, grid=None):
    """M and the interval, with the method used ('case-a', 'case-b' or
    'grid')."""
    a, b, c = complex(a), complex(b), complex(c)
    ab = abs(b)
    apc = abs(a + c)
    amc = abs(a - c)
    method = None
    m = None
    if abs(abs(a) - abs(c)) < 1e-14:
        method = "case-a"
        if amc < 1e-14 or ab * apc > amc ** 2:
            m = 0.5 * (ab + apc)
        else:
            m = 0.5 * math.sqrt(ab ** 2 + amc ** 2) * \
                math.sqrt(1.0 + (apc / amc) ** 2)
    elif abs(c) > 1e-14 and abs((a / c).imag) < 1e-14:
        method = "case-b"
        m = 0.5 * (apc + math.sqrt(amc ** 2 + ab ** 2))
    else:
        method = "grid"
        m = grid_maximum(a, b, c, grid or 10000)
    return {
        "m": m,
        "interval": ((1.0 - m) / 2.0, (1.0 + m) / 2.0),
        "method": method,
    }


def grid_maximum(a, b, c, points=10000):
    """Direct maximization of |a x^2 + c y^2| + |b| x y on the quarter
    circle; the relative phase between the two terms is already
    optimized out."""
    a, b, c = complex(a), complex(b), complex(c)
    best = 0.0
    ab = abs(b)
    for k in range(points + 1):
        phi = 0.5 * math.pi * k / points
        x, y = math.cos(phi), math.sin(phi)
        val = abs(a * x * x + c * y * y) + ab * x * y
        if val > best:
            best = val
    return best
