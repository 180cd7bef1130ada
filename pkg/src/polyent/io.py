"""File formats: polynomial systems, matrices and product-vector lists."""

from __future__ import annotations

import re

from .gupb import ProductVectorSet
from .poly import ParseError, Polynomial, parse_polynomial, parse_scalar
from .qmat import ComplexMatrix
from .scalars import format_scalar


def read_system(text):
    """Polynomial system: a `vars: x,y,z` header fixing variable order,
    then one polynomial per line; # starts a comment."""
    ring = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vars:"):
            names = [v.strip() for v in line[5:].split(",") if v.strip()]
            if not names:
                raise ParseError("line %d: empty variable list" % lineno)
            ring = tuple(names)
            continue
        if ring is None:
            raise ParseError("line %d: polynomial before the vars header"
                             % lineno)
        polys.append(parse_polynomial(line, ring))
    if ring is None:
        raise ParseError("missing vars header")
    return ring, polys


def format_system(ring, polys, order=None):
    lines = ["vars: " + ",".join(ring)]
    for p in polys:
        lines.append(p.format(order))
    return "\n".join(lines) + "\n"


_DIMS = re.compile(r"dims:\s*(\d+)\s*x\s*(\d+)", re.I)


def read_matrix(text):
    """Square bipartite matrix: a `dims: dA x dB` header, then
    (dA*dB)^2 row-major entries; exact scalar literals, or re,im decimal
    pairs for the floating backend."""
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    body = " ".join(lines)
    m = _DIMS.search(body)
    if not m:
        raise ParseError("missing dims header")
    da, db = int(m.group(1)), int(m.group(2))
    size = da * db
    tokens = body[m.end():].split()
    if len(tokens) != size * size:
        raise ParseError("expected %d entries, found %d"
                         % (size * size, len(tokens)))
    is_float = any("," in t or "." in t for t in tokens)
    if is_float:
        data = []
        for t in tokens:
            if "," in t:
                re_s, im_s = t.split(",", 1)
                data.append(complex(float(re_s), float(im_s)))
            else:
                data.append(complex(float(t), 0.0))
        import numpy as np
        return ComplexMatrix("float", size, size,
                             np.array(data).reshape(size, size), (da, db))
    data = [parse_scalar(t) for t in tokens]
    return ComplexMatrix("exact", size, size, data, (da, db))


def format_matrix(m):
    lines = ["dims: %d x %d" % (m.split if m.split else (1, m.rows))]
    for i in range(m.rows):
        if m.backend == "exact":
            lines.append(" ".join(format_scalar(m[i, j])
                                  for j in range(m.cols)))
        else:
            lines.append(" ".join("%.12g,%.12g" % (m[i, j].real, m[i, j].imag)
                                  for j in range(m.cols)))
    return "\n".join(lines) + "\n"


_GUPB_LINE = re.compile(
    r"phi\s*=\s*\[([^\]]*)\]\s*;\s*psi\s*=\s*\[([^\]]*)\]")


def read_gupb(text):
    """Product-vector list: lines `phi = [a,b,c] ; psi = [d,e,f]` with
    exact scalar literals."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _GUPB_LINE.search(line)
        if not m:
            raise ParseError("line %d: expected phi = [..] ; psi = [..]"
                             % lineno)
        phi = [parse_scalar(t) for t in m.group(1).split(",")]
        psi = [parse_scalar(t) for t in m.group(2).split(",")]
        if len(phi) != 3 or len(psi) != 3:
            raise ParseError("line %d: factors must have three coordinates"
                             % lineno)
        pairs.append((phi, psi))
    return ProductVectorSet(pairs)


def format_gupb(pvs):
    lines = []
    for phi, psi in pvs:
        lines.append("phi = [%s] ; psi = [%s]" % (
            ",".join(format_scalar(x) for x in phi),
            ",".join(format_scalar(x) for x in psi)))
    return "\n".join(lines) + "\n"


def vector_strings(v):
    return [format_scalar(x) for x in v]
