"""Sparse multivariate polynomials over Q(i, sqrt2, sqrt3).

Monomials are plain exponent tuples, one slot per ring variable.  A
polynomial never stores zero coefficients; leading data is always relative
to an explicitly supplied monomial order.
"""

from __future__ import annotations

import re

from .scalars import ONE, ZERO, AlgebraicScalar, I, SQRT2, SQRT3, SQRT6, scalar


class RingMismatch(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    pass


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(a):
    return sum(a)


class MonomialOrder:
    """A total multiplicative well-ordering on exponent tuples.

    kind is one of 'lex', 'grlex', 'grevlex'; precedence lists variable
    indices from greatest to smallest (identity when omitted).
    """

    __slots__ = ("kind", "precedence")

    KINDS = ("lex", "grlex", "grevlex")

    def __init__(self, kind, precedence=None):
        if kind not in self.KINDS:
            raise ValueError("unknown order kind %r" % kind)
        self.kind = kind
        self.precedence = None if precedence is None else tuple(precedence)

    def is_graded(self):
        return self.kind in ("grlex", "grevlex")

    def _perm(self, n):
        if self.precedence is None:
            return range(n)
        if sorted(self.precedence) != list(range(n)):
            raise RingMismatch("precedence does not match variable count")
        return self.precedence

    def key(self, mono):
        perm = self._perm(len(mono))
        arranged = tuple(mono[p] for p in perm)
        if self.kind == "lex":
            return arranged
        deg = sum(arranged)
        if self.kind == "grlex":
            return (deg, arranged)
        return (deg, tuple(-e for e in reversed(arranged)))

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.precedence == other.precedence)

    def __repr__(self):
        if self.precedence is None:
            return "MonomialOrder(%r)" % self.kind
        return "MonomialOrder(%r, %r)" % (self.kind, self.precedence)


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")


def compare(a, b, order):
    """Total comparison of two monomials: -1, 0 or +1."""
    if len(a) != len(b):
        raise RingMismatch("monomials from different rings")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class Polynomial:
    """Immutable sparse polynomial attached to a named variable ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _clean=False):
        self.ring = tuple(ring)
        if _clean:
            self.terms = terms
            return
        clean = {}
        n = len(self.ring)
        for mono, coeff in terms.items():
            if len(mono) != n:
                raise RingMismatch("bad exponent tuple %r" % (mono,))
            c = scalar(coeff)
            if not c.is_zero():
                clean[tuple(mono)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, {}, _clean=True)

    @classmethod
    def constant(cls, ring, c):
        c = scalar(c)
        if c.is_zero():
            return cls.zero(ring)
        return cls(ring, {(0,) * len(ring): c}, _clean=True)

    @classmethod
    def variable(cls, ring, name):
        ring = tuple(ring)
        idx = ring.index(name)
        mono = tuple(1 if i == idx else 0 for i in range(len(ring)))
        return cls(ring, {mono: ONE}, _clean=True)

    @classmethod
    def from_terms(cls, ring, pairs):
        acc = {}
        for mono, coeff in pairs:
            mono = tuple(mono)
            acc[mono] = acc.get(mono, ZERO) + scalar(coeff)
        return cls(ring, acc)

    # -- basic structure --------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1
                                  and not any(next(iter(self.terms))))

    def constant_value(self):
        if self.is_zero():
            return ZERO
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        if self.is_zero():
            raise ZeroPolynomialError("degree of the zero polynomial")
        return max(sum(m) for m in self.terms)

    def variables_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def leading_monomial(self, order):
        if not self.terms:
            raise ZeroPolynomialError("leading monomial of zero")
        return max(self.terms, key=order.key)

    def leading_term(self, order):
        lm = self.leading_monomial(order)
        return lm, self.terms[lm]

    def leading_coefficient(self, order):
        return self.terms[self.leading_monomial(order)]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, AlgebraicScalar)):
            other = Polynomial.constant(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out, _clean=True)

    def __sub__(self, other):
        if isinstance(other, (int, AlgebraicScalar)):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()},
                          _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, AlgebraicScalar)):
            return self.scale(other)
        self._check(other)
        out = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def scale(self, c):
        c = scalar(c)
        if c.is_zero():
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()},
                          _clean=True)

    def mul_term(self, coeff, mono):
        coeff = scalar(coeff)
        if coeff.is_zero():
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring,
                          {monomial_mul(m, mono): coeff * c
                           for m, c in self.terms.items()}, _clean=True)

    def __pow__(self, k):
        out = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self, order):
        lc = self.leading_coefficient(order)
        if lc == ONE:
            return self
        inv = lc.inverse()
        return self.scale(inv)

    def conjugate_coefficients(self):
        return Polynomial(self.ring,
                          {m: c.conjugate() for m, c in self.terms.items()},
                          _clean=True)

    # -- substitution -----------------------------------------------------

    def substitute(self, assignment):
        """Specialize named variables to scalars; stays in the same ring."""
        idx = {}
        for name, value in assignment.items():
            idx[self.ring.index(name)] = scalar(value)
        out = {}
        for mono, coeff in self.terms.items():
            c = coeff
            rest = list(mono)
            for i, val in idx.items():
                e = mono[i]
                if e:
                    c = c * val ** e
                    rest[i] = 0
            if c.is_zero():
                continue
            m = tuple(rest)
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out, _clean=True)

    def evaluate(self, assignment):
        """Full evaluation; every used variable must be assigned."""
        p = self.substitute(assignment)
        return p.constant_value()

    def evaluate_complex(self, assignment):
        """Floating evaluation with complex values."""
        total = 0j
        vals = [assignment.get(name) for name in self.ring]
        for mono, coeff in self.terms.items():
            t = coeff.to_complex()
            for i, e in enumerate(mono):
                if e:
                    t *= vals[i] ** e
            total += t
        return total

    def rename_ring(self, ring):
        """Reinterpret over a superset ring (variables matched by name)."""
        ring = tuple(ring)
        pos = [ring.index(name) for name in self.ring]
        n = len(ring)
        out = {}
        for mono, coeff in self.terms.items():
            m = [0] * n
            for src, e in enumerate(mono):
                m[pos[src]] = e
            out[tuple(m)] = coeff
        return Polynomial(ring, out, _clean=True)

    # -- equality and display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, AlgebraicScalar)):
            other = Polynomial.constant(self.ring, other)
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def format(self, order=None):
        if self.is_zero():
            return "0"
        order = order or GREVLEX
        monos = sorted(self.terms, key=order.key, reverse=True)
        parts = []
        for m in monos:
            c = self.terms[m]
            body = "*".join(
                ("%s^%d" % (self.ring[i], e)) if e > 1 else self.ring[i]
                for i, e in enumerate(m) if e)
            from .scalars import format_scalar
            cs = format_scalar(c)
            if body:
                if cs == "1":
                    parts.append(body)
                elif cs == "-1":
                    parts.append("-" + body)
                else:
                    cs2 = "(%s)" % cs if ("+" in cs[1:] or "-" in cs[1:]) else cs
                    parts.append("%s*%s" % (cs2, body))
            else:
                parts.append("(%s)" % cs if ("+" in cs[1:] or "-" in cs[1:]) else cs)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return "Polynomial(%s)" % self.format()


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|\*\*|[()+\-*/^])")

_CONSTANTS = {"i": I, "sqrt2": SQRT2, "sqrt3": SQRT3, "sqrt6": SQRT6}


class ParseError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError("bad character at %r" % text[pos:pos + 10])
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = tuple(ring)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        p = self.expr()
        if self.peek() is not None:
            raise ParseError("unexpected token %r" % self.peek())
        return p

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek() in ("+", "-"):
            op = self.next()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.power()
        while self.peek() in ("*", "/"):
            op = self.next()
            q = self.power()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant():
                    raise ParseError("division by a non-constant")
                p = p.scale(q.constant_value().inverse())
        return p

    def power(self):
        p = self.atom()
        if self.peek() in ("^", "**"):
            self.next()
            neg = False
            if self.peek() == "-":
                self.next()
                neg = True
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ParseError("expected an integer exponent")
            if neg:
                if not p.is_constant():
                    raise ParseError("negative power of a non-constant")
                return Polynomial.constant(
                    self.ring, p.constant_value().inverse() ** int(tok))
            return p ** int(tok)
        return p

    def atom(self):
        tok = self.next()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            p = self.expr()
            if self.next() != ")":
                raise ParseError("missing closing parenthesis")
            return p
        if tok == "-":
            return -self.atom()
        if tok.isdigit():
            return Polynomial.constant(self.ring, int(tok))
        if tok in _CONSTANTS:
            return Polynomial.constant(self.ring, _CONSTANTS[tok])
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            if tok not in self.ring:
                raise ParseError("unknown variable %r" % tok)
            return Polynomial.variable(self.ring, tok)
        raise ParseError("unexpected token %r" % tok)


def parse_polynomial(text, ring):
    """Parse the polynomial grammar: variables, + - * / ^, parentheses,
    integers and the literals i, sqrt2, sqrt3, sqrt6."""
    return _Parser(_tokenize(text), ring).parse()


def parse_scalar(text):
    """Parse a scalar literal (a polynomial expression with no variables)."""
    p = parse_polynomial(text, ())
    return p.constant_value()
