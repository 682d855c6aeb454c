"""Exact arithmetic in Q(q,t) and truncated polynomials in the series variables u, v.

A :class:`QtRat` is a reduced fraction of integer polynomials in ``q`` and
``t``.  Polynomial arithmetic and gcds are delegated to FLINT's
``fmpz_mpoly``; this module owns the canonical form, the text grammar and the
plethystic power substitution ``q -> q^n, t -> t^n``.

Canonical form: numerator and denominator share no common factor (integer
content included) and the denominator's least monomial, ordered by
(q-degree, t-degree), has a positive coefficient.  Equal values therefore
have identical stored representations and ``==`` is structural.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import flint

__all__ = [
    "QtRat",
    "UVPoly",
    "QtParseError",
    "power_twist",
    "qt_format",
    "qt_parse",
    "qt_poly",
    "Q",
    "T",
    "M",
    "ZERO",
    "ONE",
]

_CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "lex")
_ONE_P = _CTX.constant(1)
_ZERO_P = _CTX.constant(0)


def _least_coeff(p):
    # lex terms are stored in descending order; the last one is the least monomial
    return p.coeffs()[-1]


class QtRat:
    """Element of the field Q(q,t) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        n = _lift_poly_or_fraction(num)
        d = _lift_poly_or_fraction(den)
        # each lift returns (numerator poly, denominator int)
        np_, nd = n
        dp, dd = d
        if dp.is_zero():
            raise ZeroDivisionError("QtRat with zero denominator")
        self._set(*_normalize(np_ * dd, dp * nd))

    def _set(self, num, den):
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms: dict, den_terms: dict | None = None) -> "QtRat":
        """Build from ``{(i, j): coeff}`` maps with rational coefficients."""
        num = _poly_from_rational_terms(terms)
        den = _poly_from_rational_terms(den_terms) if den_terms is not None else (_ONE_P, 1)
        return cls._raw(*_normalize(num[0] * den[1], den[0] * num[1]))

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b == d:
            if b.is_one():
                return QtRat._raw(a + c, b)
            return QtRat._raw(*_normalize(a + c, b))
        g = b.gcd(d)
        if g.is_one():
            return QtRat._raw(a * d + c * b, b * d)
        b1 = b / g
        d1 = d / g
        num = a * d1 + c * b1
        den = b1 * d
        g2 = num.gcd(g)
        if not g2.is_one():
            num = num / g2
            den = den / g2
        return QtRat._raw(*_fix_sign(num, den))

    __radd__ = __add__

    def __neg__(self):
        return QtRat._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return ZERO
        if b.is_one() and d.is_one():
            return QtRat._raw(a * c, b)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a = a / g1
            d = d / g1
        if not g2.is_one():
            c = c / g2
            b = b / g2
        return QtRat._raw(*_fix_sign(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self) -> "QtRat":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        return QtRat._raw(*_fix_sign(self.den, self.num))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QtRat._raw(self.num**k, self.den**k)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num.terms()), tuple(self.den.terms())))
        return self._hash

    # -- transformations ----------------------------------------------------
    def twist(self, n: int) -> "QtRat":
        """Substitute q -> q^n and t -> t^n."""
        if n < 1:
            raise ValueError(f"power twist needs n >= 1, got {n}")
        if n == 1 or self.is_constant():
            return self
        return QtRat._raw(*_normalize(self.num.inflate([n, n]), self.den.inflate([n, n])))

    def swap_qt(self) -> "QtRat":
        """Exchange the roles of q and t."""
        return QtRat._raw(*_normalize(_swap(self.num), _swap(self.den)))

    def evaluate(self, q, t) -> Fraction:
        num = _eval_poly(self.num, q, t)
        den = _eval_poly(self.den, q, t)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return num / den

    def num_terms(self) -> dict:
        return {tuple(e): int(c) for e, c in self.num.terms()}

    def den_terms(self) -> dict:
        return {tuple(e): int(c) for e, c in self.den.terms()}

    def total_size(self) -> int:
        return len(self.num) + len(self.den)

    def __repr__(self):
        return f"QtRat({qt_format(self)!r})"

    def __str__(self):
        return qt_format(self)


def _swap(p):
    return _CTX.from_dict({(e[1], e[0]): c for e, c in p.terms()})


def _eval_poly(p, q, t) -> Fraction:
    q = Fraction(q)
    t = Fraction(t)
    total = Fraction(0)
    for (i, j), c in p.terms():
        total += int(c) * q ** int(i) * t ** int(j)
    return total


def _fix_sign(num, den):
    if _least_coeff(den) < 0:
        return -num, -den
    return num, den


def _normalize(num, den):
    if num.is_zero():
        return _ZERO_P, _ONE_P
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    return _fix_sign(num, den)


def _poly_from_rational_terms(terms: dict):
    dens = [Fraction(c).denominator for c in terms.values()]
    lcm = 1
    for d in dens:
        lcm = lcm * d // _gcd_int(lcm, d)
    poly = _CTX.from_dict({tuple(e): int(Fraction(c) * lcm) for e, c in terms.items() if c != 0})
    return poly, lcm


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _lift_poly_or_fraction(x):
    """Return (integer polynomial, positive integer) with value poly / int."""
    if isinstance(x, QtRat):
        if not x.den.is_constant():
            raise TypeError("nested QtRat construction needs a polynomial")
        d = int(x.den.coeffs()[0]) if not x.den.is_one() else 1
        if d < 0:
            return -x.num, -d
        return x.num, d
    if isinstance(x, flint.fmpz_mpoly):
        return x, 1
    if isinstance(x, int):
        return _CTX.constant(x), 1
    if isinstance(x, Rational):
        f = Fraction(x)
        return _CTX.constant(f.numerator), f.denominator
    if isinstance(x, str):
        return _lift_poly_or_fraction(qt_parse(x))
    raise TypeError(f"cannot build a QtRat from {type(x).__name__}")


_INT_CACHE: dict = {}


def _coerce(x):
    if isinstance(x, QtRat):
        return x
    if isinstance(x, int):
        r = _INT_CACHE.get(x)
        if r is None:
            r = QtRat._raw(_CTX.constant(x), _ONE_P)
            if -64 <= x <= 64:
                _INT_CACHE[x] = r
        return r
    if isinstance(x, Rational):
        f = Fraction(x)
        return QtRat._raw(_CTX.constant(f.numerator), _CTX.constant(f.denominator))
    return NotImplemented


def qt_poly(terms: dict) -> QtRat:
    """Polynomial in q, t from ``{(q_exp, t_exp): rational}``."""
    return QtRat.from_terms(terms)


def power_twist(r: QtRat, n: int) -> QtRat:
    """The plethystic n-th power substitution q -> q^n, t -> t^n."""
    return _coerce(r).twist(n)


ZERO = QtRat._raw(_ZERO_P, _ONE_P)
ONE = QtRat._raw(_ONE_P, _ONE_P)
Q = QtRat._raw(_CTX.gen(0), _ONE_P)
T = QtRat._raw(_CTX.gen(1), _ONE_P)
M = (1 - Q) * (1 - T)


# -- text grammar ------------------------------------------------------------

def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("q" if i == 1 else f"q^{i}")
    if j:
        parts.append("t" if j == 1 else f"t^{j}")
    return "*".join(parts)


def _format_poly(p) -> str:
    if p.is_zero():
        return "0"
    out = []
    # graded: total degree ascending, then higher q-power first (1 + q + t)
    terms = sorted(p.terms(), key=lambda tc: (tc[0][0] + tc[0][1], -tc[0][0]))
    for (i, j), c in terms:
        c = int(c)
        mono = _format_monomial(i, j)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


def qt_format(r) -> str:
    """Canonical text: graded monomial order, ``(num)/(den)`` when den != 1."""
    r = _coerce(r)
    if r.den.is_one():
        return _format_poly(r.num)
    return f"({_format_poly(r.num)})/({_format_poly(r.den)})"


class QtParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos
        self.text = text


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg):
        where = "end of input" if self.pos >= len(self.text) else repr(self.text[self.pos])
        raise QtParseError(f"{msg} (found {where})", self.pos, self.text)

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self) -> QtRat:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> QtRat:
        value = self.power()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            rhs = self.power()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    self.error("division by zero")
                value = value / rhs
        return value

    def power(self) -> QtRat:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            base = base ** self.integer()
        return base

    def atom(self) -> QtRat:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch == "q":
            self.pos += 1
            return Q
        if ch == "t":
            self.pos += 1
            return T
        if ch.isdigit():
            return _coerce(self.integer())
        if ch == "-":
            # a single leading minus on a factor, as in "2*-q"
            self.pos += 1
            return -self.power()
        self.error("expected a number, 'q', 't' or '('")


def qt_parse(text: str) -> QtRat:
    """Parse the canonical scalar grammar (and the obvious superset)."""
    p = _Parser(text)
    if not p.peek():
        p.error("empty expression")
    value = p.expr()
    if p.peek():
        p.error("unexpected trailing input")
    return value


# -- truncated polynomials in u, v ------------------------------------------

class UVPoly:
    """Polynomial in u, v over Q(q,t), truncated at exponent ``order`` in each variable."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: dict | None = None, order: int = 0):
        self.order = order
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("u, v exponents must be nonnegative")
            if i > order or j > order:
                continue
            c = _coerce(c)
            if not c.is_zero():
                clean[(i, j)] = c
        self.terms = clean

    @classmethod
    def const(cls, c, order: int) -> "UVPoly":
        return cls({(0, 0): c}, order)

    @classmethod
    def monomial(cls, i: int, j: int, c=1, order: int = 0) -> "UVPoly":
        return cls({(i, j): c}, order)

    def coefficient(self, i: int, j: int) -> QtRat:
        return self.terms.get((i, j), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _other(self, other):
        if isinstance(other, UVPoly):
            return other
        c = _coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return UVPoly.const(c, self.order)

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return UVPoly(out, order)

    __radd__ = __add__

    def __neg__(self):
        return UVPoly({k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, UVPoly):
            c = _coerce(other)
            if c is NotImplemented:
                return NotImplemented
            return UVPoly({k: v * c for k, v in self.terms.items()}, self.order)
        order = min(self.order, other.order)
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                i, j = i1 + i2, j1 + j2
                if i > order or j > order:
                    continue
                p = c1 * c2
                out[(i, j)] = out[(i, j)] + p if (i, j) in out else p
        return UVPoly(out, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def scalar(self) -> QtRat:
        """The value of a constant polynomial; raises if u or v occur."""
        if any(k != (0, 0) for k in self.terms):
            raise ValueError("UVPoly is not constant")
        return self.coefficient(0, 0)

    def format(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("u" if i == 1 else f"u^{i}"),
                    "" if j == 0 else ("v" if j == 1 else f"v^{j}"),
                ) if s
            )
            if not mono:
                pieces.append(f"({qt_format(c)})")
            elif c.is_one():
                pieces.append(mono)
            else:
                pieces.append(f"({qt_format(c)})*{mono}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"UVPoly({self.format()!r}, order={self.order})"
