"""Exact coefficient domains.

Everything in this package computes over one of three scalar domains:

* the rationals (``fractions.Fraction``),
* one quadratic extension Q(sqrt(d)) with d a squarefree non-square integer,
* the rational function field Q(x) in a single variable.

Towers (e.g. a quadratic extension of Q(x)) are deliberately unsupported:
operations that would need one raise :class:`~segrecusp.errors.TowerUnsupported`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import FieldError, TowerUnsupported

Rational = Fraction


def parse_rational(value) -> Fraction:
    """Parse an exact rational from an int, Fraction or a ``"p/q"`` string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise FieldError(f"cannot parse rational from {value!r}")


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fraction_sqrt(q: Fraction):
    """Exact square root of a rational, or None if q is not a square."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def squarefree_split(q: Fraction):
    """Write q = r**2 * d with d a squarefree integer; returns (d, r).

    q must be nonzero.  Uses integer factorization, so it is intended for
    the moderate-size discriminants that arise from small-parameter
    instances.
    """
    if q == 0:
        raise FieldError("cannot squarefree-split zero")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    d = sign
    root = 1
    for p, e in sympy.factorint(abs(n)).items():
        p, e = int(p), int(e)
        if e % 2:
            d *= p
        root *= p ** (e // 2)
    return d, Fraction(root, q.denominator)


# --------------------------------------------------------------------------
# dense univariate polynomials over Q, represented as tuples of Fractions in
# ascending degree order with no trailing zeros; used by RatFuncElem


def _ptrim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def pconst(c) -> tuple:
    c = Fraction(c)
    return (c,) if c else ()


def pdeg(p) -> int:
    return len(p) - 1  # zero polynomial gets degree -1


def padd(a, b):
    n = max(len(a), len(b))
    return _ptrim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n))


def pneg(a):
    return tuple(-c for c in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ptrim(out)


def pscale(a, c):
    c = Fraction(c)
    if not c:
        return ()
    return tuple(x * c for x in a)


def pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv
        if c:
            q[k] = c
            for j, cb in enumerate(b):
                r[k + j] -= c * cb
    return _ptrim(q), _ptrim(r)


def pderiv(a):
    return _ptrim(i * c for i, c in enumerate(a) if i >= 1)


def peval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _int_primitive(p):
    """Scale a rational polynomial to a primitive integer one (sign-normalized)."""
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = math.gcd(*(abs(i) for i in ints))
    if ints[-1] < 0:
        g = -g
    return [i // g for i in ints]


def _int_prem(A, B):
    """Scaled integer remainder of A by B (exact, fraction-free)."""
    R = list(A)
    lb = B[-1]
    while len(R) >= len(B):
        shift = len(R) - len(B)
        lead = R[-1]
        g = math.gcd(abs(lead), abs(lb))
        m_r, m_b = lb // g, lead // g
        R = [c * m_r for c in R]
        for j, cb in enumerate(B):
            R[shift + j] -= m_b * cb
        while R and R[-1] == 0:
            R.pop()
        if not R:
            break
    return R


def pgcd(a, b):
    """Monic gcd via the primitive pseudo-remainder sequence over Z."""
    if not a:
        return pmonic(b)
    if not b:
        return pmonic(a)
    A, B = _int_primitive(a), _int_primitive(b)
    while B:
        if len(A) < len(B):
            A, B = B, A
            continue
        R = _int_prem(A, B)
        A, B = B, (_int_primitive(R) if R else [])
    return pmonic(tuple(Fraction(c) for c in A))


def pmonic(a):
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def pstr(p, var="x"):
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            parts.append(fmt_rational(c))
        else:
            head = "" if c == 1 else ("-" if c == -1 else fmt_rational(c) + "*")
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(parts).replace("+ -", "- ")


# --------------------------------------------------------------------------
# elements of Q(sqrt(d))


@dataclass(frozen=True)
class QuadExtElem:
    """``a + b*sqrt(d)`` with rational a, b and squarefree integer d."""

    a: Fraction
    b: Fraction
    d: int

    def _lift(self, other):
        if isinstance(other, QuadExtElem):
            if other.d != self.d:
                raise TowerUnsupported(
                    f"mixing sqrt({self.d}) with sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtElem(Fraction(other), Fraction(0), self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.a * o.a + self.b * o.b * self.d,
                           self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.b * self.b * self.d
        if n == 0:
            raise ZeroDivisionError("zero element of quadratic extension")
        return QuadExtElem(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = QuadExtElem(Fraction(1), Fraction(0), self.d)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExtElem):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a or self.b)

    def conjugate(self):
        return QuadExtElem(self.a, -self.b, self.d)

    def __repr__(self):
        if not self.b:
            return fmt_rational(self.a)
        s = "" if not self.a else fmt_rational(self.a) + ("+" if self.b > 0 else "")
        return f"{s}{fmt_rational(self.b)}*sqrt({self.d})"


# --------------------------------------------------------------------------
# elements of Q(x)


def _monicize(num, den):
    """Scale a reduced fraction pair so the denominator is monic."""
    if not num:
        return (), (Fraction(1),)
    lead = den[-1]
    if lead == 1:
        return num, den
    return tuple(c / lead for c in num), tuple(c / lead for c in den)


@dataclass(frozen=True)
class RatFuncElem:
    """Reduced fraction of polynomials over Q; denominator monic and nonzero."""

    num: tuple
    den: tuple

    @staticmethod
    def make(num, den=(Fraction(1),)):
        num, den = _ptrim(Fraction(c) for c in num), _ptrim(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        if not num:
            return RatFuncElem((), (Fraction(1),))
        g = pgcd(num, den)
        if pdeg(g) > 0:
            num, _ = pdivmod(num, g)
            den, _ = pdivmod(den, g)
        lead = den[-1]
        return RatFuncElem(tuple(c / lead for c in num), tuple(c / lead for c in den))

    def _lift(self, other):
        if isinstance(other, RatFuncElem):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFuncElem(pconst(other), (Fraction(1),))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.num:
            return o
        if not o.num:
            return self
        # Henrici: with both operands reduced, only small gcds are needed
        g0 = pgcd(self.den, o.den)
        if pdeg(g0) == 0:
            num = padd(pmul(self.num, o.den), pmul(o.num, self.den))
            den = pmul(self.den, o.den)
            return RatFuncElem(*_monicize(num, den))
        b1, _ = pdivmod(self.den, g0)
        d1, _ = pdivmod(o.den, g0)
        t = padd(pmul(self.num, d1), pmul(o.num, b1))
        if not t:
            return RatFuncElem((), (Fraction(1),))
        g1 = pgcd(t, g0)
        if pdeg(g1) > 0:
            t, _ = pdivmod(t, g1)
            g0, _ = pdivmod(g0, g1)
        den = pmul(pmul(b1, d1), g0)
        return RatFuncElem(*_monicize(t, den))

    __radd__ = __add__

    def __neg__(self):
        return RatFuncElem(pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFuncElem((), (Fraction(1),))
        a, b = self.num, self.den
        c, d = o.num, o.den
        g1 = pgcd(a, d)
        if pdeg(g1) > 0:
            a, _ = pdivmod(a, g1)
            d, _ = pdivmod(d, g1)
        g2 = pgcd(c, b)
        if pdeg(g2) > 0:
            c, _ = pdivmod(c, g2)
            b, _ = pdivmod(b, g2)
        return RatFuncElem(*_monicize(pmul(a, c), pmul(b, d)))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("zero rational function")
        return RatFuncElem.make(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = RatFuncElem(pconst(1), (Fraction(1),))
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.den == (Fraction(1),) and (
                self.num == pconst(other))
        if isinstance(other, RatFuncElem):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        if self.den == (Fraction(1),) and len(self.num) <= 1:
            return hash(self.num[0] if self.num else Fraction(0))
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def derivative(self):
        n = psub(pmul(pderiv(self.num), self.den), pmul(self.num, pderiv(self.den)))
        return RatFuncElem.make(n, pmul(self.den, self.den))

    def __repr__(self):
        if self.den == (Fraction(1),):
            return pstr(self.num)
        return f"({pstr(self.num)})/({pstr(self.den)})"


# --------------------------------------------------------------------------
# field descriptors


class Rationals:
    kind = "rationals"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, QuadExtElem):
            if value.b:
                raise FieldError("irrational value coerced into Q")
            return value.a
        return parse_rational(value)

    def derivative(self, e):
        return Fraction(0)

    def fmt(self, e) -> str:
        return fmt_rational(e)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class QuadraticExtension:
    """Q(sqrt(d)) for a fixed squarefree non-square integer d."""

    kind = "quadratic"

    def __init__(self, d: int):
        if d in (0, 1) or not isinstance(d, int):
            raise FieldError(f"invalid quadratic extension discriminant {d}")
        if d > 0 and math.isqrt(d) ** 2 == d:
            raise FieldError(f"{d} is a perfect square; extension is trivial")
        self.d = d
        self.zero = QuadExtElem(Fraction(0), Fraction(0), d)
        self.one = QuadExtElem(Fraction(1), Fraction(0), d)
        self.sqrt_gen = QuadExtElem(Fraction(0), Fraction(1), d)

    def coerce(self, value):
        if isinstance(value, QuadExtElem):
            if value.d != self.d:
                raise TowerUnsupported(
                    f"element of Q(sqrt({value.d})) in Q(sqrt({self.d}))")
            return value
        return QuadExtElem(parse_rational(value), Fraction(0), self.d)

    def derivative(self, e):
        return self.zero

    def fmt(self, e) -> str:
        return repr(self.coerce(e))

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.d == self.d

    def __hash__(self):
        return hash(("quadratic", self.d))

    def __repr__(self):
        return f"QQ(sqrt({self.d}))"


class RationalFunctions:
    """Q(x): reduced fractions of rational-coefficient polynomials."""

    kind = "ratfunc"

    def __init__(self, var: str = "x"):
        self.var = var
        self.zero = RatFuncElem((), (Fraction(1),))
        self.one = RatFuncElem((Fraction(1),), (Fraction(1),))
        self.gen = RatFuncElem((Fraction(0), Fraction(1)), (Fraction(1),))

    def coerce(self, value):
        if isinstance(value, RatFuncElem):
            return value
        if isinstance(value, QuadExtElem):
            raise TowerUnsupported("quadratic irrationals inside Q(x)")
        return RatFuncElem(pconst(parse_rational(value)), (Fraction(1),))

    def from_poly(self, coeffs):
        return RatFuncElem.make(coeffs)

    def derivative(self, e):
        return self.coerce(e).derivative()

    def fmt(self, e) -> str:
        return repr(self.coerce(e))

    def __eq__(self, other):
        return isinstance(other, RationalFunctions) and other.var == self.var

    def __hash__(self):
        return hash(("ratfunc", self.var))

    def __repr__(self):
        return f"QQ({self.var})"


def quadext_sqrt(elem: QuadExtElem):
    """Square root of a + b*sqrt(d) inside the same extension, or None."""
    a, b, d = elem.a, elem.b, elem.d
    if not b:
        r = fraction_sqrt(a)
        if r is not None:
            return QuadExtElem(r, Fraction(0), d)
        if a != 0:
            r = fraction_sqrt(a / d)
            if r is not None:
                return QuadExtElem(Fraction(0), r, d)
        return None
    n = fraction_sqrt(a * a - b * b * d)
    if n is None:
        return None
    for sign in (1, -1):
        p2 = (a + sign * n) / 2
        p = fraction_sqrt(p2) if p2 >= 0 else None
        if p:
            return QuadExtElem(p, b / (2 * p), d)
    return None


def field_with_sqrt(disc: Fraction):
    """Smallest supported field containing sqrt(disc), plus that square root.

    Returns (QQ, r) when disc is a rational square, else
    (QuadraticExtension(d), r*sqrt_gen) with disc = r**2 * d.
    """
    disc = parse_rational(disc)
    if disc == 0:
        return QQ, Fraction(0)
    r = fraction_sqrt(disc)
    if r is not None:
        return QQ, r
    d, r = squarefree_split(disc)
    ext = QuadraticExtension(d)
    return ext, r * ext.sqrt_gen
