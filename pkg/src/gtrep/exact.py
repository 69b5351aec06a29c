"""Exact scalar arithmetic for the representation builders.

Everything runs over fractions.Fraction. HalfInt keeps pattern entries as
doubled integers so they stay hashable and cheap to shift. RationalFunction
is a reduced ratio of two dense one-variable polynomials; evaluating it at a
point where the (reduced) denominator vanishes raises PoleError, which is
exactly the "no finite limit" case.
"""
from __future__ import annotations

import re
from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class PoleError(ArithmeticError):
    """No finite value at the requested point."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def parse_rational(s):
    """Parse "p/q" (q omitted when 1) into a Fraction."""
    s = s.strip()
    if not _RAT_RE.match(s):
        raise ValueError("bad rational literal: %r" % (s,))
    return Fraction(s)


def format_rational(x):
    """Inverse of parse_rational; Fraction prints reduced, /1 omitted."""
    return str(Fraction(x))


class HalfInt:
    """An element of (1/2)Z, stored as the doubled integer."""

    __slots__ = ("d",)

    def __init__(self, doubled):
        self.d = int(doubled)

    @staticmethod
    def whole(k):
        return HalfInt(2 * k)

    @staticmethod
    def from_fraction(x):
        x = Fraction(x)
        if x.denominator not in (1, 2):
            raise ValueError("not a half-integer: %s" % (x,))
        return HalfInt(x.numerator * (2 // x.denominator))

    @property
    def is_integer(self):
        return self.d % 2 == 0

    def as_fraction(self):
        return Fraction(self.d, 2)

    def _dbl(self, other):
        # doubled value of the other operand, or None
        if isinstance(other, HalfInt):
            return other.d
        if isinstance(other, int):
            return 2 * other
        if isinstance(other, Fraction):
            if other.denominator in (1, 2):
                return other.numerator * (2 // other.denominator)
        return None

    def __add__(self, other):
        o = self._dbl(other)
        if o is None:
            return NotImplemented
        return HalfInt(self.d + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._dbl(other)
        if o is None:
            return NotImplemented
        return HalfInt(self.d - o)

    def __rsub__(self, other):
        o = self._dbl(other)
        if o is None:
            return NotImplemented
        return HalfInt(o - self.d)

    def __neg__(self):
        return HalfInt(-self.d)

    def __eq__(self, other):
        o = self._dbl(other)
        return NotImplemented if o is None else self.d == o

    def __lt__(self, other):
        o = self._dbl(other)
        return NotImplemented if o is None else self.d < o

    def __le__(self, other):
        o = self._dbl(other)
        return NotImplemented if o is None else self.d <= o

    def __gt__(self, other):
        o = self._dbl(other)
        return NotImplemented if o is None else self.d > o

    def __ge__(self, other):
        o = self._dbl(other)
        return NotImplemented if o is None else self.d >= o

    def __hash__(self):
        return hash(self.as_fraction())

    def __str__(self):
        return format_rational(self.as_fraction())

    def __repr__(self):
        return "HalfInt(%s)" % (self,)


class UniPoly:
    """Dense polynomial in one variable over Fraction, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @staticmethod
    def const(v):
        return UniPoly((Fraction(v),))

    @staticmethod
    def var():
        return UniPoly((0, 1))

    @property
    def degree(self):
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __neg__(self):
        return UniPoly(tuple(-x for x in self.c))

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.c), len(o.c))
        a = self.c + (F0,) * (n - len(self.c))
        b = o.c + (F0,) * (n - len(o.c))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return UniPoly()
        out = [F0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        x = Fraction(x)
        acc = F0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __divmod__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q = [F0] * max(len(self.c) - len(other.c) + 1, 0)
        r = list(self.c)
        dlead = other.c[-1]
        dn = len(other.c)
        while len(r) >= dn:
            f = r[-1] / dlead
            k = len(r) - dn
            q[k] = f
            for i, b in enumerate(other.c):
                r[k + i] -= f * b
            # leading term cancels exactly; drop it and any new zeros
            while r and not r[-1]:
                r.pop()
        return UniPoly(tuple(q)), UniPoly(tuple(r))

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self:
            return self
        inv = 1 / self.c[-1]
        return UniPoly(tuple(x * inv for x in self.c))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            if i == 0:
                parts.append(format_rational(a))
            elif i == 1:
                parts.append("%s*t" % format_rational(a))
            else:
                parts.append("%s*t^%d" % (format_rational(a), i))
        return " + ".join(parts)


def _poly_gcd(a, b):
    while b:
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Reduced num/den pair; den is monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = UniPoly.const(num)
        if den is None:
            den = UniPoly.const(1)
        elif isinstance(den, (int, Fraction)):
            den = UniPoly.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator polynomial")
        if not num:
            self.num = UniPoly()
            self.den = UniPoly.const(1)
            return
        g = _poly_gcd(num, den)
        if g.degree > 0:
            num = divmod(num, g)[0]
            den = divmod(den, g)[0]
        lead = den.c[-1]
        if lead != 1:
            inv = 1 / lead
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def const(v):
        return RationalFunction(UniPoly.const(v))

    @staticmethod
    def var():
        return RationalFunction(UniPoly.var())

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(other)
        return None

    def __neg__(self):
        r = RationalFunction.__new__(RationalFunction)
        r.num = -self.num
        r.den = self.den
        return r

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def value_at(self, x0):
        x0 = Fraction(x0)
        dv = self.den(x0)
        if not dv:
            raise PoleError("pole at %s" % (x0,), witness=str(self))
        return self.num(x0) / dv

    def __str__(self):
        if self.den.degree == 0:
            return "(%s)" % (self.num,)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalFunction<%s>" % (self,)


def rf_limit_at(f, x0):
    """Exact limit of f at x0.

    Plain scalars pass through. For a RationalFunction the stored form is
    already fully cancelled, so the limit is just evaluation; a vanishing
    denominator there means a genuine pole and raises PoleError.
    """
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    if isinstance(f, HalfInt):
        return f.as_fraction()
    return f.value_at(x0)
