"""Exact Gaussian rationals: elements of Q(i).

A value is stored as ``(a + b*i) / d`` with integers a, b and d > 0, reduced so
that gcd(a, b, d) == 1. That keeps multiplication to a handful of integer
products plus one gcd, which matters for the exhaustive campaigns.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussRational", "gq", "ZERO", "ONE", "I_UNIT"]


class GaussRational:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re, im = Fraction(re), Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a, b, d):
        z = object.__new__(cls)
        z._set(a, b, d)
        return z

    # -- accessors -------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._d == 1

    def conjugate(self) -> "GaussRational":
        return GaussRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._d == o._d:
            return GaussRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, e = self._a, self._b, o._a, o._b
        return GaussRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        # 1/((a+bi)/d) = d(a-bi)/(a^2+b^2)
        return GaussRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    # -- text ------------------------------------------------------------
    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        if re_ == 0:
            return f"{im_}i"
        sign = "+" if im_ > 0 else "-"
        return f"{re_}{sign}{abs(im_)}i"

    def __repr__(self):
        return f"GaussRational('{self}')"

    @classmethod
    def parse(cls, text: str) -> "GaussRational":
        """Read the wire form: ``p``, ``p/q``, ``r/si``, ``p/q+r/si``, ``i``."""
        return parse(text)


def _coerce(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Rational)):
        return GaussRational(x)
    if isinstance(x, complex):
        return GaussRational(Fraction(x.real), Fraction(x.imag))
    return NotImplemented


_RAT = r"[+-]?\d+(?:/\d+)?"
_FULL = re.compile(rf"^(?P<re>{_RAT})(?P<im>[+-](?:\d+(?:/\d+)?)?)i$")
_IMAG = re.compile(r"^(?P<im>[+-]?(?:\d+(?:/\d+)?)?)i$")
_REAL = re.compile(rf"^{_RAT}$")


def _imag_part(tok: str) -> Fraction:
    if tok in ("", "+"):
        return Fraction(1)
    if tok == "-":
        return Fraction(-1)
    return Fraction(tok)


def parse(text: str) -> GaussRational:
    s = str(text).strip().replace(" ", "")
    if _REAL.match(s):
        return GaussRational(Fraction(s))
    m = _FULL.match(s)
    if m:
        return GaussRational(Fraction(m["re"]), _imag_part(m["im"]))
    m = _IMAG.match(s)
    if m:
        return GaussRational(0, _imag_part(m["im"]))
    raise ValueError(f"not a Gaussian rational: {text!r}")


def gq(x) -> GaussRational:
    """Coerce ints, Fractions, complex literals or wire strings."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, str):
        return parse(x)
    z = _coerce(x)
    if z is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to GaussRational")
    return z


ZERO = GaussRational(0)
ONE = GaussRational(1)
I_UNIT = GaussRational(0, 1)
