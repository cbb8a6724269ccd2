"""Exact Gaussian rationals, i.e. elements of Q(i)."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GaussRat:
    """``re + im*i`` with arbitrary precision rational parts.

    Instances are immutable.  Plain ints and Fractions are accepted wherever a
    GaussRat is expected.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRat):
            if im:
                raise TypeError("GaussRat real part must be rational")
            re, im = re.re, re.im
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    @classmethod
    def _make(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    def __reduce__(self):
        return (GaussRat, (self.re, self.im))

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self):
        return not self.im

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return GaussRat._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussRat._make(a * c, _ZERO)
            return GaussRat._make(a * c, a * d)
        if not d:
            return GaussRat._make(a * c, b * c)
        return GaussRat._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("GaussRat division by zero")
        if not self.im:
            return GaussRat._make(1 / self.re, _ZERO)
        n = self.re * self.re + self.im * self.im
        return GaussRat._make(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self):
        if not self.im:
            return self
        return GaussRat._make(self.re, -self.im)

    # -- rendering --------------------------------------------------------
    def __str__(self):
        """Exact rendering such as ``3/2``, ``0``, ``1+2i``, ``-i``."""
        if not self.im:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}i"
        if not self.re:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{self.re}{sign}{imag}"

    def __repr__(self):
        return f"GaussRat({self})"


def _as_fraction(value):
    if type(value) is Fraction:
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected a rational number, got {type(value).__name__}")


def _coerce(value):
    if isinstance(value, GaussRat):
        return value
    if isinstance(value, (int, Rational)):
        return GaussRat._make(_as_fraction(value), _ZERO)
    return None


def gauss(value):
    """Coerce ``value`` (int, Fraction, GaussRat) to a GaussRat."""
    out = _coerce(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return out


ZERO = GaussRat._make(_ZERO, _ZERO)
ONE = GaussRat._make(_ONE, _ZERO)
I = GaussRat._make(_ZERO, _ONE)
