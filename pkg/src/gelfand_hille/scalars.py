"""Exact scalars: integers, rationals and Gaussian rationals over Q(i).

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`.
Internally a rational part whose denominator is 1 is kept as a plain ``int``
so that integer-valued matrices stay on the fast integer path.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "GaussianRational",
    "ZERO",
    "ONE",
    "I",
    "abs1",
    "binomial",
    "falling_binomial",
    "as_gaussian",
    "format_rational",
    "parse_rational",
]

RationalLike = Union[int, Fraction]


def _norm(q):
    # Fraction with denominator 1 collapses to int
    if type(q) is int:
        return q
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else q
    if isinstance(q, Rational):
        return _norm(Fraction(q.numerator, q.denominator))
    raise TypeError(f"not an exact rational: {q!r}")


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts. Immutable."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self._re = _norm(re)
        self._im = _norm(im)

    @classmethod
    def _raw(cls, re, im):
        z = object.__new__(cls)
        z._re = re
        z._im = im
        return z

    @property
    def re(self) -> Fraction:
        return Fraction(self._re)

    @property
    def im(self) -> Fraction:
        return Fraction(self._im)

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self._re, _neg(self._im))

    def norm_squared(self) -> Fraction:
        """``z * conj(z) = re**2 + im**2`` as an exact rational."""
        return Fraction(self._re * self._re + self._im * self._im)

    def __bool__(self):
        return self._re != 0 or self._im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __neg__(self):
        return GaussianRational._raw(_neg(self._re), _neg(self._im))

    def __pos__(self):
        return self

    def __add__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return GaussianRational._raw(
            _norm(self._re + other._re), _norm(self._im + other._im)
        )

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return GaussianRational._raw(
            _norm(self._re - other._re), _norm(self._im - other._im)
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        if b == 0:
            if d == 0:
                return GaussianRational._raw(_norm(a * c), 0)
            return GaussianRational._raw(_norm(a * c), _norm(a * d))
        if d == 0:
            return GaussianRational._raw(_norm(a * c), _norm(b * c))
        return GaussianRational._raw(_norm(a * c - b * d), _norm(a * d + b * c))

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        if not self:
            raise ZeroDivisionError("GaussianRational division by zero")
        n = Fraction(self._re * self._re + self._im * self._im)
        return GaussianRational(self._re / n, -self._im / n)

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if other._im == 0:
            if other._re == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            c = other._re
            return GaussianRational(Fraction(self._re) / c, Fraction(self._im) / c)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __repr__(self):
        if self._im == 0:
            return f"GaussianRational({format_rational(self._re)})"
        return f"GaussianRational({format_rational(self._re)}, {format_rational(self._im)})"

    def __str__(self):
        re, im = self._re, self._im
        if im == 0:
            return format_rational(re)
        if re == 0:
            return f"{format_rational(im)}i"
        sign = "-" if im < 0 else "+"
        return f"{format_rational(re)}{sign}{format_rational(abs(im))}i"

    def to_json(self) -> dict:
        return {"re": format_rational(self._re), "im": format_rational(self._im)}

    @classmethod
    def from_json(cls, obj) -> GaussianRational:
        """Accept ``{"re": .., "im": ..}``, a rational string, or an int."""
        if isinstance(obj, dict):
            return cls(parse_rational(obj.get("re", 0)), parse_rational(obj.get("im", 0)))
        return cls(parse_rational(obj))


def _neg(q):
    return -q


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GaussianRational._raw(_norm(x), 0)
    return None


def as_gaussian(x) -> GaussianRational:
    z = _coerce(x)
    if z is None:
        raise TypeError(f"cannot convert {x!r} to GaussianRational")
    return z


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def abs1(z: GaussianRational) -> Fraction:
    """``|re(z)| + |im(z)|``, the exact norm surrogate for a single entry."""
    z = as_gaussian(z)
    return Fraction(abs(z._re) + abs(z._im))


def falling_binomial(n: int, j: int) -> int:
    """``n(n-1)...(n-j+1)/j!`` for any integer ``n`` and ``j >= 0``.

    This is the polynomial extension of C(n, j); it is 0 for 0 <= n < j.
    """
    if j < 0:
        raise ValueError("binomial: j must be nonnegative")
    num = 1
    den = 1
    for t in range(j):
        num *= n - t
        den *= t + 1
    return num // den


def binomial(k: int, j: int) -> int:
    """C(k, j) by the falling-factorial product; 0 when j > k."""
    if k < 0 or j < 0:
        raise ValueError(f"binomial: arguments must be nonnegative, got ({k}, {j})")
    return falling_binomial(k, j)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> RationalLike:
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return s
    if isinstance(s, str):
        s = s.strip()
        if not s:
            raise ValueError("empty rational")
        if "." in s or "e" in s.lower():
            raise ValueError(f"decimal notation not accepted for exact rationals: {s!r}")
        return _norm(Fraction(s))
    raise ValueError(f"not a rational: {s!r}")
