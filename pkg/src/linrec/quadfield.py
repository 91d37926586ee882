"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Elements are stored as ``(p + q*sqrt(d)) / den`` with one shared positive
denominator and ``gcd(p, q, den) == 1``.  The radicand ``d`` travels with every
value and must match across binary operations; it is kept exactly as given
(``sqrt(32)`` is never rewritten as ``4*sqrt(2)``).

Plain ``int`` and ``fractions.Fraction`` operands are promoted to the radicand
of the other operand, so ``x + 1`` and ``Fraction(1, 2) * x`` work as expected.
"""

from __future__ import annotations

import math
import re
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

from linrec.errors import RadicandMismatch

__all__ = [
    "QuadRat",
    "qr_add",
    "qr_mul",
    "qr_pow",
    "qr_conj",
    "qr_is_rational",
    "decimal_upper_bound",
    "is_square",
]

Number = Union[int, Fraction, "QuadRat"]

_DISPLAY_RE = re.compile(
    r"^\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(\d+)$"
)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _canonical(p: int, q: int, den: int) -> tuple[int, int, int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        p, q, den = -p, -q, -den
    g = math.gcd(p, q, den)
    if g != 1:
        p, q, den = p // g, q // g, den // g
    return p, q, den


class QuadRat:
    """An element ``(p + q*sqrt(d)) / den`` of Q(sqrt(d)).

    Instances are immutable and hashable.  Rational-valued elements compare and
    hash equal to the matching ``Fraction``.

    Args:
        p: rational-part numerator.
        q: numerator of the ``sqrt(d)`` coefficient.
        den: shared denominator, nonzero (sign is normalized away).
        d: positive non-square radicand.
    """

    __slots__ = ("p", "q", "den", "d")

    def __init__(self, p: int, q: int, den: int, d: int) -> None:
        for name, v in (("p", p), ("q", q), ("den", den), ("d", d)):
            if not isinstance(v, int):
                raise TypeError(f"{name} must be an int, got {type(v).__name__}")
        if d <= 0 or is_square(d):
            raise ValueError(f"radicand must be a positive non-square, got {d}")
        self._set(*_canonical(p, q, den), d)

    def _set(self, p: int, q: int, den: int, d: int) -> None:
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "d", d)

    @classmethod
    def _make(cls, p: int, q: int, den: int, d: int) -> QuadRat:
        # d already validated by an existing operand
        obj = object.__new__(cls)
        obj._set(*_canonical(p, q, den), d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    def __reduce__(self):
        return (QuadRat, (self.p, self.q, self.den, self.d))

    # -- constructors --------------------------------------------------------

    @classmethod
    def rational(cls, value: int | Fraction, d: int) -> QuadRat:
        """Embed a rational number into Q(sqrt(d))."""
        value = Fraction(value)
        return cls(value.numerator, 0, value.denominator, d)

    @classmethod
    def sqrt(cls, m: int | Fraction, d: int) -> QuadRat:
        """Return ``sqrt(m)`` written over the radicand ``d``.

        ``sqrt(m)`` lies in Q(sqrt(d)) as an irrational element only when
        ``m*d`` is a rational square; e.g. ``QuadRat.sqrt(2, 32)`` is
        ``sqrt(32)/4``.
        """
        m = Fraction(m)
        if m <= 0:
            raise ValueError("m must be positive")
        # sqrt(m) = sqrt(m*d*den^2) / (d*den) * sqrt(d), with m = num/den
        t = m.numerator * m.denominator * d
        if not is_square(t):
            raise ValueError(f"sqrt({m}) is not an irrational element of Q(sqrt({d}))")
        return cls(0, math.isqrt(t), d * m.denominator, d)

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> QuadRat:
        """Parse the display form ``(p + q*sqrt(d))/den``.

        A plain rational (``7``, ``-3/4``) is accepted when ``d`` is given.
        """
        text = text.strip()
        m = _DISPLAY_RE.match(text)
        if m:
            p, sign, q, rad, den = m.groups()
            q = int(q) if sign == "+" else -int(q)
            rad = int(rad)
            if d is not None and rad != d:
                raise RadicandMismatch(f"expected radicand {d}, got {rad}")
            return cls(int(p), q, int(den), rad)
        if d is not None and re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            return cls.rational(Fraction(text), d)
        raise ValueError(f"cannot parse {text!r} as a quadratic surd")

    # -- predicates and conversions -----------------------------------------

    def is_rational(self) -> bool:
        return self.q == 0

    def rational_value(self) -> Fraction:
        if self.q:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.den)

    def conj(self) -> QuadRat:
        return QuadRat._make(self.p, -self.q, self.den, self.d)

    def norm(self) -> Fraction:
        """Field norm ``x * conj(x)``."""
        return Fraction(self.p * self.p - self.d * self.q * self.q, self.den * self.den)

    def sign(self) -> int:
        p, q = self.p, self.q
        sp = (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if sq == 0 or sp == sq:
            return sp or sq
        if sp == 0:
            return sq
        return sp if p * p > q * q * self.d else sq

    def floor_scaled(self, scale: int) -> int:
        """Return ``floor(self * scale)`` exactly, for a positive integer scale."""
        s = self.p * scale
        if self.q:
            r = math.isqrt(self.q * self.q * scale * scale * self.d)
            # q*scale*sqrt(d) is irrational, so its floor is r or -r-1
            s += r if self.q > 0 else -r - 1
        return s // self.den

    def __float__(self) -> float:
        k = 60
        return float(Fraction(self.floor_scaled(10**k), 10**k))

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> tuple[int, int, int] | None:
        if isinstance(other, QuadRat):
            if other.d != self.d:
                raise RadicandMismatch(f"sqrt({self.d}) vs sqrt({other.d})")
            return other.p, other.q, other.den
        if isinstance(other, Rational):
            return int(other.numerator), 0, int(other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p, q, den = o
        return QuadRat._make(
            self.p * den + p * self.den, self.q * den + q * self.den, self.den * den, self.d
        )

    __radd__ = __add__

    def __neg__(self) -> QuadRat:
        return QuadRat._make(-self.p, -self.q, self.den, self.d)

    def __pos__(self) -> QuadRat:
        return self

    def __abs__(self) -> QuadRat:
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p, q, den = o
        return QuadRat._make(
            self.p * den - p * self.den, self.q * den - q * self.den, self.den * den, self.d
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p, q, den = o
        return QuadRat._make(
            self.p * p + self.d * self.q * q, self.p * q + self.q * p, self.den * den, self.d
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadRat:
        n = self.p * self.p - self.d * self.q * self.q
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(%d))" % self.d)
        return QuadRat._make(self.p * self.den, -self.q * self.den, n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * QuadRat._make(*o, self.d).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat._make(*o, self.d) * self.inverse()

    def __pow__(self, n: int) -> QuadRat:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        # square-and-multiply on the integer numerator pair; reduce once at the end
        d = self.d
        rp, rq = 1, 0
        bp, bq = self.p, self.q
        e = n
        while e:
            if e & 1:
                rp, rq = rp * bp + d * rq * bq, rp * bq + rq * bp
            e >>= 1
            if e:
                bp, bq = bp * bp + d * bq * bq, 2 * bp * bq
        return QuadRat._make(rp, rq, self.den**n, d)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadRat):
            return (self.p, self.q, self.den, self.d) == (other.p, other.q, other.den, other.d)
        if isinstance(other, Rational):
            return self.q == 0 and Fraction(self.p, self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, self.den))
        return hash((self.p, self.q, self.den, self.d))

    def _cmp(self, other) -> int | None:
        if self._coerce(other) is None:
            return None
        return (self - other).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        op = "-" if self.q < 0 else "+"
        return f"({self.p} {op} {abs(self.q)}*sqrt({self.d}))/{self.den}"

    def __repr__(self) -> str:
        return f"QuadRat({self.p}, {self.q}, {self.den}, d={self.d})"


def qr_add(x: QuadRat, y: QuadRat) -> QuadRat:
    return x + y


def qr_mul(x: QuadRat, y: QuadRat) -> QuadRat:
    return x * y


def qr_pow(x: QuadRat, n: int) -> QuadRat:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    return x**n


def qr_conj(x: QuadRat) -> QuadRat:
    return x.conj()


def qr_is_rational(x: Number) -> tuple[bool, Fraction | None]:
    """Return ``(True, value)`` when ``x`` is rational, else ``(False, None)``."""
    if isinstance(x, QuadRat):
        return (True, Fraction(x.p, x.den)) if x.q == 0 else (False, None)
    return True, Fraction(x)


def _ndigits(n: int) -> int:
    return len(str(n))


def decimal_upper_bound(x: Number, digits: int = 20) -> Decimal:
    """Smallest ``digits``-significant-digit decimal that is ``>= |x|``.

    The bound is computed from exact integer arithmetic, so it is a rigorous
    outward rounding of the true magnitude.
    """
    if not isinstance(x, QuadRat):
        x = Fraction(x)
    if x == 0:
        return Decimal(0)
    if isinstance(x, QuadRat):
        x = abs(x)
        floor_at = x.floor_scaled
        exact = False
    else:
        x = abs(x)

        def floor_at(scale: int) -> int:
            return x.numerator * scale // x.denominator

        exact = True
    k = digits
    f = floor_at(10**k)
    while f < 10 ** (digits + 1):
        k += (digits + 2 - _ndigits(f)) if f else k
        f = floor_at(10**k)
    # |x| lies in [f, f + 1) / 10**k; f == |x|*10**k only for exact rationals
    upper = f if exact and Fraction(f, 10**k) == x else f + 1
    drop = _ndigits(upper) - digits
    c = -(-upper // 10**drop)
    return Decimal(c).scaleb(drop - k)
