"""Second-order recurrences ``a[n+1] = A*a[n] + B*a[n-1]`` and their closed forms.

Three evaluators are provided and are expected to agree exactly:

* :func:`eval_iterative` walks the recurrence forward,
* :func:`eval_matrix` raises the companion matrix ``[[A, B], [1, 0]]`` to a power,
* :func:`eval_closed` evaluates ``a*x_plus**n + b*x_minus**n`` in Q(sqrt(D)).

:func:`solve` produces the closed form from a recurrence and :func:`from_roots`
goes the other way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from linrec.errors import (
    IrrationalCoefficients,
    IrrationalResidue,
    NonPositiveDiscriminant,
    RootOrderError,
)
from linrec.quadfield import QuadRat, is_square

__all__ = [
    "Recurrence",
    "ClosedForm",
    "iter_terms",
    "eval_iterative",
    "eval_matrix",
    "eval_closed",
    "solve",
    "from_roots",
]

Value = Union[Fraction, QuadRat]


def _frac(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("floating-point values are not accepted; use int or Fraction")
    if isinstance(v, str):
        return Fraction(v)
    return Fraction(v)


@dataclass(frozen=True)
class Recurrence:
    """The recurrence ``a[n+1] = A*a[n] + B*a[n-1]`` with starting terms ``a0, a1``.

    All four parameters are stored as exact ``Fraction`` values.
    """

    A: Fraction
    B: Fraction
    a0: Fraction
    a1: Fraction

    def __post_init__(self):
        for name in ("A", "B", "a0", "a1"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    @property
    def disc(self) -> Fraction:
        return self.A * self.A + 4 * self.B

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in (self.A, self.B, self.a0, self.a1))

    def __str__(self) -> str:
        return f"a[n+1] = {self.A}*a[n] + {self.B}*a[n-1], a0={self.a0}, a1={self.a1}"


def iter_terms(r: Recurrence) -> Iterator[Fraction]:
    """Yield ``a0, a1, a2, ...`` forever."""
    if r.is_integral():
        A, B, x, y = int(r.A), int(r.B), int(r.a0), int(r.a1)
        yield Fraction(x)
        while True:
            yield Fraction(y)
            x, y = y, A * y + B * x
    else:
        A, B, x, y = r.A, r.B, r.a0, r.a1
        yield x
        while True:
            yield y
            x, y = y, A * y + B * x


def eval_iterative(r: Recurrence, n: int) -> Fraction:
    """Return ``a[n]`` by stepping the recurrence forward ``n - 1`` times."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for i, v in enumerate(iter_terms(r)):
        if i == n:
            return v
    raise AssertionError("unreachable")


def _mat_mul(x, y):
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _mat_pow(m, n: int):
    result = ((1, 0), (0, 1))
    while n:
        if n & 1:
            result = _mat_mul(result, m)
        n >>= 1
        if n:
            m = _mat_mul(m, m)
    return result


def eval_matrix(r: Recurrence, n: int) -> Fraction:
    """Return ``a[n]`` from the ``(n - 1)``-th power of the companion matrix.

    The matrix is scaled by ``L = lcm(den(A), den(B))`` so the power is taken
    over the integers and a single division happens at the end.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return r.a0
    if n == 1:
        return r.a1
    L = math.lcm(r.A.denominator, r.B.denominator)
    K = ((int(r.A * L), int(r.B * L)), (L, 0))
    (p00, p01), _ = _mat_pow(K, n - 1)
    c = math.lcm(r.a0.denominator, r.a1.denominator)
    num = p00 * int(r.a1 * c) + p01 * int(r.a0 * c)
    return Fraction(num, c * L ** (n - 1))


@dataclass(frozen=True)
class ClosedForm:
    """``a[n] = a*x_plus**n + b*x_minus**n``.

    When the discriminant is a rational square every field is a ``Fraction``
    and ``rational_roots`` is true; otherwise ``a, b, x_plus, x_minus`` are
    :class:`QuadRat` values sharing one radicand.
    """

    a: Value
    b: Value
    x_plus: Value
    x_minus: Value
    disc: Fraction
    rational_roots: bool

    @property
    def radicand(self) -> int | None:
        return None if self.rational_roots else self.x_plus.d

    def formula(self) -> str:
        return (
            f"a_n = {self.a}*({self.x_plus})^n + {self.b}*({self.x_minus})^n"
        )

    __str__ = formula

    def to_recurrence(self) -> Recurrence:
        return from_roots(self.a, self.b, self.x_plus, self.x_minus)

    def to_dict(self) -> dict:
        r = self.to_recurrence()

        def enc(v):
            if isinstance(v, QuadRat):
                return {"p": str(v.p), "q": str(v.q), "den": str(v.den)}
            return str(v)

        return {
            "A": str(r.A),
            "B": str(r.B),
            "a0": str(r.a0),
            "a1": str(r.a1),
            "D": str(self.disc),
            "radicand": None if self.rational_roots else str(self.radicand),
            "rational_roots": self.rational_roots,
            "a": enc(self.a),
            "b": enc(self.b),
            "x_plus": enc(self.x_plus),
            "x_minus": enc(self.x_minus),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> ClosedForm:
        rad = obj.get("radicand")

        def dec(v):
            if isinstance(v, dict):
                return QuadRat(int(v["p"]), int(v["q"]), int(v["den"]), int(rad))
            return Fraction(v)

        return cls(
            a=dec(obj["a"]),
            b=dec(obj["b"]),
            x_plus=dec(obj["x_plus"]),
            x_minus=dec(obj["x_minus"]),
            disc=Fraction(obj["D"]),
            rational_roots=bool(obj["rational_roots"]),
        )


def solve(r: Recurrence) -> ClosedForm:
    """Solve ``r`` into its closed form.

    Raises:
        NonPositiveDiscriminant: if ``A**2 + 4*B <= 0``.
    """
    D = r.disc
    if D <= 0:
        raise NonPositiveDiscriminant(f"A^2 + 4B = {D} is not positive")
    num, den = D.numerator, D.denominator
    if is_square(num) and is_square(den):
        root = Fraction(math.isqrt(num), math.isqrt(den))
        rational = True
    else:
        # sqrt(num/den) = sqrt(num*den)/den keeps the radicand an integer
        root = QuadRat(0, 1, den, num * den)
        rational = False
    x_plus = (root + r.A) / 2
    x_minus = (r.A - root) / 2
    a = (r.a1 - r.a0 * x_minus) / root
    b = -(r.a1 - r.a0 * x_plus) / root
    return ClosedForm(a, b, x_plus, x_minus, D, rational)


def _collapse(v, what: str) -> Fraction:
    if isinstance(v, QuadRat):
        if v.q:
            raise IrrationalCoefficients(f"{what} = {v} is not rational")
        return Fraction(v.p, v.den)
    return Fraction(v)


def from_roots(a: Value, b: Value, x_plus: Value, x_minus: Value) -> Recurrence:
    """Recover ``(A, B, a0, a1)`` from closed-form data using Vieta's relations.

    Raises:
        RootOrderError: unless ``x_minus < x_plus``.
        IrrationalCoefficients: if ``A``, ``B``, ``a0`` or ``a1`` is irrational.
    """
    if not x_minus < x_plus:
        raise RootOrderError(f"need x_minus < x_plus, got {x_minus} and {x_plus}")
    A = _collapse(x_plus + x_minus, "x_plus + x_minus")
    B = _collapse(-(x_plus * x_minus), "-x_plus*x_minus")
    a0 = _collapse(a + b, "a + b")
    a1 = _collapse(a * x_plus + b * x_minus, "a*x_plus + b*x_minus")
    return Recurrence(A, B, a0, a1)


def eval_closed(cf: ClosedForm, n: int) -> Fraction:
    """Evaluate ``a*x_plus**n + b*x_minus**n`` exactly.

    Raises:
        IrrationalResidue: if the sum fails to be rational, which can only
            happen for a hand-built, inconsistent closed form.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if cf.rational_roots:
        return Fraction(cf.a * cf.x_plus**n + cf.b * cf.x_minus**n)
    a, xp = cf.a, cf.x_plus
    if (
        isinstance(a, QuadRat)
        and isinstance(cf.b, QuadRat)
        and isinstance(xp, QuadRat)
        and cf.b == a.conj()
        and cf.x_minus == xp.conj()
    ):
        # the second term is the conjugate of the first; the surd parts cancel
        t = a * xp**n
        return Fraction(2 * t.p, t.den)
    total = a * xp**n + cf.b * cf.x_minus**n
    if isinstance(total, QuadRat):
        if total.q:
            raise IrrationalResidue(f"a*x+^{n} + b*x-^{n} = {total}")
        return Fraction(total.p, total.den)
    return Fraction(total)
