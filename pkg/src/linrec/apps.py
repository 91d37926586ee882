"""Worked applications: Fibonacci and Pell numbers, domino tilings of W4 x P(n-1),
the Mills sequence of near-isosceles Pythagorean triples and the Pell chain
``p**2 - 2*q**2 = (-1)**k`` behind it.

Every public function cross-checks itself against an independent route and
raises :class:`~linrec.errors.ConsistencyError` if the two disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from linrec.errors import ConsistencyError, DegenerateIndex, IndexOutOfRange
from linrec.kernels import scan_near_isosceles
from linrec.quadfield import QuadRat
from linrec.recurrence import Recurrence, eval_closed, eval_iterative, eval_matrix, solve

__all__ = [
    "FIBONACCI",
    "PELL",
    "MILLS",
    "D_CHAIN",
    "PellSolution",
    "PythTriple",
    "CompletenessReport",
    "fibonacci",
    "pell",
    "fibonacci_closed",
    "pell_closed",
    "domino_tilings_w4xp",
    "mills_term",
    "mills_closed",
    "d_term",
    "d_closed",
    "m_term",
    "hatch_terms",
    "pyth_triple",
    "pyth_triples_upto",
    "pell_solution",
    "verify_completeness",
    "max_leg_for_hypotenuse",
]

FIBONACCI = Recurrence(1, 1, 1, 1)
PELL = Recurrence(2, 1, 1, 2)
MILLS = Recurrence(6, -1, 1, 5)
D_CHAIN = Recurrence(6, -1, 1, 7)

_INT64_MAX = 2**63 - 1

_SQRT5 = QuadRat(0, 1, 1, 5)
_PHI = (1 + _SQRT5) / 2
_SQRT2 = QuadRat(0, 1, 1, 2)
_SILVER = 1 + _SQRT2  # fundamental unit of Z[sqrt 2]
_MILLS_BASE = 3 + 2 * _SQRT2


def _json_int(v: int):
    return v if -_INT64_MAX - 1 <= v <= _INT64_MAX else str(v)


def _rational_int(v: QuadRat, what: str) -> int:
    if v.q or v.den != 1:
        raise ConsistencyError(f"{what} = {v} is not an integer")
    return v.p


@lru_cache(maxsize=None)
def _closed(r: Recurrence):
    return solve(r)


def fibonacci(n: int) -> int:
    """``f[n]`` with ``f[0] = f[1] = 1``."""
    if n < 0:
        raise IndexOutOfRange("n must be non-negative")
    return int(eval_matrix(FIBONACCI, n))


def pell(n: int) -> int:
    """``p[n]`` with ``p[0] = 1, p[1] = 2``."""
    if n < 0:
        raise IndexOutOfRange("n must be non-negative")
    return int(eval_matrix(PELL, n))


def fibonacci_closed(n: int) -> int:
    """``f[n] = (phi**(n+1) - conj(phi)**(n+1)) / sqrt(5)`` evaluated in Q(sqrt 5)."""
    v = (_PHI ** (n + 1) - _PHI.conj() ** (n + 1)) / _SQRT5
    return _rational_int(v, f"f[{n}]")


def pell_closed(n: int) -> int:
    """``p[n] = ((1+sqrt 2)**(n+1) - (1-sqrt 2)**(n+1)) / (2*sqrt 2)``."""
    v = (_SILVER ** (n + 1) - _SILVER.conj() ** (n + 1)) / (2 * _SQRT2)
    return _rational_int(v, f"p[{n}]")


def domino_tilings_w4xp(n: int) -> int:
    """Number of domino tilings of W4 x P(n-1), i.e. ``f[n] * p[n]``, for ``n >= 2``."""
    if n < 2:
        raise IndexOutOfRange(f"tiling count is defined for n >= 2, got {n}")
    by_iteration = int(eval_iterative(FIBONACCI, n)) * int(eval_iterative(PELL, n))
    by_closed_form = fibonacci_closed(n) * pell_closed(n)
    if by_iteration != by_closed_form:
        raise ConsistencyError(f"n={n}: {by_iteration} != {by_closed_form}")
    return by_iteration


def mills_closed(k: int) -> int:
    """``a[k] = ((sqrt2+2)*(3+2sqrt2)**k - (sqrt2-2)*(3-2sqrt2)**k) / 4``."""
    v = ((_SQRT2 + 2) * _MILLS_BASE**k - (_SQRT2 - 2) * _MILLS_BASE.conj() ** k) / 4
    return _rational_int(v, f"a[{k}]")


def d_closed(k: int) -> int:
    """``d[k] = ((sqrt2+1)*(3+2sqrt2)**k - (sqrt2-1)*(3-2sqrt2)**k) / 2``."""
    v = ((_SQRT2 + 1) * _MILLS_BASE**k - (_SQRT2 - 1) * _MILLS_BASE.conj() ** k) / 2
    return _rational_int(v, f"d[{k}]")


def mills_term(k: int, verify: bool = True) -> int:
    """Hypotenuse ``a[k]`` of the ``k``-th near-isosceles triple, ``a[k+1] = 6a[k] - a[k-1]``.

    With ``verify`` the iterative, matrix and closed-form evaluators must agree.
    """
    if k < 0:
        raise IndexOutOfRange("k must be non-negative")
    v = eval_matrix(MILLS, k)
    if verify:
        others = (eval_iterative(MILLS, k), eval_closed(_closed(MILLS), k))
        if any(o != v for o in others):
            raise ConsistencyError(f"Mills evaluators disagree at k={k}: {v}, {others}")
    return int(v)


def d_term(k: int) -> int:
    """Odd witness ``d[k]`` with ``d[k]**2 == 2*a[k]**2 - 1``."""
    if k < 0:
        raise IndexOutOfRange("k must be non-negative")
    d = int(eval_matrix(D_CHAIN, k))
    a = mills_term(k, verify=False)
    if d * d != 2 * a * a - 1 or d % 2 == 0:
        raise ConsistencyError(f"d[{k}] = {d} is not an odd root of 2*{a}^2 - 1")
    return d


def hatch_terms():
    """Yield ``m[0], m[1], ...`` from ``m[k] = 6*m[k-1] - m[k-2] + 2``, ``m[0]=0, m[1]=3``."""
    x, y = 0, 3
    while True:
        yield x
        x, y = y, 6 * y - x + 2


def m_term(k: int) -> int:
    """Short leg ``m[k] = (d[k] - 1) / 2`` of the ``k``-th triple."""
    m = (d_term(k) - 1) // 2
    for i, h in enumerate(hatch_terms()):
        if i == k:
            break
    if h != m:
        raise ConsistencyError(f"m[{k}] = {m} but the affine recurrence gives {h}")
    return m


@dataclass(frozen=True)
class PythTriple:
    """Triple ``(m, m + 1, hyp)`` with witness ``d = 2*m + 1``."""

    k: int
    m: int
    hyp: int
    d: int

    @property
    def legs(self) -> tuple[int, int]:
        return self.m, self.m + 1

    def as_tuple(self) -> tuple[int, int, int]:
        return self.m, self.m + 1, self.hyp

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "m": _json_int(self.m),
            "m1": _json_int(self.m + 1),
            "hyp": _json_int(self.hyp),
            "d": _json_int(self.d),
        }


def pyth_triple(k: int, permissive: bool = False) -> PythTriple:
    """The ``k``-th near-isosceles Pythagorean triple.

    ``k = 0`` gives the degenerate ``(0, 1, 1)`` and is refused unless
    ``permissive`` is set.
    """
    if k < 0:
        raise IndexOutOfRange("k must be non-negative")
    if k == 0 and not permissive:
        raise DegenerateIndex("k=0 yields the degenerate triple (0, 1, 1)")
    hyp = mills_term(k)
    d = d_term(k)
    m = m_term(k)
    if m * m + (m + 1) ** 2 != hyp * hyp or 2 * m + 1 != d:
        raise ConsistencyError(f"({m}, {m + 1}, {hyp}) is not a triple")
    return PythTriple(k, m, hyp, d)


def pyth_triples_upto(hyp_bound: int) -> list[PythTriple]:
    """All ``pyth_triple(k)``, ``k >= 1``, with hypotenuse at most ``hyp_bound``."""
    out = []
    k = 1
    while True:
        t = pyth_triple(k)
        if t.hyp > hyp_bound:
            return out
        out.append(t)
        k += 1


@dataclass(frozen=True)
class PellSolution:
    """``p**2 - 2*q**2 == sign == (-1)**k`` with ``r = p + q``, ``s = q``."""

    k: int
    p: int
    q: int
    r: int
    s: int
    sign: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "p": _json_int(self.p),
            "q": _json_int(self.q),
            "r": _json_int(self.r),
            "s": _json_int(self.s),
            "sign": self.sign,
        }


def _r_closed(k: int) -> int:
    v = ((_SQRT2 + 2) * _SILVER**k - (_SQRT2 - 2) * _SILVER.conj() ** k) / 4
    return _rational_int(v, f"r[{k}]")


def pell_solution(k: int) -> PellSolution:
    """Solution ``p + q*sqrt(2) = (1 + sqrt(2))**k`` of ``p**2 - 2*q**2 = (-1)**k``."""
    if k < 0:
        raise IndexOutOfRange("k must be non-negative")
    u = _SILVER**k
    p, q = u.p, u.q
    sign = -1 if k % 2 else 1
    r, s = p + q, q
    if p * p - 2 * q * q != sign:
        raise ConsistencyError(f"p^2 - 2q^2 != {sign} at k={k}")
    if r != _r_closed(k):
        raise ConsistencyError(f"r[{k}] = {r} disagrees with its closed form")
    if k >= 1 and s != _r_closed(k - 1):
        raise ConsistencyError(f"s[{k}] = {s} != r[{k - 1}]")
    return PellSolution(k, p, q, r, s, sign)


def max_leg_for_hypotenuse(hyp_bound: int) -> int:
    """Largest ``x >= 0`` with ``x**2 + (x+1)**2 <= hyp_bound**2`` (``-1`` if none)."""
    target = hyp_bound * hyp_bound

    def n(x):
        return 2 * x * x + 2 * x + 1

    if target < 1:
        return -1
    x = max((math.isqrt(2 * target - 1) - 1) // 2, 0)
    while n(x + 1) <= target:
        x += 1
    while x >= 0 and n(x) > target:
        x -= 1
    return x


@dataclass
class CompletenessReport:
    k_max: int
    hyp_bound: int
    sum_of_squares_ok: bool = True
    legs_ok: bool = True
    brute_force_ok: bool = True
    found: list = field(default_factory=list)
    expected: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sum_of_squares_ok and self.legs_ok and self.brute_force_ok

    def to_dict(self) -> dict:
        return {
            "k_max": self.k_max,
            "hyp_bound": _json_int(self.hyp_bound),
            "ok": self.ok,
            "sum_of_squares_ok": self.sum_of_squares_ok,
            "legs_ok": self.legs_ok,
            "brute_force_ok": self.brute_force_ok,
            "found": [_json_int(h) for h in self.found],
            "expected": [_json_int(h) for h in self.expected],
            "failures": self.failures,
        }


def verify_completeness(
    k_max: int, hyp_bound: int, *, backend: str | None = None, workers: int = 1
) -> CompletenessReport:
    """Check that ``(m[k], m[k]+1, a[k])`` are exactly the triples ``(x, x+1, z)``.

    Three checks, none of which raise; failures are collected in the report:

    1. ``r[k]**2 + s[k]**2 == a[k]`` for ``0 <= k <= k_max``;
    2. ``{2*r*s, r**2 - s**2} == {m, m+1}`` for ``1 <= k <= k_max``, with
       ``2*r*s`` the even leg: ``m`` for even ``k``, ``m + 1`` for odd ``k``;
    3. an exhaustive scan of every ``x`` with hypotenuse ``<= hyp_bound``
       finds exactly the triples ``pyth_triple(k)`` below the bound.
    """
    if k_max < 2:
        raise IndexOutOfRange("k_max must be at least 2")
    if hyp_bound < 5:
        raise IndexOutOfRange("hyp_bound must be at least 5")
    rep = CompletenessReport(k_max, hyp_bound)
    for k in range(k_max + 1):
        sol = pell_solution(k)
        a = mills_term(k)
        if sol.r**2 + sol.s**2 != a:
            rep.sum_of_squares_ok = False
            rep.failures.append(f"k={k}: r^2+s^2={sol.r**2 + sol.s**2} != a={a}")
        if k == 0:
            continue
        m = m_term(k)
        even_leg, odd_leg = 2 * sol.r * sol.s, sol.r**2 - sol.s**2
        want = (m, m + 1) if k % 2 == 0 else (m + 1, m)
        if (even_leg, odd_leg) != want:
            rep.legs_ok = False
            rep.failures.append(f"k={k}: (2rs, r^2-s^2)={(even_leg, odd_leg)} != {want}")
    x_max = max_leg_for_hypotenuse(hyp_bound)
    hits = scan_near_isosceles(x_max, 1, backend=backend, workers=workers)
    found = {(x, x + 1, z) for x, z in hits}
    expected = {t.as_tuple() for t in pyth_triples_upto(hyp_bound)}
    rep.found = sorted(t[2] for t in found)
    rep.expected = sorted(t[2] for t in expected)
    if found != expected:
        rep.brute_force_ok = False
        rep.failures.append(
            f"scan found {sorted(found - expected)} extra, {sorted(expected - found)} missing"
        )
    return rep
