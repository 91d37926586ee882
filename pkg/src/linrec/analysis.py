"""Certification of monotonicity, integrality and the dominant-root ratio limit.

Each checker combines a sufficient condition evaluated on the parameters with an
empirical scan of a finite prefix of the sequence.  The sufficient conditions
are the ones the proofs actually need; the weaker bare condition is also
reported (``paper_condition_holds``) so the two can be compared.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Union

from linrec.errors import NonPositiveDiscriminant, ZeroDominantCoefficient, ZeroTerm
from linrec.quadfield import QuadRat, decimal_upper_bound
from linrec.recurrence import ClosedForm, Recurrence, eval_closed, iter_terms

__all__ = [
    "Property",
    "PropertyReport",
    "RatioEstimate",
    "check_increasing",
    "check_natural",
    "ratio_limit",
    "increasing_hypotheses",
    "ratio_report",
]

BOUND_DIGITS = 20


def _to_decimal(x: Fraction, digits: int = 25) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


class Property(str, enum.Enum):
    STRICTLY_INCREASING = "StrictlyIncreasing"
    NATURAL_VALUED = "NaturalValued"
    RATIO_LIMIT = "RatioLimit"


@dataclass(frozen=True)
class RatioEstimate:
    """``a[n+1]/a[n]`` together with its exact distance to ``x_plus``."""

    n: int
    ratio: Fraction
    error: Union[Fraction, QuadRat]
    error_bound: Decimal

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ratio": str(self.ratio),
            "ratio_decimal": _to_decimal(self.ratio),
            "error_bound": str(self.error_bound),
        }


@dataclass(frozen=True)
class PropertyReport:
    property: Property
    condition_holds: bool
    verified_prefix: int
    counterexample: Optional[int] = None
    paper_condition_holds: Optional[bool] = None
    limit_estimate: Optional[RatioEstimate] = None

    def to_dict(self) -> dict:
        out = {
            "property": self.property.value,
            "condition_holds": self.condition_holds,
            "verified_prefix": self.verified_prefix,
            "counterexample": self.counterexample,
            "paper_condition_holds": self.paper_condition_holds,
        }
        if self.limit_estimate is not None:
            out["limit_estimate"] = self.limit_estimate.to_dict()
        return out


def _require_real_roots(r: Recurrence) -> None:
    if r.disc <= 0:
        raise NonPositiveDiscriminant(f"A^2 + 4B = {r.disc} is not positive")


def increasing_hypotheses(r: Recurrence) -> bool:
    """Full sufficient condition for strict increase from index 0.

    ``-B < A - 1`` alone is not enough: the induction also uses
    ``A >= 1``, ``a0 > 0`` and ``a1 > a0``.
    """
    return -r.B < r.A - 1 and r.A >= 1 and r.a0 > 0 and r.a1 > r.a0


def check_increasing(r: Recurrence, prefix: int) -> PropertyReport:
    """Certify ``a[n+1] > a[n]`` and scan ``n < prefix`` for a violation."""
    _require_real_roots(r)
    terms = iter_terms(r)
    prev = next(terms)
    counterexample = None
    checked = 0
    for n in range(prefix):
        cur = next(terms)
        if not cur > prev:
            counterexample = n
            break
        checked += 1
        prev = cur
    return PropertyReport(
        property=Property.STRICTLY_INCREASING,
        condition_holds=increasing_hypotheses(r),
        verified_prefix=checked,
        counterexample=counterexample,
        paper_condition_holds=-r.B < r.A - 1,
    )


def _is_natural(v: Fraction) -> bool:
    return v.denominator == 1 and v >= 0


def check_natural(r: Recurrence, prefix: int) -> PropertyReport:
    """Certify ``a[n]`` is a natural number (0 included) and scan ``n < prefix``.

    The integrality condition ``a0, a1, A`` natural and ``B`` integral only
    guarantees integers.  Staying non-negative additionally needs either
    ``B >= 0`` or the strict-increase hypotheses of :func:`increasing_hypotheses`;
    ``condition_holds`` includes that guard, ``paper_condition_holds`` does not.
    """
    _require_real_roots(r)
    integral = (
        _is_natural(r.a0) and _is_natural(r.a1) and _is_natural(r.A) and r.B.denominator == 1
    )
    holds = integral and (r.B >= 0 or increasing_hypotheses(r))
    counterexample = None
    checked = 0
    for n, v in zip(range(prefix), iter_terms(r)):
        if not _is_natural(v):
            counterexample = n
            break
        checked += 1
    return PropertyReport(
        property=Property.NATURAL_VALUED,
        condition_holds=holds,
        verified_prefix=checked,
        counterexample=counterexample,
        paper_condition_holds=integral,
    )


def ratio_limit(cf: ClosedForm, n: int) -> RatioEstimate:
    """Return ``a[n+1]/a[n]`` and a rigorous bound on ``|a[n+1]/a[n] - x_plus|``.

    The distance is computed exactly in Q(sqrt(D)) and then rounded outward to
    20 significant digits.

    Raises:
        ZeroDominantCoefficient: if ``a == 0``.
        ZeroTerm: if ``a[n] == 0``.
    """
    if cf.a == 0:
        raise ZeroDominantCoefficient("coefficient on x_plus is zero")
    if cf.x_plus == 0:
        raise ZeroDominantCoefficient("dominant root is zero")
    an = eval_closed(cf, n)
    if an == 0:
        raise ZeroTerm(f"a[{n}] == 0")
    ratio = eval_closed(cf, n + 1) / an
    error = abs(ratio - cf.x_plus)
    if not isinstance(error, QuadRat):
        error = Fraction(error)
    return RatioEstimate(n, ratio, error, decimal_upper_bound(error, BOUND_DIGITS))


def ratio_report(cf: ClosedForm, n: int) -> PropertyReport:
    """Wrap :func:`ratio_limit` in a :class:`PropertyReport`."""
    est = ratio_limit(cf, n)
    return PropertyReport(
        property=Property.RATIO_LIMIT,
        condition_holds=abs(cf.x_minus) < abs(cf.x_plus),
        verified_prefix=n + 1,
        limit_estimate=est,
    )
