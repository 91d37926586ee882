"""Backend selection for the hot scanning kernel.

The compiled Cython extension is used when it imports; otherwise the numpy
fallback is.  Setting ``LINREC_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

from linrec import _scan_fallback

__all__ = ["BACKEND", "scan_near_isosceles", "scan_reference", "available_backends"]

_BACKENDS = {"python": _scan_fallback.scan_range}

try:
    if os.environ.get("LINREC_PURE_PYTHON"):
        raise ImportError("compiled backend disabled by LINREC_PURE_PYTHON")
    from linrec import _scan

    _BACKENDS["compiled"] = _scan.scan_range
    BACKEND = "compiled"
except ImportError:
    BACKEND = "python"

X_LIMIT = _scan_fallback.X_LIMIT


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def scan_reference(x_lo: int, x_hi: int) -> list[tuple[int, int]]:
    """Arbitrary-precision loop with ``math.isqrt``; slow, used as an oracle."""
    out = []
    for x in range(x_lo, x_hi + 1):
        n = 2 * x * x + 2 * x + 1
        z = math.isqrt(n)
        if z * z == n:
            out.append((x, z))
    return out


def scan_near_isosceles(
    x_max: int, x_min: int = 1, *, backend: str | None = None, workers: int = 1
) -> list[tuple[int, int]]:
    """Exhaustively find ``(x, z)`` with ``x**2 + (x+1)**2 == z**2`` and
    ``x_min <= x <= x_max``.

    The range is split into ``workers`` contiguous pieces run on threads; the
    compiled kernel releases the GIL.  Results are sorted by ``x``.
    """
    if x_min > x_max:
        return []
    if x_max > X_LIMIT:
        return scan_reference(x_min, x_max)
    fn = _BACKENDS[backend or BACKEND]
    if workers <= 1:
        return fn(x_min, x_max)
    span = x_max - x_min + 1
    step = -(-span // workers)
    pieces = [(lo, min(lo + step - 1, x_max)) for lo in range(x_min, x_max + 1, step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda p: fn(*p), pieces)
    return sorted(hit for part in parts for hit in part)
