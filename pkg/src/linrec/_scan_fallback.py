"""Vectorized numpy implementation of the near-isosceles triple scan.

Used when the compiled ``_scan`` extension is unavailable.  Same contract as
``_scan.scan_range``.
"""

from __future__ import annotations

import numpy as np

X_LIMIT = 2_000_000_000
CHUNK = 1 << 22


def scan_range(x_lo: int, x_hi: int) -> list[tuple[int, int]]:
    if x_hi > X_LIMIT:
        raise OverflowError(f"x_hi={x_hi} exceeds the 64-bit scan limit {X_LIMIT}")
    out: list[tuple[int, int]] = []
    start = x_lo
    while start <= x_hi:
        stop = min(start + CHUNK, x_hi + 1)
        x = np.arange(start, stop, dtype=np.int64)
        n = 2 * x * x + 2 * x + 1
        z = np.sqrt(n.astype(np.float64)).astype(np.int64)
        # float sqrt is within one ulp; two integer corrections make it exact
        for _ in range(2):
            z -= z * z > n
            z += (z + 1) * (z + 1) <= n
        hit = np.flatnonzero(z * z == n)
        out.extend((int(x[i]), int(z[i])) for i in hit)
        start = stop
    return out
