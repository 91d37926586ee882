# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan for near-isosceles Pythagorean triples (x, x+1, z)."""

from math import isqrt

ctypedef unsigned long long u64

# 2*x**2 + 2*x + 1 and (z + 1)**2 must stay below 2**64
X_LIMIT = 2_000_000_000

cdef enum:
    MAX_HITS = 512


def scan_range(u64 x_lo, u64 x_hi):
    """Return ``[(x, z), ...]`` with ``z*z == 2*x*x + 2*x + 1`` and ``x_lo <= x <= x_hi``.

    The square root is tracked incrementally, so the loop body is additions
    and one multiply.  Runs without the GIL.
    """
    if x_hi > X_LIMIT:
        raise OverflowError(f"x_hi={x_hi} exceeds the 64-bit scan limit {X_LIMIT}")
    if x_lo > x_hi:
        return []
    cdef u64 n = 2 * x_lo * x_lo + 2 * x_lo + 1
    cdef u64 z = isqrt(n)
    cdef u64 nxt = (z + 1) * (z + 1)
    cdef u64 x
    cdef u64 xs[MAX_HITS]
    cdef u64 zs[MAX_HITS]
    cdef int hits = 0
    with nogil:
        x = x_lo
        while True:
            while nxt <= n:
                z += 1
                nxt += 2 * z + 1
            if z * z == n and hits < MAX_HITS:
                xs[hits] = x
                zs[hits] = z
                hits += 1
            if x == x_hi:
                break
            n += 4 * x + 4
            x += 1
    return [(xs[i], zs[i]) for i in range(hits)]
