# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit-scan kernels.

Must stay algorithmically identical to ``_kernels_py.py``; the test suite
asserts bit-for-bit parity between the two backends.
"""

cdef double _SNAP = 1e-9
cdef int _MAX_DIGITS = 64

BACKEND = "compiled"


cpdef double cantor_scaled(double x):
    """Staircase value scaled to [0, 1] (the classical Cantor function)."""
    cdef double y, val, w
    cdef int t, i
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    y = x
    val = 0.0
    w = 0.5
    for i in range(_MAX_DIGITS):
        y *= 3.0
        t = <int>(y + _SNAP)
        if t > 2:
            # residual snapped to 1: the remaining digits are all twos
            return val + 2.0 * w
        y -= t
        if y < _SNAP:
            y = 0.0
        if t == 1:
            return val + w
        if t == 2:
            val += w
        w *= 0.5
        if y == 0.0:
            return val
    return val


cpdef double g_series_scaled(double y):
    """Scaled first-moment series: Gamma(alpha+1) times integral of x dS."""
    cdef double r, acc, trunc, pow3, pow2, pow6
    cdef int t, i
    if y <= 0.0:
        return 0.0
    if y >= 1.0:
        y = 1.0
    r = y
    acc = 0.0
    trunc = 0.0
    pow3 = 1.0 / 3.0
    pow2 = 0.5
    pow6 = 1.0 / 6.0
    for i in range(_MAX_DIGITS):
        r *= 3.0
        t = <int>(r + _SNAP)
        if t > 2:
            t = 2
        r -= t
        if r < _SNAP:
            r = 0.0
        if t != 0:
            acc += trunc * pow2 + 0.5 * pow6
        if t == 1:
            return acc
        trunc += t * pow3
        pow3 /= 3.0
        pow2 *= 0.5
        pow6 /= 6.0
        if r == 0.0:
            return acc
    return acc
