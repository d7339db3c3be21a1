"""Double-double ("compensated") arithmetic for series summation.

The order-zero Bessel series suffer catastrophic cancellation for moderate
arguments (at x = 10 the largest J0 term is ~678 while the sum is ~0.25), so
plain float64 summation leaves absolute errors around 1e-11.  The downstream
finite-difference ODE residual checks divide such errors by h^2, which would
swamp their tolerance.  Summing with ~32 significant digits and rounding once
at the end keeps function values correct to the last bit of a float64.

Values are (hi, lo) pairs with hi = fl(hi + lo) and |lo| <= ulp(hi)/2.
Algorithms are the classic Dekker/Knuth error-free transforms; no fused
multiply-add is assumed.
"""

from __future__ import annotations

import math as _math

DD = tuple[float, float]

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def two_sum(a: float, b: float) -> DD:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def two_prod(a: float, b: float) -> DD:
    p = a * b
    ca = _SPLIT * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLIT * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def add(x: DD, y: DD) -> DD:
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return two_sum(s, e)


def add_f(x: DD, b: float) -> DD:
    s, e = two_sum(x[0], b)
    e += x[1]
    return two_sum(s, e)


def mul(x: DD, y: DD) -> DD:
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return two_sum(p, e)


def mul_f(x: DD, b: float) -> DD:
    p, e = two_prod(x[0], b)
    e += x[1] * b
    return two_sum(p, e)


def div_f(x: DD, d: float) -> DD:
    q1 = x[0] / d
    p, e = two_prod(q1, d)
    r = ((x[0] - p) - e) + x[1]
    return two_sum(q1, r / d)


def div(x: DD, y: DD) -> DD:
    q1 = x[0] / y[0]
    r = add(x, mul_f(y, -q1))
    q2 = r[0] / y[0]
    r = add(r, mul_f(y, -q2))
    q3 = r[0] / y[0]
    q = two_sum(q1, q2)
    return add_f(q, q3)


def neg(x: DD) -> DD:
    return (-x[0], -x[1])


def sqrt(x: DD) -> DD:
    # One Newton step from the float estimate is enough: the double starting
    # point is already correct to ~eps, and the step squares the error.
    s0 = _math.sqrt(x[0])
    if s0 == 0.0:
        return (0.0, 0.0)
    q = div_f(x, s0)
    return mul_f(add_f(q, s0), 0.5)


_LN2 = (0.6931471805599453, 2.3190468138462996e-17)


def log(d: float) -> DD:
    """Natural logarithm of a positive float, accurate to ~1e-32.

    Reduction: d = m * 2^e with m in [0.5, 1); two square roots bring m^(1/4)
    close enough to 1 for the atanh series 2*sum t^(2k+1)/(2k+1) with
    t = (w-1)/(w+1) to converge in ~20 terms.
    """
    if d <= 0.0 or not _math.isfinite(d):
        raise ValueError(f"log requires a positive finite argument, got {d!r}")
    m, e = _math.frexp(d)
    w = sqrt(sqrt((m, 0.0)))
    t = div(add_f(w, -1.0), add_f(w, 1.0))
    t2 = mul(t, t)
    acc = t
    p = t
    k = 1
    while k < 60:
        p = mul(p, t2)
        term = div_f(p, float(2 * k + 1))
        acc = add(acc, term)
        k += 1
        if abs(term[0]) <= 1e-35 * abs(acc[0]):
            break
    ln_m = mul_f(acc, 8.0)  # times 2 for atanh, times 4 for the two square roots
    return add(ln_m, mul_f(_LN2, float(e)))


def from_float(a: float) -> DD:
    return (a, 0.0)


def to_float(x: DD) -> float:
    return x[0] + x[1]
