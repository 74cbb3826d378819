"""Double-double arithmetic: ~31 significant digits from pairs of floats.

A value is an unevaluated sum ``hi + lo`` with ``|lo| <= ulp(hi)/2``,
represented as a plain ``(hi, lo)`` tuple.  The error-free transforms
(two_sum, two_prod via Dekker splitting; this interpreter has no fused
multiply-add) follow the classical QD recipes.  Only the operations the
series kernels actually need are provided; no overflow handling beyond
IEEE is attempted since all callers work with moderate magnitudes.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


# -- construction / destruction ---------------------------------------------

def dd(x) -> tuple:
    """Coerce a float/int/Fraction/(hi, lo) tuple to double-double."""
    if isinstance(x, tuple):
        return x
    if isinstance(x, Fraction):
        return from_fraction(x)
    if isinstance(x, int) and abs(x) > 2**52:
        return from_fraction(Fraction(x))
    return (float(x), 0.0)


def from_fraction(q: Fraction) -> tuple:
    hi = float(q)
    lo = float(q - Fraction(hi))
    return quick_two_sum(hi, lo)


def from_str(s: str) -> tuple:
    return from_fraction(Fraction(s))


def to_float(a: tuple) -> float:
    return a[0] + a[1]


# -- ring operations ---------------------------------------------------------

def add(a: tuple, b: tuple) -> tuple:
    s1, s2 = two_sum(a[0], b[0])
    t1, t2 = two_sum(a[1], b[1])
    s2 += t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 += t2
    return quick_two_sum(s1, s2)


def add_d(a: tuple, b: float) -> tuple:
    s1, s2 = two_sum(a[0], b)
    s2 += a[1]
    return quick_two_sum(s1, s2)


def neg(a: tuple) -> tuple:
    return (-a[0], -a[1])


def sub(a: tuple, b: tuple) -> tuple:
    return add(a, (-b[0], -b[1]))


def mul(a: tuple, b: tuple) -> tuple:
    p1, p2 = two_prod(a[0], b[0])
    p2 += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p1, p2)


def mul_d(a: tuple, b: float) -> tuple:
    p1, p2 = two_prod(a[0], b)
    p2 += a[1] * b
    return quick_two_sum(p1, p2)


def div(a: tuple, b: tuple) -> tuple:
    q1 = a[0] / b[0]
    r = sub(a, mul_d(b, q1))
    q2 = r[0] / b[0]
    r = sub(r, mul_d(b, q2))
    q3 = r[0] / b[0]
    s1, s2 = quick_two_sum(q1, q2)
    return add_d((s1, s2), q3)


def div_d(a: tuple, b: float) -> tuple:
    return div(a, (b, 0.0))


def sqr(a: tuple) -> tuple:
    p1, p2 = two_prod(a[0], a[0])
    p2 += 2.0 * a[0] * a[1]
    return quick_two_sum(p1, p2)


def sqrt(a: tuple) -> tuple:
    if a[0] == 0.0:
        return (0.0, 0.0)
    x = math.sqrt(a[0])
    # one Newton step on f(y) = y^2 - a, done in dd
    e = sub(a, sqr((x, 0.0)))
    return add_d((x, 0.0), e[0] / (2.0 * x))


def pow_int(a: tuple, n: int) -> tuple:
    if n < 0:
        return div(ONE, pow_int(a, -n))
    r = ONE
    base = a
    while n:
        if n & 1:
            r = mul(r, base)
        base = sqr(base)
        n >>= 1
    return r


def abs_(a: tuple) -> tuple:
    return neg(a) if a[0] < 0.0 else a


def compare(a: tuple, b: tuple) -> int:
    d = sub(a, b)
    v = d[0] + d[1]
    return (v > 0) - (v < 0)


# -- transcendental constants (exact decimal strings, folded via Fraction) --

PI = from_str("3.14159265358979323846264338327950288419716939937510582097")
TWO_PI = mul_d(PI, 2.0)
PI_2 = mul_d(PI, 0.5)
PI_4 = mul_d(PI, 0.25)
LN2 = from_str("0.69314718055994530941723212145817656807550013436025525412")
EULER_GAMMA = from_str("0.57721566490153286060651209008240243104215933593992359880")
ZERO = (0.0, 0.0)
ONE = (1.0, 0.0)


# -- elementary functions ----------------------------------------------------

def exp(a: tuple) -> tuple:
    """exp for |a| < ~700, by 2^k scaling and a short Taylor series."""
    if a[0] > 709.0:
        raise OverflowError("dd exp overflow")
    if a[0] < -709.0:
        return ZERO
    m = math.floor(a[0] / LN2[0] + 0.5)
    r = sub(a, mul_d(LN2, float(m)))
    # scale down by 2**9 so the Taylor series converges in ~10 terms
    r = mul_d(r, 1.0 / 512.0)
    s = add_d(r, 1.0)
    term = r
    for k in range(2, 12):
        term = div_d(mul(term, r), float(k))
        s = add(s, term)
        if abs(term[0]) < 1e-35 * abs(s[0]):
            break
    for _ in range(9):  # undo the scaling: s <- s**2, nine times
        s = sqr(s)
    return mul_d(s, math.ldexp(1.0, m)) if abs(m) < 1000 else mul(s, pow_int((2.0, 0.0), m))


def log(a: tuple) -> tuple:
    """Natural log via one Newton correction of the double-precision seed."""
    if a[0] <= 0.0:
        raise ValueError("dd log of non-positive value")
    y = math.log(a[0])
    # y1 = y + a*exp(-y) - 1
    e = exp((-y, 0.0))
    return add_d(add_d(mul(a, e), -1.0), y)


def _sin_taylor(r: tuple) -> tuple:
    s = r
    term = r
    r2 = sqr(r)
    for k in range(1, 14):
        term = div_d(mul(term, r2), -float((2 * k) * (2 * k + 1)))
        s = add(s, term)
        if abs(term[0]) < 1e-35:
            break
    return s


def _cos_taylor(r: tuple) -> tuple:
    s = ONE
    term = ONE
    r2 = sqr(r)
    for k in range(1, 14):
        term = div_d(mul(term, r2), -float((2 * k - 1) * (2 * k)))
        s = add(s, term)
        if abs(term[0]) < 1e-35:
            break
    return s


def _reduce_pi2(a: tuple):
    """Return (quadrant, remainder) with a = q*(pi/2) + r, |r| <= pi/4."""
    q = math.floor(to_float(a) / PI_2[0] + 0.5)
    r = sub(a, mul_d(PI_2, float(q)))
    return q & 3, r


def sin(a: tuple) -> tuple:
    q, r = _reduce_pi2(a)
    if q == 0:
        return _sin_taylor(r)
    if q == 1:
        return _cos_taylor(r)
    if q == 2:
        return neg(_sin_taylor(r))
    return neg(_cos_taylor(r))


def cos(a: tuple) -> tuple:
    q, r = _reduce_pi2(a)
    if q == 0:
        return _cos_taylor(r)
    if q == 1:
        return neg(_sin_taylor(r))
    if q == 2:
        return neg(_cos_taylor(r))
    return _sin_taylor(r)
