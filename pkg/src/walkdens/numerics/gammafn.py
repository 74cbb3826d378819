"""Gamma-family kernels and named constants.

gamma/log_gamma use the Lanczos approximation (g=7, 9 terms) with the
reflection formula for arguments below 1/2; digamma uses the asymptotic
Bernoulli series after shifting the argument above 10.  A double-double
variant of log_gamma (Stirling after shifting above 35) backs the
binomial prefactors that feed finite-difference derivative checks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import PoleError
from . import ddouble as dd

# named constants used across the moment/density formulas
EULER_GAMMA = 0.5772156649015328606065120900824024
LOG2 = math.log(2.0)
ZETA2 = math.pi**2 / 6.0
ZETA3 = 1.2020569031595942853997381615114500
ZETA4 = math.pi**4 / 90.0
LI4_HALF = 0.5174790616738993863307581618988629

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> float:
    """Gamma function for real non-pole argument."""
    if _is_nonpositive_int(x):
        raise PoleError(f"gamma pole at {x}")
    if x < 0.5:
        # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    x -= 1.0
    a = _LANCZOS[0]
    t = x + _LANCZOS_G + 0.5
    for i in range(1, 9):
        a += _LANCZOS[i] / (x + i)
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * a


def log_gamma(x: float) -> float:
    """log |Gamma(x)| for x > 0 (Lanczos; avoids overflow of gamma)."""
    if _is_nonpositive_int(x):
        raise PoleError(f"log_gamma pole at {x}")
    if x < 0.5:
        return math.log(math.pi / abs(math.sin(math.pi * x))) - log_gamma(1.0 - x)
    x -= 1.0
    a = _LANCZOS[0]
    t = x + _LANCZOS_G + 0.5
    for i in range(1, 9):
        a += _LANCZOS[i] / (x + i)
    return 0.5 * math.log(2.0 * math.pi) + (x + 0.5) * math.log(t) - t + math.log(a)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    # recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0
    s = Fraction(0)
    for k in range(n):
        s += math.comb(n + 1, k) * bernoulli(k)
    return -s / (n + 1)


def digamma(x: float) -> float:
    """Digamma (psi) for real non-pole argument."""
    if _is_nonpositive_int(x):
        raise PoleError(f"digamma pole at {x}")
    if x < 0.0:
        # reflection: psi(1-x) - psi(x) = pi cot(pi x)
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    s = 0.0
    while x < 10.0:
        s -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    # asymptotic tail: log x - 1/(2x) - sum B_2k / (2k x^2k)
    t = 0.0
    w = inv2
    for k in range(1, 9):
        t += float(bernoulli(2 * k)) / (2 * k) * w
        w *= inv2
    return s + math.log(x) - 0.5 / x - t


def zeta_even(n: int) -> float:
    """zeta(n) for even n >= 2, via Bernoulli numbers."""
    if n % 2 or n < 2:
        raise ValueError("zeta_even wants even n >= 2")
    b = bernoulli(n)
    val = Fraction((-1) ** (n // 2 + 1)) * b / (2 * math.factorial(n))
    return float(val) * (2.0 * math.pi) ** n


def harmonic(n: int) -> float:
    """H_n = sum_{k<=n} 1/k (H_0 = 0)."""
    return sum(1.0 / k for k in range(1, n + 1))


def harmonic_half(n: int) -> float:
    """H_{n+1/2} = 2 sum_{k=1}^{n+1} 1/(2k-1) - 2 log 2."""
    return 2.0 * sum(1.0 / (2 * k - 1) for k in range(1, n + 2)) - 2.0 * LOG2


# -- binomials with real arguments (needed for the moment closed forms) ------

def binom_real(s: float, t: float) -> float:
    """binom(s, t) = Gamma(s+1) / (Gamma(t+1) Gamma(s-t+1)) for real args."""
    num = s + 1.0
    d1 = t + 1.0
    d2 = s - t + 1.0
    if _is_nonpositive_int(num):
        if _is_nonpositive_int(d1) or _is_nonpositive_int(d2):
            raise PoleError("indeterminate binomial; take a limit explicitly")
        return 0.0
    return gamma(num) / (gamma(d1) * gamma(d2))


def binom_central(s: float) -> float:
    """binom(s, s/2) = Gamma(s+1) / Gamma(s/2+1)^2, continued to real s."""
    return binom_real(s, s / 2.0)


# -- double-double log-gamma / gamma ------------------------------------------

_LOG_2PI_DD = dd.log(dd.TWO_PI)


def log_gamma_dd(x) -> tuple:
    """log Gamma in double-double for real x > 0."""
    x = dd.dd(x)
    if x[0] <= 0.0:
        raise PoleError("log_gamma_dd wants x > 0")
    shift = dd.ZERO
    while x[0] < 35.0:
        shift = dd.add(shift, dd.log(x))
        x = dd.add_d(x, 1.0)
    # Stirling: (x-1/2) log x - x + log(2 pi)/2 + sum B_2k/(2k(2k-1) x^(2k-1))
    lx = dd.log(x)
    s = dd.sub(dd.mul(dd.add_d(x, -0.5), lx), x)
    s = dd.add(s, dd.mul_d(_LOG_2PI_DD, 0.5))
    inv = dd.div(dd.ONE, x)
    inv2 = dd.sqr(inv)
    w = inv
    for k in range(1, 16):
        b = bernoulli(2 * k) / (2 * k * (2 * k - 1))
        s = dd.add(s, dd.mul(dd.from_fraction(b), w))
        w = dd.mul(w, inv2)
    return dd.sub(s, shift)


def gamma_dd(x) -> tuple:
    """Gamma in double-double for real non-pole x."""
    x = dd.dd(x)
    xf = dd.to_float(x)
    if _is_nonpositive_int(xf):
        raise PoleError(f"gamma pole at {xf}")
    if xf < 0.5:
        sin_pix = dd.sin(dd.mul(dd.PI, x))
        return dd.div(dd.PI, dd.mul(sin_pix, gamma_dd(dd.sub(dd.ONE, x))))
    return dd.exp(log_gamma_dd(x))


# -- regularized incomplete gamma (chi-square tail probabilities) -------------

def gammainc_upper_reg(a: float, x: float) -> float:
    """Q(a, x) = Gamma(a, x)/Gamma(a) for a > 0, x >= 0."""
    if x < 0.0 or a <= 0.0:
        raise ValueError("gammainc_upper_reg wants a > 0, x >= 0")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        # P(a,x) by series, return 1 - P
        term = 1.0 / a
        total = term
        n = a
        for _ in range(10_000):
            n += 1.0
            term *= x / n
            total += term
            if abs(term) < 1e-17 * abs(total):
                break
        p = total * math.exp(-x + a * math.log(x) - log_gamma(a))
        return 1.0 - p
    # continued fraction (modified Lentz)
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x + a * math.log(x) - log_gamma(a))
