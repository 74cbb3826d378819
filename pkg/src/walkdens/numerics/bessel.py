"""Bessel kernels J0, J1, I0, K0 plus zero tables and Hankel amplitudes.

Branch layout for J0/J1: ascending power series below x = 18 (summed in
double-double, since the alternating series cancels ~e^x of headroom),
Hankel asymptotic expansion above.  At the crossover both branches carry
<= 1e-13 relative error, which the branch-agreement test pins down.

K0 likewise: ascending log-series in double-double up to x = 17 (the
subtraction against (log(x/2)+gamma) I0 cancels ~e^{2x}), exponential
asymptotics beyond.  I0 has positive terms only and needs no extras.

Array versions (numpy, compensated summation) back the oscillatory
quadrature code where absolute accuracy ~1e-13 suffices.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from ..errors import DomainError, NonConvergence
from . import ddouble as dd
from .precision import DEFAULT, Precision

J_SERIES_CUTOFF = 18.0
K0_SERIES_CUTOFF = 17.0


# -- scalar J0 / J1 -----------------------------------------------------------

def _j_series_dd(order: int, x: float, tol: float, max_terms: int) -> float:
    q = dd.mul_d(dd.two_prod(x, x), 0.25)  # x^2/4, exactly rounded
    if order == 0:
        term = dd.ONE
    else:
        term = dd.mul_d(dd.dd(x), 0.5)
    s = term
    for k in range(max_terms):
        den = float((k + 1) * (k + 1 + order))
        term = dd.div_d(dd.mul(term, q), -den)
        s = dd.add(s, term)
        if abs(term[0]) < 1e-32 * max(1.0, abs(s[0])):
            return dd.to_float(s)
    raise NonConvergence(f"J{order} series did not converge at x={x}")


@lru_cache(maxsize=8)
def _hankel_coeffs(nu: int, nterms: int = 22):
    """a_k of the Hankel expansion: J_nu ~ sqrt(2/pi x)(P cos chi - Q sin chi)."""
    mu = 4 * nu * nu
    a = [1.0]
    for k in range(1, nterms):
        a.append(a[-1] * (mu - (2 * k - 1) ** 2) / (8.0 * k))
    return tuple(a)


def _j_asymptotic(order: int, x: float) -> float:
    a = _hankel_coeffs(order)
    p = 0.0
    q = 0.0
    xi = 1.0
    sign = 1.0
    for m in range(0, len(a) // 2):
        p += sign * a[2 * m] * xi
        q += sign * a[2 * m + 1] * xi / x
        xi /= x * x
        sign = -sign
    chi = x - (0.5 * order + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi) - q * math.sin(chi))


def bessel_j(order: int, x: float, prec: Precision = DEFAULT) -> float:
    """Bessel J of order 0 or 1 for x >= 0."""
    if order not in (0, 1):
        raise DomainError("only orders 0 and 1 are supported")
    if not math.isfinite(x) or x < 0.0:
        raise DomainError("bessel_j wants finite x >= 0")
    if x == 0.0:
        return 1.0 if order == 0 else 0.0
    if x < J_SERIES_CUTOFF:
        return _j_series_dd(order, x, prec.target_rel_error, prec.max_terms)
    return _j_asymptotic(order, x)


def j0(x: float) -> float:
    return bessel_j(0, x)


def j1(x: float) -> float:
    return bessel_j(1, x)


# -- scalar I0 / K0 -----------------------------------------------------------

def _i0_series(x: float) -> float:
    q = 0.25 * x * x
    term = 1.0
    s = 1.0
    c = 0.0  # Kahan compensation
    for k in range(1, 1000):
        term *= q / (k * k)
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
        if term < 1e-17 * s:
            return s
    raise NonConvergence(f"I0 series stalled at x={x}")


def _i0_asymptotic(x: float) -> float:
    a = _hankel_coeffs(0)
    s = 0.0
    xi = 1.0
    for ak in a:
        s += abs(ak) * xi
        xi /= x
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * s


def _k0_series_dd(x: float) -> float:
    # K0 = -(log(x/2)+gamma) I0(x) + sum_{k>=1} H_k (x^2/4)^k / k!^2
    q = dd.mul_d(dd.two_prod(x, x), 0.25)
    i0_sum = dd.ONE
    h_sum = dd.ZERO
    term = dd.ONE
    hk = dd.ZERO
    for k in range(1, 400):
        term = dd.div_d(dd.mul(term, q), float(k * k))
        hk = dd.add(hk, dd.div_d(dd.ONE, float(k)))
        i0_sum = dd.add(i0_sum, term)
        h_sum = dd.add(h_sum, dd.mul(term, hk))
        if abs(term[0]) * (hk[0] + 1.0) < 1e-33 * abs(i0_sum[0]):
            break
    pref = dd.add(dd.log(dd.mul_d(dd.dd(x), 0.5)), dd.EULER_GAMMA)
    return dd.to_float(dd.sub(h_sum, dd.mul(pref, i0_sum)))


def _k0_asymptotic(x: float) -> float:
    a = _hankel_coeffs(0)
    s = 0.0
    xi = 1.0
    prev = math.inf
    for ak in a:
        t = ak * xi
        if abs(t) > prev:
            break
        s += t
        prev = abs(t)
        xi /= x
    return math.sqrt(0.5 * math.pi / x) * math.exp(-x) * s


def modified_bessel(kind: str, x: float, prec: Precision = DEFAULT) -> float:
    """Modified Bessel I0 (x >= 0) or K0 (x > 0)."""
    if kind == "I0":
        if x < 0.0:
            raise DomainError("I0 wants x >= 0")
        return _i0_series(x) if x < K0_SERIES_CUTOFF else _i0_asymptotic(x)
    if kind == "K0":
        if x <= 0.0:
            raise DomainError("K0 wants x > 0")
        return _k0_series_dd(x) if x < K0_SERIES_CUTOFF else _k0_asymptotic(x)
    raise DomainError("kind must be 'I0' or 'K0'")


def i0(x: float) -> float:
    return modified_bessel("I0", x)


def k0(x: float) -> float:
    return modified_bessel("K0", x)


# -- vectorised J0 / J1 for quadrature ----------------------------------------

def _j_series_array(order: int, x: np.ndarray) -> np.ndarray:
    q = -0.25 * x * x
    term = np.ones_like(x) if order == 0 else 0.5 * x
    s = term.copy()
    comp = np.zeros_like(x)
    for k in range(1, 90):
        term = term * q / (k * (k + order))
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return s


def _j_asymptotic_array(order: int, x: np.ndarray) -> np.ndarray:
    a = _hankel_coeffs(order)
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    xi = np.ones_like(x)
    inv = 1.0 / x
    sign = 1.0
    for m in range(0, len(a) // 2):
        p += sign * a[2 * m] * xi
        q += sign * a[2 * m + 1] * xi * inv
        xi *= inv * inv
        sign = -sign
    chi = x - (0.5 * order + 0.25) * math.pi
    return np.sqrt(2.0 / (math.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


_J_ARRAY_SERIES_CUTOFF = 9.0  # above this the float64 series loses > 1e-13


def _j_array(order: int, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x < _J_ARRAY_SERIES_CUTOFF
    mid = ~small & (x < J_SERIES_CUTOFF)
    large = x >= J_SERIES_CUTOFF
    if small.any():
        out[small] = _j_series_array(order, x[small])
    if mid.any():
        # cancellation-heavy band: fall back to the scalar dd series
        out[mid] = [_j_series_dd(order, float(v), 1e-13, 1000) for v in x[mid]]
    if large.any():
        out[large] = _j_asymptotic_array(order, x[large])
    return out


def j0_array(x) -> np.ndarray:
    return _j_array(0, x)


def j1_array(x) -> np.ndarray:
    return _j_array(1, x)


# -- zeros ---------------------------------------------------------------------

@lru_cache(maxsize=4)
def _zero_cache(order: int):
    return []


def bessel_zeros(order: int, count: int) -> list:
    """First `count` positive zeros of J0 or J1 (McMahon seed + Newton)."""
    cache = _zero_cache(order)
    while len(cache) < count:
        m = len(cache) + 1
        beta = (m + 0.5 * order - 0.25) * math.pi
        mu = 4 * order * order
        z = beta - (mu - 1) / (8.0 * beta)
        for _ in range(3):
            if order == 0:
                f = bessel_j(0, z)
                df = -bessel_j(1, z)
            else:
                f = bessel_j(1, z)
                df = bessel_j(0, z) - f / z
            z -= f / df
        cache.append(z)
    return cache[:count]
