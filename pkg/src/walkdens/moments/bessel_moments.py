"""Bessel-integral representations of the moments.

Modified-Bessel route (three and four steps):
    W_3(s) = 3^{s+3/2} / (pi 2^s Gamma(s/2+1)^2) int_0^inf t^{s+1} K0^2 I0 dt
    W_4(s) = 4^{s+2}  / (pi^2  Gamma(s/2+1)^2) int_0^inf t^{s+1} K0^3 I0 dt
both valid for Re s > -2; the integrands decay like e^{-t} and e^{-2t},
so a split at t = 1 (tanh-sinh against the K0 log-singularity) plus an
adaptive panel sweep with an explicit exponential tail bound suffices.

Oscillating-J route (any n): the k-th iterate of  L = -(1/x) d/dx  on
J0^n is maintained symbolically as terms c * J0^a J1^b x^{-m}, giving

    W_n(s) = 2^{s+1-k} Gamma(1+s/2)/Gamma(k-s/2)
             int_0^inf x^{2k-s-1} (L^k J0^n)(x) dx

with k chosen so the weight power 2k-s-1 is nonnegative.  Near zero the
same terms are summed as an exact power series (the J0^a J1^b x^{-m}
combination cancels catastrophically there); beyond x = 1 the integral
is partitioned at the union of J0 and J1 zeros and the panel sums are
Euler/Levin accelerated.  Differentiating under the integral sign gives
the derivative evaluator used for the five-step residues.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..errors import DomainError
from ..numerics.bessel import bessel_zeros, i0, j0_array, j1_array, k0
from ..numerics.gammafn import EULER_GAMMA, LOG2, digamma, gamma, log_gamma
from ..numerics.precision import DEFAULT, Precision
from ..quadrature import accelerate_panel_sums, adaptive_gauss, fixed_gauss, tanh_sinh
from .exact import even_moment_table
from .value import MomentValue


# -- modified-Bessel moments ----------------------------------------------------

def _k0_pow_i0(power: int, t: np.ndarray) -> np.ndarray:
    return np.array([k0(float(x)) ** power * i0(float(x)) for x in t])


def bessel_moment(n: int, s: float, prec: Precision = DEFAULT) -> MomentValue:
    """W_n(s) for n in {3, 4} by the K0/I0 integral, s > -2."""
    if n not in (3, 4):
        raise DomainError("bessel_moment supports n in {3, 4}")
    if s <= -2.0:
        raise DomainError("bessel_moment wants s > -2")
    power = n - 1
    decay = 1.0 if n == 3 else 2.0
    tol = prec.target_rel_error

    def f(t):
        return t ** (s + 1.0) * _k0_pow_i0(power, t)

    t_hi = (45.0 + 8.0 * max(0.0, s)) / decay
    head = tanh_sinh(f, 0.0, 1.0, tol=tol * 0.1)
    body = adaptive_gauss(f, 1.0, t_hi, tol=tol * 0.1)
    # tail bound from K0 <= sqrt(pi/2t) e^{-t}, I0 <= e^t/sqrt(2 pi t)
    tail = (math.pi / 2.0) ** (0.5 * power) / math.sqrt(2.0 * math.pi) \
        * t_hi ** (s + 1.0 - 0.5 * n) * math.exp(-decay * t_hi) / decay
    integral = head + body
    if n == 3:
        pref = 3.0 ** (s + 1.5) / (math.pi * 2.0 ** s) \
            * math.exp(-2.0 * log_gamma(0.5 * s + 1.0))
    else:
        pref = 4.0 ** (s + 2.0) / math.pi**2 \
            * math.exp(-2.0 * log_gamma(0.5 * s + 1.0))
    val = pref * integral
    return MomentValue(val, abs(pref) * (tail + tol * abs(integral)),
                       "bessel_integral")


def w3_neg_odd_k0(k: int, prec: Precision = DEFAULT) -> float:
    """W_3(-2k-1) = (4/pi^3) (2^k k!/(2k)!)^2 int t^{2k} K0^3 dt (integer k)."""
    if k < 0:
        raise DomainError("w3_neg_odd_k0 wants k >= 0")
    tol = prec.target_rel_error

    def f(t):
        return t ** (2 * k) * np.array([k0(float(x)) ** 3 for x in t])

    head = tanh_sinh(f, 0.0, 1.0, tol=tol * 0.1)
    body = adaptive_gauss(f, 1.0, 18.0 + 4.0 * k, tol=tol * 0.1)
    pref = 4.0 / math.pi**3 * (2.0**k * math.factorial(k)
                               / math.factorial(2 * k)) ** 2
    return pref * (head + body)


# -- the L^k J0^n machinery -------------------------------------------------------

@lru_cache(maxsize=64)
def lk_terms(n: int, k: int) -> tuple:
    """L^k J0^n as ((coeff, a, b, m), ...) meaning coeff J0^a J1^b x^{-m}.

    J0' = -J1 and J1' = J0 - J1/x close the algebra on such terms."""
    terms = {(n, 0, 0): Fraction(1)}
    for _ in range(k):
        nxt = {}

        def bump(key, c):
            nxt[key] = nxt.get(key, Fraction(0)) + c

        for (a, b, m), c in terms.items():
            if a:
                bump((a - 1, b + 1, m + 1), a * c)
            if b:
                bump((a + 1, b - 1, m + 1), -b * c)
            if b + m:
                bump((a, b, m + 2), (b + m) * c)
        terms = {key: c for key, c in nxt.items() if c}
    return tuple((c, a, b, m) for (a, b, m), c in sorted(terms.items()))


def lk_eval_array(n: int, k: int, x: np.ndarray) -> np.ndarray:
    u = j0_array(x)
    v = j1_array(x)
    out = np.zeros_like(x)
    for c, a, b, m in lk_terms(n, k):
        out += float(c) * u**a * v**b * x ** (-float(m))
    return out


@lru_cache(maxsize=64)
def lk_series(n: int, k: int, nterms: int = 26) -> tuple:
    """Exact coefficients c_j with L^k J0^n = sum_j c_j x^{2j} near zero."""
    # J0 series, then n-th power, then k applications of L
    j0c = [Fraction((-1) ** j, 4**j) / Fraction(math.factorial(j)) ** 2
           for j in range(nterms + k + 1)]
    power = [Fraction(1)] + [Fraction(0)] * (nterms + k)
    for _ in range(n):
        out = [Fraction(0)] * len(power)
        for i, a in enumerate(power):
            if a:
                for j, b in enumerate(j0c):
                    if i + j < len(out):
                        out[i + j] += a * b
        power = out
    for _ in range(k):
        power = [-2 * (j + 1) * power[j + 1] for j in range(len(power) - 1)] \
            + [Fraction(0)]
    return tuple(power[:nterms + 1])


def lk_eval_small(n: int, k: int, x: np.ndarray) -> np.ndarray:
    coeffs = lk_series(n, k)
    x2 = x * x
    out = np.zeros_like(x)
    for c in reversed(coeffs):
        out = out * x2 + float(c)
    return out


# -- oscillatory integration over the J-zero grid --------------------------------

def merged_zero_grid(t_min: float, count: int, scales=((0, 1.0), (1, 1.0))) -> list:
    """First `count` breakpoints beyond t_min among zeros of J_order(scale t)."""
    streams = []
    for order, scale in scales:
        need = count + 8
        zs = [z / scale for z in bessel_zeros(order, need)]
        while zs and zs[-1] < t_min:
            need += count
            zs = [z / scale for z in bessel_zeros(order, need)]
        streams.extend(z for z in zs if z > t_min)
    return sorted(streams)[:count]


def integrate_oscillatory(f, t_min: float, tol: float,
                          scales=((0, 1.0), (1, 1.0)),
                          max_panels: int = 400, nodes: int = 24,
                          window: int = 44):
    """int_{t_min}^inf f, partitioned at Bessel-zero breakpoints.

    Panel sums are accelerated (Euler first, Levin when Euler stalls) on
    a trailing window; returns (value, err_estimate).
    """
    grid = merged_zero_grid(t_min, max_panels, scales)
    panels = []
    best = None
    for i, (lo, hi) in enumerate(zip([t_min] + grid, grid)):
        if hi - lo < 1e-13:
            continue
        panels.append(fixed_gauss(f, lo, hi, nodes))
        if len(panels) >= 24 and (len(panels) % 12 == 0 or i == len(grid) - 1):
            w = min(window, len(panels) - 4)
            head = sum(panels[:-w])
            val, err, _ = accelerate_panel_sums(panels[-w:], tol)
            est = head + val
            if best is None or err < best[1]:
                best = (est, err)
            if err < tol:
                return est, err
    if best is None:
        total = sum(panels)
        return total, abs(panels[-1]) if panels else 0.0
    return best


# -- the J-route moments and derivatives ------------------------------------------

def _broadhurst_k(n: int, s: float) -> int:
    k = max(0, math.ceil((s + 1.0) / 2.0))
    # convergence at infinity needs k < s + n/2 - 1; the weight power
    # 2k - s - 1 >= 0 is the paper's choice for differentiability at 0
    while not (k - s - 0.5 * n - 1.0 < -1.0):
        k -= 1
    return k


def _broadhurst_integral(n: int, s: float, k: int, prec: Precision,
                         log_weight: bool) -> tuple:
    e0 = 2.0 * k - s - 1.0
    coeffs = lk_series(n, k)

    def f_small(x):
        w = x**e0
        if log_weight:
            w = w * np.log(x)
        return w * lk_eval_small(n, k, x)

    def f_big(x):
        w = x**e0
        if log_weight:
            w = w * np.log(x)
        return w * lk_eval_array(n, k, x)

    tol = prec.target_rel_error
    head = tanh_sinh(f_small, 0.0, 1.0, tol=tol * 0.1)
    del coeffs
    body, err = integrate_oscillatory(f_big, 1.0, tol * 0.1)
    return head + body, err


def broadhurst_moment(n: int, s: float, prec: Precision = DEFAULT,
                      k: int = None) -> MomentValue:
    """W_n(s) from the iterated-derivative J-integral (s > -2)."""
    if s <= -2.0:
        raise DomainError("broadhurst_moment wants s > -2")
    if s >= 0.0 and s == math.floor(s) and int(s) % 2 == 0 and n <= 10:
        kk = int(s) // 2
        return MomentValue(float(even_moment_table(n, kk)[kk]), 0.0,
                           "exact_combinatorial")
    if k is None:
        k = _broadhurst_k(n, s)
    integral, err = _broadhurst_integral(n, s, k, prec, log_weight=False)
    pref = 2.0 ** (s + 1.0 - k) * gamma(1.0 + 0.5 * s) / gamma(k - 0.5 * s)
    return MomentValue(pref * integral, abs(pref) * err + 1e-14 * abs(pref * integral),
                       "bessel_integral")


def broadhurst_prime(n: int, s: float, prec: Precision = DEFAULT,
                     k: int = None) -> MomentValue:
    """W_n'(s) by differentiating the J-integral under the integral sign."""
    if s <= -2.0:
        raise DomainError("broadhurst_prime wants s > -2")
    if k is None:
        k = _broadhurst_k(n, s)
    w = broadhurst_moment(n, s, prec, k=k)
    log_integral, err = _broadhurst_integral(n, s, k, prec, log_weight=True)
    pref = 2.0 ** (s + 1.0 - k) * gamma(1.0 + 0.5 * s) / gamma(k - 0.5 * s)
    val = w.value * (LOG2 + 0.5 * digamma(1.0 + 0.5 * s)
                     + 0.5 * digamma(k - 0.5 * s)) - pref * log_integral
    return MomentValue(val, abs(pref) * err + w.err + 1e-13 * abs(val),
                       "bessel_integral")


@lru_cache(maxsize=32)
def _j0n_minus_1_coeffs(n: int, nterms: int = 30) -> tuple:
    series = lk_series(n, 0, nterms)
    return tuple(series[1:])  # constant term 1 dropped


def wn_prime0_bessel(n: int, prec: Precision = DEFAULT) -> MomentValue:
    """W_n'(0) = log 2 - gamma - int_0^1 (J0^n - 1) dx/x - int_1^inf J0^n dx/x."""
    coeffs = _j0n_minus_1_coeffs(n)

    def f_small(x):
        x2 = x * x
        out = np.zeros_like(x)
        for c in reversed(coeffs):
            out = out * x2 + float(c)
        return out * x  # (J0^n - 1)/x = x * sum c_{j+1} x^{2j}

    def f_big(x):
        return j0_array(x) ** n / x

    tol = prec.target_rel_error
    head = fixed_gauss(f_small, 0.0, 1.0, 40)
    body, err = integrate_oscillatory(f_big, 1.0, tol * 0.1, scales=((0, 1.0),))
    val = LOG2 - EULER_GAMMA - head - body
    return MomentValue(val, err + 1e-14, "bessel_integral")
