"""The Bessel-product integral p_n(x) = int_0^inf x t J0(xt) J0^n(t) dt.

Region [0, t1]: composite Gauss panels split at the merged zeros of the
two oscillators.  Beyond t1 the integrand is a superposition of damped
cosines at frequencies x + 2j - n (from the Hankel forms of the n+1
factors).  Panels at the merged zeros, summed and Euler/Levin
accelerated, handle every component whose frequency stays away from
zero; when x sits near an integer of the parity of n, the slow
component defeats acceleration, so its full asymptotic amplitude series
(products of the complex Hankel series S(t) = sum (-i)^k a_k t^{-k}) is
subtracted from the panel integrand and integrated exactly via

    int_t1^inf t^{-p} e^{i w t} dt  =  |w|^{p-1} E(p, |w| t1)  (conj for w<0),

with E reduced to the Fresnel / sine-cosine-integral base cases."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from ..errors import DomainError, NonConvergence
from ..numerics.bessel import _hankel_coeffs, j0_array
from ..numerics.precision import DEFAULT, Precision
from ..quadrature import fixed_gauss
from ..moments.bessel_moments import integrate_oscillatory, merged_zero_grid
from .result import EvalResult

_RESONANCE_WINDOW = 0.35
_AMP_TERMS = 11


@lru_cache(maxsize=4)
def _s_coeffs(nterms: int = _AMP_TERMS) -> tuple:
    """Complex coefficients of S(t) = P + iQ = sum_k i^k a_k t^{-k}, the
    slowly varying Hankel amplitude with J0 = Re[sqrt(2/pi t) e^{-i pi/4}
    S(t) e^{it}]."""
    a = _hankel_coeffs(0, nterms)
    return tuple(1j ** k * a[k] for k in range(nterms))


def _series_mul(p: tuple, q: tuple, nterms: int) -> tuple:
    out = [0.0 + 0.0j] * nterms
    for i, pi in enumerate(p):
        if i >= nterms:
            break
        for j, qj in enumerate(q):
            if i + j >= nterms:
                break
            out[i + j] += pi * qj
    return tuple(out)


def _series_pow(p: tuple, n: int, nterms: int) -> tuple:
    out = tuple([1.0 + 0.0j] + [0.0j] * (nterms - 1))
    for _ in range(n):
        out = _series_mul(out, p, nterms)
    return out


@lru_cache(maxsize=128)
def _component(n: int, j: int, x: float) -> tuple:
    """(omega, D, beta) of the j-th frequency component of x t J0(xt) J0^n(t).

    The component is Re[D * t^{(1-n)/2} * sum_r beta_r t^{-r} * e^{i omega t}].
    """
    omega = x + 2.0 * j - n
    s = _s_coeffs()
    s_x = tuple(c / x**k for k, c in enumerate(s))  # S(xt) in powers of 1/t
    s_conj = tuple(c.conjugate() for c in s)
    beta = _series_mul(s_x, _series_mul(_series_pow(s, j, _AMP_TERMS),
                                        _series_pow(s_conj, n - j, _AMP_TERMS),
                                        _AMP_TERMS), _AMP_TERMS)
    c0 = math.sqrt(2.0 * x / math.pi) * (2.0 / math.pi) ** (0.5 * n)
    d = (math.comb(n, j) / 2.0**n) * c0 * cmath.exp(-0.25j * math.pi * (1 + 2 * j - n))
    return omega, d, beta


def _fresnel_base(a: float) -> complex:
    """int_a^inf u^{-1/2} e^{iu} du, a >= 0."""
    full = math.sqrt(math.pi) * cmath.exp(0.25j * math.pi)
    # int_0^a by the entire series sum i^k a^{k+1/2}/(k! (k+1/2))
    s = 0.0j
    term = 1.0 + 0.0j
    apow = math.sqrt(a)
    for k in range(0, 200):
        s += term * apow / (k + 0.5)
        apow *= a
        term *= 1j / (k + 1)
        if abs(term) * apow < 1e-18:
            break
    return full - s


def _sici_base(a: float) -> complex:
    """int_a^inf u^{-1} e^{iu} du = -Ci(a) + i (pi/2 - Si(a))."""
    si = 0.0
    ci = 0.5772156649015328606 + math.log(a)
    term_s = a
    term_c = 1.0
    for k in range(1, 200):
        if k % 2 == 1:
            # odd power a^{2m+1}: contributes to Si
            pass
        term_c *= a / k
        if k % 2 == 0:
            contrib = term_c / k * (-1) ** (k // 2)
            ci += contrib
        else:
            contrib = term_c / k * (-1) ** ((k - 1) // 2)
            si += contrib
        if term_c < 1e-18 * max(1.0, abs(si) + abs(ci)):
            break
    del term_s
    return complex(-ci, 0.5 * math.pi - si)


def _e_upper(p: float, a: float) -> complex:
    """int_a^inf u^{-p} e^{iu} du for p a positive multiple of 1/2, a > 0."""
    if p == math.floor(p):
        base_p = 1.0
        val = _sici_base(a)
    else:
        base_p = 0.5
        val = _fresnel_base(a)
    q = base_p
    while q < p - 0.5:
        # -a^{-q} e^{ia} = -q I(q+1) + i I(q)  =>  I(q+1) = (a^{-q} e^{ia} + i I(q))/q
        val = (a ** (-q) * cmath.exp(1j * a) + 1j * val) / q
        q += 1.0
    return val


def _tail_power_integral(p: float, omega: float, t1: float) -> complex:
    """int_{t1}^inf t^{-p} e^{i omega t} dt (p > 1 when omega == 0)."""
    if omega == 0.0:
        if p <= 1.0:
            raise DomainError("divergent resonant tail (density singularity)")
        return complex(t1 ** (1.0 - p) / (p - 1.0))
    a = abs(omega) * t1
    val = abs(omega) ** (p - 1.0) * _e_upper(p, a)
    return val if omega > 0 else val.conjugate()


def _resonant_parts(n: int, x: float):
    out = []
    for j in range(n + 1):
        omega, d, beta = _component(n, j, x)
        if abs(omega) < _RESONANCE_WINDOW:
            out.append((omega, d, beta))
    return out


def pn_quadrature(n: int, x: float, prec: Precision = DEFAULT,
                  max_panels: int = 420) -> EvalResult:
    """Kluyver-integral evaluation of p_n(x) for n >= 2, x > 0."""
    if n < 2:
        raise DomainError("pn_quadrature wants n >= 2")
    if x <= 0.0:
        raise DomainError("pn_quadrature wants x > 0; p_n(0) = 0")
    if x >= n:
        return EvalResult(0.0, 0.0, "quadrature", "outside_support")
    tol = prec.target_rel_error

    def f(t):
        return x * t * j0_array(x * t) * j0_array(t) ** n

    # head region: composite panels at merged zeros up to t1 ~ 12
    t_head = max(12.0, 9.0 / x)
    grid = merged_zero_grid(0.0, max_panels + 80, scales=((0, 1.0), (0, x)))
    head_edges = [g for g in grid if g <= t_head]
    if not head_edges:
        raise NonConvergence("zero grid construction failed")
    head = fixed_gauss(f, 0.0, head_edges[0], 32)
    for lo, hi in zip(head_edges, head_edges[1:]):
        head += fixed_gauss(f, lo, hi, 24)
    t1 = head_edges[-1]

    resonant = _resonant_parts(n, x)
    singular = any(omega == 0.0 and 0.5 * (n - 1) <= 1.0 for omega, _, _ in resonant)
    if singular:
        return EvalResult(math.inf, math.inf, "quadrature", "singular_point")

    tail_exact = 0.0
    if resonant:
        p0 = 0.5 * (n - 1)
        for omega, d, beta in resonant:
            acc = 0.0j
            for r, b in enumerate(beta):
                if b != 0.0:
                    acc += b * _tail_power_integral(p0 + r, omega, t1)
            tail_exact += (d * acc).real

        def g_res(t):
            total = np.zeros_like(t)
            inv = 1.0 / t
            for omega, d, beta in resonant:
                amp = np.zeros_like(t, dtype=complex)
                for b in reversed(beta):
                    amp = amp * inv + b
                wave = d * amp * np.exp(1j * omega * t) * t ** (-p0)
                total += wave.real
            return total

        def f_panels(t):
            return f(t) - g_res(t)
    else:
        f_panels = f

    body, err = integrate_oscillatory(f_panels, t1, tol * 0.1,
                                      scales=((0, 1.0), (0, x)),
                                      max_panels=max_panels)
    value = head + body + tail_exact
    # asymptotic-amplitude truncation floor for the subtracted components
    if resonant:
        err += 30.0 * t1 ** (-_AMP_TERMS - 0.5 * (n - 1)) / _AMP_TERMS
    region = "seam" if resonant else "regular"
    return EvalResult(value, err + 1e-14, "quadrature", region)
