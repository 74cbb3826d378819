"""Hypergeometric closed forms for W_3 and W_4.

w3: the single-3F2 form
    W_3(s) = 3^{s+3/2}/(2 pi) Gamma(1+s/2)^2/Gamma(s+2)
             * 3F2((s+2)/2,(s+2)/2,(s+2)/2; 1,(s+3)/2; 1/4).

w3_two_term / w4_two_term: the tan(pi s/2) + central-binomial pair of
hypergeometric terms; odd integer s is rejected there (the two terms
cancel delicately) and covered instead by w3_neg_odd, the reflection
rule and the convolution.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DomainError, PoleError
from ..numerics import ddouble as dd
from ..numerics.gammafn import gamma, gamma_dd, log_gamma
from ..numerics.hyper import HyperParams, hyp_pfq, hyp_pfq_dd
from ..numerics.precision import DEFAULT, Precision
from .exact import even_moment_table
from .value import MomentValue

_F12 = Fraction(1, 2)


def _is_int(x: float) -> bool:
    return x == math.floor(x)


def w3_hyp(s: float, prec: Precision = DEFAULT) -> MomentValue:
    """W_3(s) by the single hypergeometric form, s > -2 off poles."""
    if s <= -2.0:
        raise DomainError("w3_hyp wants s > -2; use the functional equation")
    if _is_int(s) and s >= 0 and s % 2 == 0:
        k = int(s) // 2
        if k <= 10:
            return MomentValue(float(even_moment_table(3, k)[k]), 0.0,
                               "exact_combinatorial")
    h = (s + 2.0) / 2.0
    f = hyp_pfq(HyperParams((h, h, h), (1.0, (s + 3.0) / 2.0)), 0.25, prec)
    pref = (3.0 ** (s + 1.5) / (2.0 * math.pi)
            * math.exp(2.0 * log_gamma(1.0 + 0.5 * s) - log_gamma(s + 2.0)))
    return MomentValue(pref * f.value, abs(pref) * f.err + 1e-15 * abs(pref * f.value),
                       "hyp_single")


def _tan_half_pi_s(s: float) -> float:
    return math.tan(0.5 * math.pi * s)


def _tan_half_pi_s_dd(s: float):
    t = dd.mul_d(dd.PI, 0.5 * s)
    return dd.div(dd.sin(t), dd.cos(t))


def _binom_half(s: float) -> float:
    """binom(s, (s-1)/2) = Gamma(s+1)/(Gamma((s+1)/2) Gamma((s+3)/2))."""
    return gamma(s + 1.0) / (gamma((s + 1.0) / 2.0) * gamma((s + 3.0) / 2.0))


def _binom_central(s: float) -> float:
    """binom(s, s/2) = Gamma(s+1)/Gamma(s/2+1)^2."""
    return gamma(s + 1.0) / gamma(0.5 * s + 1.0) ** 2


def _binom_half_dd(s: float) -> float:
    num = gamma_dd(s + 1.0)
    d1 = gamma_dd((s + 1.0) / 2.0)
    d2 = gamma_dd((s + 3.0) / 2.0)
    return dd.div(num, dd.mul(d1, d2))


def _binom_central_dd(s: float):
    num = gamma_dd(s + 1.0)
    d = gamma_dd(0.5 * s + 1.0)
    return dd.div(num, dd.sqr(d))


def _check_two_term_domain(s: float, n: int):
    if _is_int(s) and int(s) % 2 != 0:
        raise DomainError("two-term form excluded at odd integers (tan pole)")
    if _is_int(s) and s < 0 and int(s) % 2 == 0:
        raise PoleError(f"W_n pole at s = {s}")
    if n == 4 and s <= -2.0:
        raise DomainError("w4_two_term wants Re s > -2")


def w3_two_term(s: float, prec: Precision = DEFAULT) -> MomentValue:
    """W_3(s) by the two-term 3F2 pair at z = 1/4 (s not an odd integer)."""
    _check_two_term_domain(s, 3)
    h = (s + 3.0) / 2.0
    p1 = HyperParams((_F12, _F12, _F12), (h, h))
    p2 = HyperParams((-s / 2.0, -s / 2.0, -s / 2.0), (1.0, -(s - 1.0) / 2.0))
    if prec.extended:
        f1, e1 = hyp_pfq_dd(p1, 0.25, prec)
        f2, e2 = hyp_pfq_dd(p2, 0.25, prec)
        t1 = dd.mul(_tan_half_pi_s_dd(s), dd.sqr(_binom_half_dd(s)))
        t1 = dd.mul(t1, dd.exp(dd.mul_d(dd.LN2, -(2.0 * s + 1.0))))
        t2 = _binom_central_dd(s)
        val_dd = dd.add(dd.mul(t1, f1), dd.mul(t2, f2))
        val = dd.to_float(val_dd)
        err = abs(dd.to_float(t1)) * e1 + abs(dd.to_float(t2)) * e2
        return MomentValue(val, err + 1e-28 * abs(val), "hyp_two_term")
    f1 = hyp_pfq(p1, 0.25, prec)
    f2 = hyp_pfq(p2, 0.25, prec)
    c1 = _tan_half_pi_s(s) * _binom_half(s) ** 2 / 2.0 ** (2.0 * s + 1.0)
    c2 = _binom_central(s)
    val = c1 * f1.value + c2 * f2.value
    err = abs(c1) * f1.err + abs(c2) * f2.err + 1e-15 * (abs(c1 * f1.value)
                                                         + abs(c2 * f2.value))
    return MomentValue(val, err, "hyp_two_term")


def w4_two_term(s: float, prec: Precision = DEFAULT) -> MomentValue:
    """W_4(s) by the two-term 4F3 pair at z = 1 (s not odd, Re s > -2)."""
    _check_two_term_domain(s, 4)
    h = (s + 3.0) / 2.0
    p1 = HyperParams((_F12, _F12, _F12, 0.5 * s + 1.0), (h, h, h))
    p2 = HyperParams((_F12, -s / 2.0, -s / 2.0, -s / 2.0),
                     (1.0, 1.0, -(s - 1.0) / 2.0))
    if prec.extended:
        f1, e1 = hyp_pfq_dd(p1, 1.0, prec)
        f2, e2 = hyp_pfq_dd(p2, 1.0, prec)
        t1 = dd.mul(_tan_half_pi_s_dd(s), dd.pow_int(_binom_half_dd(s), 3))
        t1 = dd.mul(t1, dd.exp(dd.mul_d(dd.LN2, -2.0 * s)))
        t2 = _binom_central_dd(s)
        val_dd = dd.add(dd.mul(t1, f1), dd.mul(t2, f2))
        val = dd.to_float(val_dd)
        err = abs(dd.to_float(t1)) * e1 + abs(dd.to_float(t2)) * e2
        return MomentValue(val, err + 1e-26 * abs(val), "hyp_two_term")
    f1 = hyp_pfq(p1, 1.0, prec)
    f2 = hyp_pfq(p2, 1.0, prec)
    c1 = _tan_half_pi_s(s) * _binom_half(s) ** 3 / 4.0 ** s
    c2 = _binom_central(s)
    val = c1 * f1.value + c2 * f2.value
    err = abs(c1) * f1.err + abs(c2) * f2.err + 1e-15 * (abs(c1 * f1.value)
                                                         + abs(c2 * f2.value))
    return MomentValue(val, err, "hyp_two_term")


def w3_neg_odd(k: int, prec: Precision = DEFAULT) -> MomentValue:
    """W_3(-2k-1) = sqrt3 C(2k,k)^2 / (2^{4k+1} 3^{2k})
       * 3F2(1/2,1/2,1/2; k+1,k+1; 1/4), for integer k >= 0."""
    if k < 0:
        raise DomainError("w3_neg_odd wants k >= 0")
    f = hyp_pfq(HyperParams((_F12, _F12, _F12),
                            (float(k + 1), float(k + 1))), 0.25, prec)
    pref = (math.sqrt(3.0) * math.comb(2 * k, k) ** 2
            / (2.0 ** (4 * k + 1) * 3.0 ** (2 * k)))
    return MomentValue(pref * f.value, pref * f.err + 1e-15 * pref * f.value,
                       "hyp_single")
