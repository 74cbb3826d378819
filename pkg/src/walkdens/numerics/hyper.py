"""Generalized hypergeometric series pFq and the specific continuation
used by the four-step density.

The series engine sums the defining series by term-ratio recurrence with
compensated (or double-double) accumulation and stops once three
consecutive terms fall below tolerance, adding a geometric tail bound.
At the unit argument (p = q+1, positive parametric excess sigma) the
terms decay like n^{-1-sigma}; the sum is then capped and the remainder
completed by fitting a 4-term power law to the term stream and summing
it with Euler-Maclaurin zeta tails.  Arguments beyond 1 are rejected;
the single continuation callers need is hyp32_log_continuation, the
explicit log-series form of Re 3F2(1/2,1/2,1/2; 5/6,7/6; z) for z > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from ..errors import DomainError, NonConvergence
from . import ddouble as dd
from .gammafn import bernoulli
from .precision import DEFAULT, Precision

_Z1_CAP = 2500  # base term count at the unit argument before tail completion


def _is_nonpositive_int(x) -> bool:
    xf = float(x)
    return xf <= 0.0 and xf == math.floor(xf)


@dataclass(frozen=True)
class HyperParams:
    """Numerator/denominator parameter tuples of a pFq.

    Entries may be floats or Fractions (Fractions survive exactly into
    the double-double path).
    """

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        t = self.terminating_index()
        for b in self.lower:
            if _is_nonpositive_int(b) and (t is None or t > -float(b)):
                raise DomainError(f"lower parameter {b} is a nonpositive integer")

    def terminating_index(self):
        cand = [int(-float(a)) for a in self.upper if _is_nonpositive_int(a)]
        return min(cand) if cand else None

    def excess(self) -> float:
        """Parametric excess sum(lower) - sum(upper); at z = 1 the terms
        decay like n^{-1-excess}, so the series converges iff excess > 0."""
        return sum(map(float, self.lower)) - sum(map(float, self.upper))


class HypValue(NamedTuple):
    value: float
    err: float


def em_zeta_tail(p: float, n0: int) -> float:
    """sum_{n >= n0} n^{-p} for p > 1, by Euler-Maclaurin at n0."""
    if p <= 1.0:
        raise DomainError("em_zeta_tail wants p > 1")
    base = max(n0, 12)
    head = sum(n ** (-p) for n in range(n0, base))
    n = float(base)
    s = n ** (1.0 - p) / (p - 1.0) + 0.5 * n ** (-p)
    rising = p
    npow = n ** (-p - 1.0)
    for k in range(1, 10):
        s += float(bernoulli(2 * k)) / math.factorial(2 * k) * rising * npow
        rising *= (p + 2 * k - 1) * (p + 2 * k)
        npow /= n * n
    return head + s


def _tail_completion(ratio_fn, term_n: float, n: int, sigma: float):
    """Complete sum_{m > n} a_m given a_n and the exact term ratio.

    Fits a_m ~ m^{-1-sigma} (c0 + c1/m + c2/m^2 + c3/m^3) on four samples
    spread beyond n, then sums the model with Euler-Maclaurin tails.
    Returns (tail, err_estimate).
    """
    p0 = 1.0 + sigma
    step = max(8, n // 6)
    samples = [(n, term_n)]
    a = term_n
    m = n
    for tgt in (n + step, n + 2 * step, n + 3 * step):
        while m < tgt:
            a *= ratio_fn(m)
            m += 1
        samples.append((m, a))
    mat = np.array([[mm ** (-p0 - j) for j in range(4)] for mm, _ in samples])
    rhs = np.array([v for _, v in samples])
    try:
        coef = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError:
        return 0.0, abs(term_n) * n / max(sigma, 0.1)
    tail = sum(coef[j] * em_zeta_tail(p0 + j, n + 1) for j in range(4))
    coef3 = np.linalg.lstsq(mat[:, :3], rhs, rcond=None)[0]
    tail3 = sum(coef3[j] * em_zeta_tail(p0 + j, n + 1) for j in range(3))
    return float(tail), abs(tail - tail3) + 1e-16 * abs(tail)


def hyp_pfq(params: HyperParams, z: float, prec: Precision = DEFAULT) -> HypValue:
    """Sum pFq(upper; lower; z) in the series-convergent regime."""
    if len(params.upper) > len(params.lower) + 1:
        raise DomainError("divergent pFq: p > q + 1")
    tmax = params.terminating_index()
    sigma = params.excess()
    saalschutz = len(params.upper) == len(params.lower) + 1
    if tmax is None:
        if abs(z) > 1.0:
            raise DomainError("|z| > 1 requires a continuation operation")
        if z == 1.0 and saalschutz and sigma <= 0.0:
            raise DomainError("series diverges at z = 1 (nonpositive excess)")
        if z == -1.0 and saalschutz and sigma <= -1.0:
            raise DomainError("series diverges at z = -1")


    uf = tuple(map(float, params.upper))
    lf = tuple(map(float, params.lower))

    def ratio(k: int) -> float:
        r = z
        for a in uf:
            r *= a + k
        for b in lf:
            r /= b + k
        return r / (k + 1)

    unit = tmax is None and z == 1.0 and saalschutz
    if prec.extended:
        v, err = _hyp_series_dd(params, z, prec, tmax, sigma, ratio, unit)
        return HypValue(dd.to_float(v), err)

    term = 1.0
    total = 1.0
    comp = 0.0
    small_streak = 0
    if tmax is not None:
        cap = min(prec.max_terms, tmax + 1)
    elif unit:
        cap = min(prec.max_terms, _Z1_CAP)
    else:
        cap = prec.max_terms
    k = 0
    for k in range(cap):
        term *= ratio(k)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if tmax is not None:
            continue
        if unit:
            if abs(term) < 1e-2 * prec.target_rel_error * abs(total):
                break
            continue
        if abs(term) < prec.target_rel_error * abs(total):
            small_streak += 1
            if small_streak >= 3:
                r = abs(ratio(k + 1))
                err = abs(term) * (r / (1.0 - r) if r < 1.0 else 1.0)
                return HypValue(total, err)
        else:
            small_streak = 0
    if tmax is not None:
        return HypValue(total, 0.0)
    if unit:
        # after the loop, term is a_{k+1} and total includes it
        tail, err = _tail_completion(ratio, term, k + 1, sigma)
        return HypValue(total + tail, err + 1e-16 * abs(total))
    raise NonConvergence(f"pFq did not converge in {cap} terms",
                         value=total, err=abs(term))


def hyp_pfq_dd(params: HyperParams, z: float, prec: Precision = DEFAULT):
    """Double-double twin of hyp_pfq: returns ((hi, lo), err_estimate)."""
    if len(params.upper) > len(params.lower) + 1:
        raise DomainError("divergent pFq: p > q + 1")
    tmax = params.terminating_index()
    sigma = params.excess()
    saalschutz = len(params.upper) == len(params.lower) + 1
    if tmax is None:
        if abs(z) > 1.0:
            raise DomainError("|z| > 1 requires a continuation operation")
        if z == 1.0 and saalschutz and sigma <= 0.0:
            raise DomainError("series diverges at z = 1 (nonpositive excess)")
    uf = tuple(map(float, params.upper))
    lf = tuple(map(float, params.lower))

    def ratio(k: int) -> float:
        r = z
        for a in uf:
            r *= a + k
        for b in lf:
            r /= b + k
        return r / (k + 1)

    unit = tmax is None and z == 1.0 and saalschutz
    return _hyp_series_dd(params, z, prec, tmax, sigma, ratio, unit)


def _hyp_series_dd(params, z, prec, tmax, sigma, ratio_fn, unit):
    upper_dd = [dd.from_fraction(a) if isinstance(a, Fraction) else dd.dd(float(a))
                for a in params.upper]
    lower_dd = [dd.from_fraction(b) if isinstance(b, Fraction) else dd.dd(float(b))
                for b in params.lower]
    z_dd = dd.dd(z)
    term = dd.ONE
    total = dd.ONE
    small_streak = 0
    if tmax is not None:
        cap = min(prec.max_terms, tmax + 1)
    elif unit:
        cap = min(prec.max_terms, max(_Z1_CAP, 4000))
    else:
        cap = prec.max_terms
    tol = max(prec.target_rel_error, 1e-31)
    k = 0
    for k in range(cap):
        num = z_dd
        for a in upper_dd:
            num = dd.mul(num, dd.add_d(a, float(k)))
        term = dd.mul(term, num)
        for b in lower_dd:
            term = dd.div(term, dd.add_d(b, float(k)))
        term = dd.div_d(term, float(k + 1))
        total = dd.add(total, term)
        if tmax is not None:
            continue
        if unit:
            if abs(term[0]) < 1e-4 * tol * abs(total[0]):
                break
            continue
        if abs(term[0]) < tol * abs(total[0]):
            small_streak += 1
            if small_streak >= 3:
                r = abs(ratio_fn(k + 1))
                err = abs(term[0]) * (r / (1.0 - r) if r < 1.0 else 1.0)
                return total, err
        else:
            small_streak = 0
    if tmax is not None:
        return total, 0.0
    if unit:
        tail, err = _tail_completion(ratio_fn, dd.to_float(term), k + 1, sigma)
        return dd.add_d(total, tail), err
    raise NonConvergence(f"pFq(dd) did not converge in {cap} terms",
                         value=dd.to_float(total), err=abs(term[0]))


def hyp2f1(a, b, c, z, prec: Precision = DEFAULT) -> float:
    return hyp_pfq(HyperParams((a, b), (c,)), z, prec).value


def hyp32_log_continuation(z: float, prec: Precision = DEFAULT) -> float:
    """Re 3F2(1/2,1/2,1/2; 5/6,7/6; z) for z > 1, via the explicit
    logarithmic solution:

        log(108 z)/(2 sqrt(3z)) * 3F2(1/3,1/2,2/3; 1,1; 1/z)
        + (2 sqrt(3z))^{-1} sum_n (1/3)_n (1/2)_n (2/3)_n / n!^3
                                  * z^{-n} (5 H_n - 2 H_{2n} - 3 H_{3n}).
    """
    if z <= 1.0:
        raise DomainError("hyp32_log_continuation wants z > 1")
    w = 1.0 / z
    c = 1.0  # (1/3)_n (1/2)_n (2/3)_n / n!^3 * w^n
    f1 = 1.0
    hsum = 0.0
    h1 = h2 = h3 = 0.0
    tol = prec.target_rel_error
    converged = False
    for n in range(1, prec.max_terms):
        c *= (n - 2.0 / 3.0) * (n - 0.5) * (n - 1.0 / 3.0) / float(n) ** 3 * w
        h1 += 1.0 / n
        h2 += 1.0 / (2 * n - 1) + 0.5 / n
        h3 += 1.0 / (3 * n - 2) + 1.0 / (3 * n - 1) + 1.0 / (3.0 * n)
        f1 += c
        weight = 5.0 * h1 - 2.0 * h2 - 3.0 * h3
        hsum += c * weight
        if n > 3 and c * (abs(weight) + 1.0) < tol * max(abs(f1), 1.0):
            converged = True
            break
    if not converged:
        raise NonConvergence("hyp32_log_continuation stalled (z too close to 1)")
    pref = 0.5 / math.sqrt(3.0 * z)
    return pref * (math.log(108.0 * z) * f1 + hsum)
