"""Apply theta-form operators to log-power series, exactly.

theta acts on a coefficient pair at exponent e by
theta[(a + b log x) x^e] = (e a + b) x^e + e b x^e log x,
so each P(theta) is a per-exponent linear map on (a, b); a term x^m then
shifts the coefficient index by m.  Coefficients may be Fractions or
tuples of Fractions (linear combinations over unresolved seeds), which
lets the p5 check run with symbolic initial residues.
"""

from __future__ import annotations

from fractions import Fraction

from ..densities.series import LogPowerSeries
from .theta import ThetaOperator

_F0 = Fraction(0)


def _zero_like(v):
    if isinstance(v, tuple):
        return tuple(_F0 for _ in v)
    return _F0


def _add(u, v):
    if isinstance(u, tuple):
        return tuple(a + b for a, b in zip(u, v))
    return u + v


def _scale(v, q):
    if isinstance(v, tuple):
        return tuple(a * q for a in v)
    return v * q


def _maxabs(v):
    if isinstance(v, tuple):
        return max((abs(c) for c in v), default=_F0)
    return abs(v)


def apply_to_series(op: ThetaOperator, series: LogPowerSeries, K: int):
    """Coefficients of op(series) at exponents alpha+0 .. alpha+K.

    Returns (a_out, b_out) lists in the same coefficient algebra as the
    input; entries beyond the reliable window (K minus the operator's
    x-depth) are not meaningful and are not returned.
    """
    alpha = Fraction(series.alpha)
    n_in = len(series.a)
    a_out = [_zero_like(series.a[0]) for _ in range(K + 1)]
    b_out = [_zero_like(series.a[0]) for _ in range(K + 1)]
    for m, p in op.terms:
        for c in range(n_in):
            tgt = c + m
            if tgt > K:
                continue
            e = alpha + c
            va, vb = series.a[c], series.b[c]
            acc_a, acc_b = _zero_like(va), _zero_like(va)
            # Horner-free: apply powers of theta successively
            ta, tb = va, vb
            for i, pi in enumerate(p.c):
                if pi:
                    acc_a = _add(acc_a, _scale(ta, pi))
                    acc_b = _add(acc_b, _scale(tb, pi))
                if i < p.degree():
                    ta, tb = _add(_scale(ta, e), tb), _scale(tb, e)
            a_out[tgt] = _add(a_out[tgt], acc_a)
            b_out[tgt] = _add(b_out[tgt], acc_b)
    return a_out, b_out


def annihilation_residual(op: ThetaOperator, series: LogPowerSeries, K: int):
    """Max |coefficient| of op(series) among exponent orders <= alpha+K.

    The series must carry at least K + (max x-power) coefficients so that
    every reported order is fully formed.
    """
    depth = max(m for m, _ in op.terms)
    if len(series.a) < K + depth + 1:
        raise ValueError(f"series too short: need {K + depth + 1} coefficients")
    a_out, b_out = apply_to_series(op, series, K)
    worst = _F0
    for va, vb in zip(a_out, b_out):
        worst = max(worst, _maxabs(va), _maxabs(vb))
    return worst
