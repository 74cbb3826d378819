"""Analytic continuation of W_n(s) leftwards via the moment recurrence.

The even-moment recurrence, read at k = s/2, links W_n(s) to
W_n(s+2), ..., W_n(s+2 lambda).  Solving for the lowest term steps any
non-pole s below -2 up into the strip where a direct representation
exists (single hypergeometric for n=3, the K0^3 I0 integral for n=4,
the J-route integral for n=5)."""

from __future__ import annotations

import math

from ..errors import PoleError
from ..numerics.precision import DEFAULT, Precision
from .bessel_moments import bessel_moment, broadhurst_moment
from .hyper_moments import w3_hyp
from .recurrence import verrill_operator
from .value import MomentValue


def _is_pole(n: int, s: float) -> bool:
    # W_3, W_5: simple poles at -2, -4, ...; W_4: double poles there
    return s <= -2.0 and s == math.floor(s) and int(s) % 2 == 0


def _base_value(n: int, s: float, prec: Precision) -> MomentValue:
    if n == 3:
        return w3_hyp(s, prec)
    if n == 4:
        return bessel_moment(4, s, prec)
    return broadhurst_moment(5, s, prec)


def continue_by_functional_eq(n: int, s: float,
                              prec: Precision = DEFAULT) -> MomentValue:
    """W_n(s) for n in {3,4,5} at any non-pole real s."""
    if n not in (3, 4, 5):
        raise PoleError("continue_by_functional_eq supports n in {3, 4, 5}")
    if _is_pole(n, s):
        raise PoleError(f"W_{n} has a pole at s = {s}")
    if s > -2.0:
        base = _base_value(n, s, prec)
        return MomentValue(base.value, base.err, "functional_eq")
    op = verrill_operator(n)
    lam = op.order
    q = [c for c in op.coeffs]

    cache = {}

    def w(t: float) -> MomentValue:
        key = round(t, 12)
        if key in cache:
            return cache[key]
        if t > -2.0:
            mv = _base_value(n, t, prec)
        else:
            k = 0.5 * t
            q0 = float(q[0](k))
            if abs(q0) < 1e-12:
                raise PoleError(f"recurrence degenerates at s = {t}")
            acc = 0.0
            err = 0.0
            for j in range(1, lam + 1):
                couple = float(q[j](k))
                upper = w(t + 2.0 * j)
                acc -= couple * upper.value
                err += abs(couple) * upper.err
            mv = MomentValue(acc / q0, err / abs(q0) + 1e-15 * abs(acc / q0),
                             "functional_eq")
        cache[key] = mv
        return mv

    return w(s)
