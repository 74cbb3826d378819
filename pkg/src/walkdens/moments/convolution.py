"""W_4 from W_3 by the binomial-square convolution

    W_4(s) = sum_{j>=0} binom(s/2, j)^2 W_3(s - 2j)   (integer s).

For even s >= 0 the binomial terminates the sum; for odd s the terms
decay like 9^{-j} through the negative-odd W_3 values."""

from __future__ import annotations

import math
import warnings

from ..errors import DomainError, SlowConvergence
from ..numerics.precision import DEFAULT, Precision
from .hyper_moments import w3_hyp, w3_neg_odd
from .value import MomentValue


def convolution_w4_from_w3(s: float, J: int = 40,
                           prec: Precision = DEFAULT) -> MomentValue:
    if s != math.floor(s):
        raise DomainError("the convolution identity is asserted for integer s")
    if J < 40:
        raise DomainError("truncation J must be at least 40")
    s = int(s)
    total = 0.0
    err = 0.0
    last = 0.0
    for j in range(J + 1):
        b = _binom_half_int(s, j)
        if b == 0.0:
            break
        arg = s - 2 * j
        if arg > -2:
            w3 = w3_hyp(float(arg), prec)
        elif arg % 2 != 0:
            w3 = w3_neg_odd((-arg - 1) // 2, prec)
        else:
            raise DomainError(f"W_3 pole hit at {arg}")
        last = b * b * w3.value
        total += last
        err += b * b * w3.err
    tail = abs(last) / 8.0  # terms decay roughly like 9^{-j}
    if tail > prec.target_rel_error * max(1.0, abs(total)):
        warnings.warn("convolution tail estimate above tolerance",
                      SlowConvergence)
    return MomentValue(total, err + tail, "convolution")


def _binom_half_int(s: int, j: int) -> float:
    """binom(s/2, j) for integer s, exactly (as a float)."""
    num = 1.0
    for i in range(j):
        num *= (0.5 * s - i) / (j - i)
    return num
