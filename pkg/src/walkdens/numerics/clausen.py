"""Clausen function Cl_2(theta) = sum_{n>=1} sin(n theta)/n^2.

Evaluation uses the log-sine integral split: on (0, pi],

    Cl_2(t) = t - t log t + sum_{k>=1} zeta(2k)/(k(2k+1)) (t/2pi)^{2k} t,

which follows from integrating log(2 sin(t/2)) = log t + log(sinc(t/2)).
Oddness and 2pi-periodicity are applied first, so they hold exactly.
"""

from __future__ import annotations

import math

from .gammafn import zeta_even
from .precision import DEFAULT, Precision

CL2_MAX = 1.0149416064096536250212025542745203  # Cl_2(pi/3), the maximum


def clausen(theta: float, prec: Precision = DEFAULT) -> float:
    t = math.fmod(theta, 2.0 * math.pi)
    if t > math.pi:
        t -= 2.0 * math.pi
    elif t < -math.pi:
        t += 2.0 * math.pi
    sign = 1.0
    if t < 0.0:
        t = -t
        sign = -1.0
    if t == 0.0 or t == math.pi:
        return 0.0
    s = t - t * math.log(t)
    ratio = (t / (2.0 * math.pi)) ** 2
    w = 1.0
    for k in range(1, prec.max_terms):
        w *= ratio
        term = zeta_even(2 * k) / (k * (2 * k + 1)) * w * t
        s += term
        if term < prec.target_rel_error * abs(s):
            break
    return sign * s
