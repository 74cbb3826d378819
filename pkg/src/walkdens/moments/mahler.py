"""Eta-kernel integrals conjecturally equal to W_5'(0) and W_6'(0).

    W_5'(0) ?= (15/(4 pi^2))^{5/2} int_0^inf (eta^3(e^{-3t}) eta^3(e^{-5t})
               + eta^3(e^{-t}) eta^3(e^{-15t})) t^3 dt
    W_6'(0) ?= (3/pi^2)^3 int_0^inf eta^2(e^{-t}) eta^2(e^{-2t})
               eta^2(e^{-3t}) eta^2(e^{-6t}) t^4 dt

The integrands vanish double-exponentially at both ends (the small-t
side through the modular transform inside eta_real_nome)."""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError
from ..numerics.eta import eta_real_nome
from ..numerics.precision import DEFAULT, Precision
from ..quadrature import adaptive_gauss


def mahler_kernel(which: str, t: float) -> float:
    """The positive integrand before the prefactor."""
    if t <= 0.0:
        return 0.0
    if which == "w5":
        a = eta_real_nome(3.0 * t) ** 3 * eta_real_nome(5.0 * t) ** 3
        b = eta_real_nome(t) ** 3 * eta_real_nome(15.0 * t) ** 3
        return (a + b) * t**3
    if which == "w6":
        prod = (eta_real_nome(t) * eta_real_nome(2.0 * t)
                * eta_real_nome(3.0 * t) * eta_real_nome(6.0 * t)) ** 2
        return prod * t**4
    raise DomainError("mahler_eta_integral supports 'w5' and 'w6'")


def mahler_eta_integral(which: str, prec: Precision = DEFAULT) -> float:
    if which not in ("w5", "w6"):
        raise DomainError("mahler_eta_integral supports 'w5' and 'w6'")

    def f(ts):
        return np.array([mahler_kernel(which, float(t)) for t in np.atleast_1d(ts)])

    # kernels peak near t ~ 1-3 and die like exp(-2t/3) / exp(-t/2)
    t_hi = 130.0 if which == "w5" else 170.0
    integral = adaptive_gauss(f, 1e-3, t_hi, tol=prec.target_rel_error * 0.1)
    if which == "w5":
        pref = (15.0 / (4.0 * math.pi**2)) ** 2.5
    else:
        pref = (3.0 / math.pi**2) ** 3
    return pref * integral
