"""Dedekind eta: pentagonal-number series and product form.

eta(tau) = q^{1/24} prod (1-q^n) = q^{1/24} sum_{n in Z} (-1)^n q^{n(3n+1)/2}
with q = e^{2 pi i tau}, Im tau > 0.  Both forms are exposed so they can
cross-check each other; q^{1/24} is always exp(pi i tau / 12), the branch
consistent with the series.  eta_real_nome evaluates eta at a real nome
q = e^{-t} (the convention of the Mahler-measure integrals), switching to
the modular image sqrt(2 pi / t) eta(e^{-4 pi^2 / t}) for small t where
the direct series converges slowly.
"""

from __future__ import annotations

import cmath
import math

from ..errors import DomainError
from .precision import DEFAULT, Precision

_TRUNC = 1e-20  # include pentagonal terms until |q|^{n(3n+1)/2} < 1e-20 |sum|


def _eta_series_from_q(q, q24):
    s = 1.0 + 0.0j if isinstance(q, complex) else 1.0
    aq = abs(q)
    if aq >= 1.0:
        raise DomainError("eta series wants |q| < 1")
    n = 1
    while True:
        e_plus = n * (3 * n + 1) // 2
        e_minus = n * (3 * n - 1) // 2
        term = (-1) ** n * (q ** e_plus + q ** e_minus)
        s += term
        if aq ** e_minus < _TRUNC * abs(s):
            break
        n += 1
        if n > 10_000:
            raise DomainError("eta series truncation failed (|q| too close to 1)")
    return q24 * s


def _eta_product_from_q(q, q24):
    aq = abs(q)
    if aq >= 1.0:
        raise DomainError("eta product wants |q| < 1")
    p = 1.0 + 0.0j if isinstance(q, complex) else 1.0
    qn = q
    n = 1
    while True:
        p *= 1.0 - qn
        if aq ** n < _TRUNC:
            break
        qn *= q
        n += 1
        if n > 200_000:
            raise DomainError("eta product truncation failed")
    return q24 * p


def dedekind_eta(tau: complex, prec: Precision = DEFAULT) -> complex:
    """eta(tau) for Im tau > 0, by the pentagonal-number series."""
    if tau.imag <= 0.0:
        raise DomainError("dedekind_eta wants Im tau > 0")
    q = cmath.exp(2j * cmath.pi * tau)
    q24 = cmath.exp(1j * cmath.pi * tau / 12.0)
    return _eta_series_from_q(q, q24)


def dedekind_eta_product(tau: complex, prec: Precision = DEFAULT) -> complex:
    """Product-form twin of dedekind_eta (self-check surface)."""
    if tau.imag <= 0.0:
        raise DomainError("dedekind_eta wants Im tau > 0")
    q = cmath.exp(2j * cmath.pi * tau)
    q24 = cmath.exp(1j * cmath.pi * tau / 12.0)
    return _eta_product_from_q(q, q24)


def eta_nome(q: complex, prec: Precision = DEFAULT, form: str = "series") -> complex:
    """eta evaluated directly at the nome q (principal 24th root).

    For nomes off the positive real axis use dedekind_eta(tau) instead;
    the principal branch of q^{1/24} only matches exp(pi i tau/12) when
    -pi < arg q < pi maps back to the fundamental choice of tau.
    """
    qc = complex(q)
    q24 = cmath.exp(cmath.log(qc) / 24.0)
    if form == "series":
        return _eta_series_from_q(qc, q24)
    return _eta_product_from_q(qc, q24)


def eta_real_nome(t: float, prec: Precision = DEFAULT) -> float:
    """eta(e^{-t}) for t > 0 (real nome), modularly accelerated for small t."""
    if t <= 0.0:
        raise DomainError("eta_real_nome wants t > 0")
    if t < 2.0:
        # eta(e^{-t}) = sqrt(2 pi / t) eta(e^{-4 pi^2 / t})
        return math.sqrt(2.0 * math.pi / t) * eta_real_nome(4.0 * math.pi**2 / t, prec)
    arg = t / 24.0
    if arg > 700.0:
        return 0.0  # underflows double precision
    q = math.exp(-t)
    q24 = math.exp(-arg)
    return float(_eta_series_from_q(q, q24))
