"""Complete elliptic integrals via the AGM, and the cubic AGM.

Conventions: modulus k (not the parameter m = k^2), so
K(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{-1/2} dt = pi / (2 AGM(1, k')).
"""

from __future__ import annotations

import math

from ..errors import DomainError, NonConvergence, SingularInput
from .precision import DEFAULT, Precision


def agm(a: float, b: float, tol: float = 1e-16) -> float:
    """Arithmetic-geometric mean of nonnegative a, b."""
    if a < 0.0 or b < 0.0:
        raise DomainError("agm wants nonnegative arguments")
    for _ in range(60):
        if abs(a - b) <= tol * max(abs(a), 1e-300):
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise NonConvergence("agm did not settle")


def elliptic_k(k: float, prec: Precision = DEFAULT) -> float:
    """Complete elliptic integral of the first kind, 0 <= k < 1."""
    if not 0.0 <= k:
        raise DomainError("elliptic_k wants 0 <= k < 1")
    if k == 1.0:
        raise SingularInput("elliptic_k diverges at k = 1")
    if k > 1.0:
        raise DomainError("modulus > 1: use the reciprocal-modulus reduction")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return 0.5 * math.pi / agm(1.0, kp, prec.target_rel_error)


def elliptic_e(k: float, prec: Precision = DEFAULT) -> float:
    """Complete elliptic integral of the second kind, 0 <= k <= 1."""
    if not 0.0 <= k <= 1.0:
        raise DomainError("elliptic_e wants 0 <= k <= 1")
    if k == 1.0:
        return 1.0
    a = 1.0
    b = math.sqrt((1.0 - k) * (1.0 + k))
    c = k
    s = 0.5 * c * c
    mul = 1.0
    for _ in range(60):
        if abs(c) < prec.target_rel_error * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        mul *= 2.0
        s += 0.5 * mul * c * c
    else:
        raise NonConvergence("elliptic_e AGM did not settle")
    return 0.5 * math.pi / a * (1.0 - s)


def elliptic_k_above_one(k: float, prec: Precision = DEFAULT) -> float:
    """Re K(k) for modulus k > 1, by the reciprocal-modulus identity
    Re K(k) = K(1/k) / k."""
    if k <= 1.0:
        raise DomainError("elliptic_k_above_one wants k > 1")
    return elliptic_k(1.0 / k, prec) / k


def agm3(a: float, b: float, prec: Precision = DEFAULT) -> float:
    """Cubic AGM: a' = (a+2b)/3, b' = cbrt(b (a^2+ab+b^2)/3).

    Converges cubically to the common limit; 1/AG3(1, s) evaluates the
    2F1(1/3, 2/3; 1; 1 - s^3) series.
    """
    if a < 0.0 or b < 0.0:
        raise DomainError("agm3 wants nonnegative arguments")
    if a == 0.0 and b == 0.0:
        raise DomainError("agm3(0, 0) is undefined")
    for _ in range(200):
        if abs(a - b) <= prec.target_rel_error * max(a, 1e-300):
            return a
        a, b = (a + 2.0 * b) / 3.0, (b * (a * a + a * b + b * b) / 3.0) ** (1.0 / 3.0)
    # b = 0 exactly never meets the relative gap test: the limit is 0
    if b == 0.0:
        return 0.0
    raise NonConvergence("agm3 did not settle")
