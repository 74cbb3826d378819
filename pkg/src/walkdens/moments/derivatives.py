"""Derivatives of the moment functions at even integers, and the
residue/leading-coefficient combinations they determine.

Closed forms:
    W_3'(0) = Cl(pi/3)/pi                 W_4'(0) = 7 zeta(3)/(2 pi^2)
    W_3'(2) = 2 + 3 Cl(pi/3)/pi - 3 sqrt3/(2 pi)
    W_4'(2) = 3 + (14 zeta(3) - 12)/pi^2
    W_3''(0) = pi^2/12 - (2/pi) sum C(2n,n)/16^n H_{n+1/2}/(2n+1)^2
    W_4''(0) = (24 Li4(1/2) - 18 zeta(4) + 21 zeta(3) log 2
                - 6 zeta(2) log^2 2 + log^4 2)/pi^2

W_4''(2) has no closed form here and is differenced from the two-term
hypergeometric form in double-double; the five/six-step first
derivatives come from the Bessel routes, or from the two term-by-term
differentiated moment series whose inner alternating binomial sums are
evaluated in exact integer arithmetic (any fixed float precision dies
against their ~2^m cancellation by m ~ 400)."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import MethodUnavailable
from ..numerics.clausen import clausen
from ..numerics.gammafn import EULER_GAMMA, LI4_HALF, LOG2, ZETA2, ZETA3, ZETA4
from ..numerics.precision import DEFAULT, EXTENDED, Precision
from .bessel_moments import broadhurst_prime, wn_prime0_bessel
from .exact import even_moment_table
from .hyper_moments import w3_two_term, w4_two_term
from .value import MomentValue

_CL_PI3 = clausen(math.pi / 3.0)


def wn_prime(n: int, at: float, method: str = "auto",
             prec: Precision = DEFAULT) -> MomentValue:
    """W_n'(at) for at in {0, 2, 4}; methods: closed, bessel, series."""
    if at not in (0.0, 2.0, 4.0, 0, 2, 4):
        raise MethodUnavailable("wn_prime evaluates at s in {0, 2, 4}")
    at = float(at)
    if method == "auto":
        method = "closed" if (n, at) in _CLOSED_PRIME else "bessel"
    if method == "closed":
        if (n, at) not in _CLOSED_PRIME:
            raise MethodUnavailable(f"no closed form for W_{n}'({at})")
        return MomentValue(_CLOSED_PRIME[(n, at)](), 1e-15, "hyp_single")
    if method == "bessel":
        if at == 0.0:
            return wn_prime0_bessel(n, prec)
        return broadhurst_prime(n, at, prec)
    if method == "series":
        if at != 0.0:
            raise MethodUnavailable("series route only differentiates at 0")
        return wd0v2_series(n, prec=prec)
    raise MethodUnavailable(f"unknown method {method!r}")


_CLOSED_PRIME = {
    (3, 0.0): lambda: _CL_PI3 / math.pi,
    (4, 0.0): lambda: 3.5 * ZETA3 / math.pi**2,
    (3, 2.0): lambda: 2.0 + 3.0 * _CL_PI3 / math.pi
    - 1.5 * math.sqrt(3.0) / math.pi,
    (4, 2.0): lambda: 3.0 + (14.0 * ZETA3 - 12.0) / math.pi**2,
}


def w3_doubleprime0_series(prec: Precision = DEFAULT) -> float:
    """W_3''(0) by the central-binomial harmonic sum."""
    s = 0.0
    c = 1.0  # C(2n, n) / 16^n
    h = 2.0 - 2.0 * LOG2  # H_{1/2}
    for n in range(0, 400):
        if n > 0:
            c *= (2.0 * n - 1.0) / (2.0 * n) * 0.25
            h += 2.0 / (2.0 * n + 1.0)
        term = c * h / (2 * n + 1) ** 2
        s += term
        if abs(term) < 1e-17 * abs(s):
            break
    return math.pi**2 / 12.0 - 2.0 / math.pi * s


def wn_doubleprime(n: int, at: float, prec: Precision = DEFAULT) -> MomentValue:
    """W_n''(at) for n in {3, 4}, at in {0, 2}."""
    at = float(at)
    if n == 4 and at == 0.0:
        val = (24.0 * LI4_HALF - 18.0 * ZETA4 + 21.0 * ZETA3 * LOG2
               - 6.0 * ZETA2 * LOG2**2 + LOG2**4) / math.pi**2
        return MomentValue(val, 1e-15, "hyp_single")
    if n == 3 and at == 0.0:
        return MomentValue(w3_doubleprime0_series(prec), 1e-13, "hyp_single")
    if n in (3, 4) and at == 2.0:
        return _doubleprime_fd(n, at)
    raise MethodUnavailable("wn_doubleprime supports n in {3,4}, at in {0,2}")


def _two_term(n: int, s: float, prec: Precision) -> float:
    return (w3_two_term(s, prec) if n == 3 else w4_two_term(s, prec)).value


def _doubleprime_fd(n: int, at: float) -> MomentValue:
    """Five-point second difference of the two-term form, dd, Richardson."""
    def second(h: float) -> float:
        f = [_two_term(n, at + i * h, EXTENDED) for i in (-2, -1, 0, 1, 2)]
        return (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) \
            / (12.0 * h * h)

    d1 = second(1e-2)
    d2 = second(5e-3)
    val = (16.0 * d2 - d1) / 15.0
    return MomentValue(val, abs(d2 - d1) / 15.0 + 1e-12, "hyp_two_term")


def residue_from_derivatives(which: str, prec: Precision = DEFAULT) -> float:
    """Residues/leading coefficients as combinations of W', W'' values."""
    if which == "w3_res2":
        w0 = wn_prime(3, 0, "closed").value
        w2 = wn_prime(3, 2, "closed").value
        return (8.0 + 12.0 * w0 - 4.0 * w2) / 9.0
    if which == "w4_coeff2":
        w0 = wn_prime(4, 0, "closed").value
        w2 = wn_prime(4, 2, "closed").value
        return (3.0 + 4.0 * w0 - w2) / 8.0
    if which == "w4_res2":
        w0 = wn_prime(4, 0, "closed").value
        w2 = wn_prime(4, 2, "closed").value
        dd0 = wn_doubleprime(4, 0, prec).value
        dd2 = wn_doubleprime(4, 2, prec).value
        return (9.0 + 18.0 * w0 - 3.0 * w2 + 4.0 * dd0 - dd2) / 16.0
    if which == "w5_res2":
        w0 = wn_prime(5, 0, "bessel", prec).value
        w2 = wn_prime(5, 2, "bessel", prec).value
        w4 = wn_prime(5, 4, "bessel", prec).value
        return (16.0 + 1140.0 * w0 - 804.0 * w2 + 64.0 * w4) / 225.0
    if which == "w5_res4":
        res2 = residue_from_derivatives("w5_res2", prec)
        w0 = wn_prime(5, 0, "bessel", prec).value
        w2 = wn_prime(5, 2, "bessel", prec).value
        return (26.0 * res2 - 16.0 - 20.0 * w0 + 4.0 * w2) / 225.0
    raise MethodUnavailable(f"unknown residue combination {which!r}")


# -- the two term-by-term differentiated series ----------------------------------

def _iterated_aitken(partials: list) -> tuple:
    """(extrapolated value, level-to-level spread) of iterated Aitken."""
    rows = [list(partials)]
    while len(rows[-1]) >= 3:
        prev = rows[-1]
        nxt = []
        for i in range(len(prev) - 2):
            d2 = (prev[i + 2] - prev[i + 1]) - (prev[i + 1] - prev[i])
            if d2 == 0.0:
                nxt.append(prev[i + 2])
            else:
                nxt.append(prev[i + 2] - (prev[i + 2] - prev[i + 1]) ** 2 / d2)
        rows.append(nxt)
        if len(rows) > 6:
            break
    spread = abs(rows[-1][-1] - rows[-2][-1]) if len(rows) > 1 else 0.0
    if len(rows) > 2:
        spread = max(spread, 0.2 * abs(rows[-2][-1] - rows[-3][-1]))
    return rows[-1][-1], spread


def wd0v2_series(n: int, m_max: int = 400,
                 prec: Precision = DEFAULT) -> MomentValue:
    """W_n'(0) = log n - sum_{m>=1} (2m)^{-1} sum_k C(m,k)(-1)^k W_n(2k)/n^{2k}.

    Inner sums are exact integers over n^{2m}; the outer tail decays
    like a low power of 1/m with logarithmic drift, so the partial sums
    are extrapolated at geometrically spaced truncations."""
    w = even_moment_table(n, m_max)
    n2 = n * n
    marks = _geometric_marks(m_max)
    partials = {}
    total = 0.0
    for m in range(1, m_max + 1):
        num = 0
        for k in range(m + 1):
            num += (-1) ** k * math.comb(m, k) * w[k] * n2 ** (m - k)
        total += float(Fraction(num, n2 ** m)) / (2.0 * m)
        if m in marks:
            partials[m] = total
    geo = [partials[m] for m in sorted(partials) if m != 3 * m_max // 4]
    acc, spread = _iterated_aitken(geo)
    movement = abs(partials[m_max] - partials[3 * m_max // 4])
    err = max(spread, movement) + 1e-9
    val = math.log(n) - acc
    return MomentValue(val, err, "recurrence")


def _geometric_marks(m_max: int) -> set:
    marks = {m_max, 3 * m_max // 4}
    m = m_max
    while m > 20:
        m //= 2
        marks.add(m)
    return marks


def wd0v_series(n: int, m_max: int = 400,
                prec: Precision = DEFAULT) -> MomentValue:
    """W_n'(0) = log(n)/2 - gamma/2
                 - sum_{m>=2} (2m)^{-1} sum_k C(m,k)(-1)^k W_n(2k)/(k! n^k)."""
    w = even_moment_table(n, m_max)
    marks = _geometric_marks(m_max)
    partials = {}
    total = 0.0
    # exact inner sum: common denominator m! n^m
    for m in range(2, m_max + 1):
        num = 0
        fact_m = math.factorial(m)
        for k in range(m + 1):
            num += ((-1) ** k * math.comb(m, k) * w[k]
                    * (fact_m // math.factorial(k)) * n ** (m - k))
        inner = Fraction(num, fact_m * n**m)
        total += float(inner) / (2.0 * m)
        if m in marks:
            partials[m] = total
    geo = [partials[m] for m in sorted(partials) if m != 3 * m_max // 4]
    acc, spread = _iterated_aitken(geo)
    movement = abs(partials[m_max] - partials[3 * m_max // 4])
    err = max(spread, movement) + 1e-9
    val = 0.5 * math.log(n) - 0.5 * EULER_GAMMA - acc
    return MomentValue(val, err, "recurrence")
