"""The combinatorial identity suite behind the characteristic polynomial.

Both sides of the square/product identity are computed independently:
the left-hand side is an elementary-symmetric DP over the squares
(n-2m)^2, the right-hand side a gap-2 ascending-sequence DP over the
weights alpha (n+1-alpha).  F_{M,k}(X), the generating polynomials
Phi_M(X, u) and the five related identities are checked as exact
polynomial equalities.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..errors import GuardExceeded
from .polys import BivarPoly, Poly, binom_poly

ZAGIER_GUARD_N = 60
ZAGIER_GUARD_J = 12
FMK_GUARD_M = 40


def zagier_sides(n: int, j: int) -> tuple:
    """(lhs, rhs) of the square/product identity, exact big integers.

    lhs: sum over 0 <= m_1 < ... < m_j < n/2 of prod (n - 2 m_i)^2;
    rhs: sum over 1 <= a_1, a_i <= a_{i+1} - 2, a_j <= n of
         prod a_i (n + 1 - a_i).
    """
    if not (1 <= n <= ZAGIER_GUARD_N) or not (1 <= j <= ZAGIER_GUARD_J):
        raise GuardExceeded(
            f"zagier_sides guard: n <= {ZAGIER_GUARD_N}, j <= {ZAGIER_GUARD_J}")
    # lhs: coefficient of t^j in prod_m (1 + (n-2m)^2 t)
    coeffs = [1] + [0] * j
    m = 0
    while 2 * m < n:
        v = (n - 2 * m) ** 2
        for ell in range(min(j, m + 1), 0, -1):
            coeffs[ell] += v * coeffs[ell - 1]
        m += 1
    lhs = coeffs[j]
    # rhs: ascending gap-2 DP
    prev2 = [1] + [0] * j
    prev1 = [1] + [0] * j
    for a in range(1, n + 1):
        w = a * (n + 1 - a)
        cur = [1] + [prev1[ell] + w * prev2[ell - 1] for ell in range(1, j + 1)]
        prev2, prev1 = prev1, cur
    rhs = prev1[j]
    return lhs, rhs


@lru_cache(maxsize=None)
def fmk_poly(M: int, k: int) -> Poly:
    """F_{M,k}(X) = sum over 0 < j_1 < ... < j_k < M (gaps >= 2) of
    prod j_s (X - j_s); zero unless M >= 2k >= 0."""
    if M > FMK_GUARD_M or M < 0 or k < 0:
        raise GuardExceeded(f"fmk_poly guard: 0 <= M <= {FMK_GUARD_M}")
    if k == 0:
        return Poly((1,))
    if M < 2 * k:
        return Poly()
    # DP over the largest admitted value a < M
    prev2 = [Poly((1,))] + [Poly()] * k  # values <= -1 (none)
    prev1 = [Poly((1,))] + [Poly()] * k  # values <= 0
    for a in range(1, M):
        w = Poly((-a * a, a))  # a (X - a)
        cur = [Poly((1,))]
        for ell in range(1, k + 1):
            cur.append(prev1[ell] + w * prev2[ell - 1])
        prev2, prev1 = prev1, cur
    return prev1[k]


@lru_cache(maxsize=None)
def phi_poly(M: int) -> BivarPoly:
    """Phi_M(X, u) = sum_k (-1)^k F_{M,k}(X) u^{M-2k}, by the recursion
    Phi_{M+1} = u Phi_M - M (X - M) Phi_{M-1}."""
    if M > FMK_GUARD_M or M < 0:
        raise GuardExceeded(f"phi_poly guard: 0 <= M <= {FMK_GUARD_M}")
    if M == 0:
        return BivarPoly.const(1)
    if M == 1:
        return BivarPoly.var_u()
    u = BivarPoly.var_u()
    x = BivarPoly.var_x()
    prev, cur = BivarPoly.const(1), u
    for m in range(1, M):
        nxt = u * cur - (x - BivarPoly.const(m)) * m * prev
        prev, cur = cur, nxt
    return cur


def _p_m(M: int) -> Poly:
    """P_M(u) = prod over |lam| < M, lam != M (mod 2) of (u - lam)."""
    roots = [lam for lam in range(-M + 1, M) if (lam - M) % 2 != 0]
    return Poly.from_roots(roots)


def _sigma_k(values, k: int) -> int:
    coeffs = [1] + [0] * k
    for i, v in enumerate(values):
        for ell in range(min(k, i + 1), 0, -1):
            coeffs[ell] += v * coeffs[ell - 1]
    return coeffs[k]


def appendix_identities(m_max: int = 20, n_max: int = 10) -> dict:
    """Run the full exact identity suite; returns {name: {...}} report."""
    if m_max > 20 or n_max > 10:
        raise GuardExceeded("appendix_identities guard: m_max <= 20, n_max <= 10")
    report = {}

    # F recursion: F_{M+1,k+1} - F_{M,k+1} = M (X-M) F_{M-1,k}
    checked = 0
    ok = True
    for m in range(1, m_max):
        for k in range(0, m // 2 + 1):
            lhs = fmk_poly(m + 1, k + 1) - fmk_poly(m, k + 1)
            rhs = Poly((-m * m, m)) * fmk_poly(m - 1, k)
            ok &= lhs == rhs
            checked += 1
    report["fmk_recursion"] = {"checked": checked, "pass": bool(ok)}

    # F_{M,k}(M) = sigma_k of odd/even squares below M
    checked = 0
    ok = True
    for m in range(0, min(m_max, 16) + 1):
        squares = ([i * i for i in range(1, m, 2)] if m % 2 == 0
                   else [i * i for i in range(2, m, 2)])
        for k in range(0, m // 2 + 1):
            ok &= fmk_poly(m, k)(m) == _sigma_k(squares, k)
            checked += 1
    report["fmk_at_m"] = {"checked": checked, "pass": bool(ok)}

    # Phi assembly: coefficients of Phi_M are (-1)^k F_{M,k}
    checked = 0
    ok = True
    for m in range(0, m_max + 1):
        phi = phi_poly(m)
        assembled = BivarPoly()
        for k in range(0, m // 2 + 1):
            f = fmk_poly(m, k)
            for i, ci in enumerate(f.c):
                if ci:
                    assembled += BivarPoly({(i, m - 2 * k): ci * (-1) ** k})
        ok &= phi == assembled
        checked += 1
    report["phi_assembly"] = {"checked": checked, "pass": bool(ok)}

    # idPhi: Phi_M(M, u) = P_M(u)
    checked = 0
    ok = True
    for m in range(0, m_max + 1):
        ok &= phi_poly(m).substitute_x(m) == _p_m(m)
        checked += 1
    report["id_phi"] = {"checked": checked, "pass": bool(ok)}

    # Phi1: 2^n Phi_M(M-n, u) = sum_j C(n,j) P_M(u - n + 2j)
    checked = 0
    ok = True
    for m in range(0, m_max + 1):
        pm = _p_m(m)
        for n in range(0, n_max + 1):
            lhs = phi_poly(m).substitute_x(m - n) * Fraction(2**n)
            rhs = Poly()
            for j in range(n + 1):
                rhs = rhs + pm.compose_linear(1, 2 * j - n) * Fraction(comb(n, j))
            ok &= lhs == rhs
            checked += 1
    report["phi1"] = {"checked": checked, "pass": bool(ok)}

    # Phi2: Phi_{M+n}(M, u) = Phi_M(M, u) Phi_n(-M, u)
    checked = 0
    ok = True
    for m in range(0, m_max + 1):
        for n in range(0, n_max + 1):
            if m + n > FMK_GUARD_M:
                continue
            lhs = phi_poly(m + n).substitute_x(m)
            rhs = phi_poly(m).substitute_x(m) * phi_poly(n).substitute_x(-m)
            ok &= lhs == rhs
            checked += 1
    report["phi2"] = {"checked": checked, "pass": bool(ok)}

    # Phi3: Phi_M(x+y+1, y-x)/M! = sum_j (-1)^j C(x,j) C(y,M-j)
    checked = 0
    ok = True
    x_plus_y_1 = BivarPoly({(1, 0): 1, (0, 1): 1, (0, 0): 1})
    y_minus_x = BivarPoly({(0, 1): 1, (1, 0): -1})
    fact = 1
    for m in range(0, m_max + 1):
        if m:
            fact *= m
        lhs = phi_poly(m).substitute_linear(x_plus_y_1, y_minus_x)
        rhs = BivarPoly()
        for j in range(m + 1):
            rhs += binom_poly(True, j) * binom_poly(False, m - j) * Fraction((-1) ** j)
        ok &= lhs == rhs * Fraction(fact)
        checked += 1
    report["phi3"] = {"checked": checked, "pass": bool(ok)}

    # sumG: the generating function (1-T)^x (1+T)^y forces the recursion
    # (M+1) G_{M+1} = (y-x) G_M + (M-x-y-1) G_{M-1} on its coefficients
    checked = 0
    ok = True

    def g_m(m: int) -> BivarPoly:
        acc = BivarPoly()
        for j in range(m + 1):
            acc += binom_poly(True, j) * binom_poly(False, m - j) * Fraction((-1) ** j)
        return acc

    gs = [g_m(m) for m in range(m_max + 1)]
    y_minus_x_poly = BivarPoly({(0, 1): 1, (1, 0): -1})
    for m in range(1, m_max):
        lhs = gs[m + 1] * Fraction(m + 1)
        shift = BivarPoly({(0, 0): m - 1, (1, 0): -1, (0, 1): -1})  # M - x - y - 1
        rhs = y_minus_x_poly * gs[m] + shift * gs[m - 1]
        ok &= lhs == rhs
        checked += 1
    report["sum_g"] = {"checked": checked, "pass": bool(ok)}

    report["all_pass"] = all(v["pass"] for k, v in report.items() if k != "all_pass")
    return report
