"""Shared quadrature and series-acceleration toolkit.

All integrand callables must accept numpy arrays (vectorised evaluation);
the oscillatory helpers work on sequences of panel integrals.

tanh_sinh handles integrable endpoint singularities (log, inverse square
root); adaptive_gauss is a G7/K15-style bisection scheme for smooth
integrands; euler_transform / levin_u accelerate near-alternating panel
sums per the region-dispatch strategy used by the density evaluators.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import NonConvergence
from .numerics import ddouble as dd


@lru_cache(maxsize=32)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def fixed_gauss(f, a: float, b: float, n: int = 24) -> float:
    """Single Gauss-Legendre panel with n nodes."""
    x, w = _leggauss(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * float(np.dot(w, f(mid + half * x)))


def adaptive_gauss(f, a: float, b: float, tol: float = 1e-12,
                   max_depth: int = 28) -> float:
    """Adaptive bisection with embedded G10/G21 error estimates."""
    x10, w10 = _leggauss(10)
    x21, w21 = _leggauss(21)

    total = 0.0
    stack = [(a, b, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        fy = f(mid + half * x21)
        coarse = half * float(np.dot(w10, f(mid + half * x10)))
        fine = half * float(np.dot(w21, fy))
        if abs(fine - coarse) < tol * max(1.0, abs(fine)) or depth >= max_depth:
            if depth >= max_depth and abs(fine - coarse) > 1e3 * tol:
                raise NonConvergence(f"adaptive_gauss stalled on [{lo},{hi}]")
            total += fine
        else:
            stack.append((lo, mid, depth + 1))
            stack.append((mid, hi, depth + 1))
    return total


def tanh_sinh(f, a: float, b: float, tol: float = 1e-12,
              max_level: int = 12) -> float:
    """Double-exponential quadrature on (a, b), endpoint-singularity safe.

    Nodes are fed to f as distances folded in from the endpoints, so an
    integrable blow-up at a or b sees accurately placed abscissas.
    """
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    prev = None
    t_max = 3.8  # tanh(pi/2 sinh 3.8) is within 1e-300 of 1

    for level in range(2, max_level + 1):
        h = 1.0 / (1 << level)
        k = np.arange(-int(t_max / h), int(t_max / h) + 1)
        t = k * h
        w_arg = 0.5 * math.pi * np.sinh(t)
        u = np.tanh(w_arg)
        # distance of the node to the nearer endpoint, computed stably
        e2 = np.exp(-2.0 * np.abs(w_arg))
        delta = 2.0 * e2 / (1.0 + e2) * half
        x = np.where(t >= 0, b - delta, a + delta)
        x = np.where(np.abs(t) < 1e-14, mid + half * u, x)
        weight = 0.5 * math.pi * np.cosh(t) / np.cosh(w_arg) ** 2
        keep = weight > 1e-280
        val = f(x[keep])
        est = h * half * float(np.dot(weight[keep], val))
        if prev is not None and abs(est - prev) < tol * max(1.0, abs(est)):
            return est
        prev = est
    if prev is None or not math.isfinite(prev):
        raise NonConvergence("tanh_sinh failed")
    return prev


# -- sequence acceleration -----------------------------------------------------

def euler_transform(terms) -> tuple:
    """Euler (iterated averaging) estimate for sum of near-alternating terms.

    Returns (estimate, err); works on the tail of up to 8 difference rows
    as required by the oscillatory-quadrature design.
    """
    terms = list(terms)
    if len(terms) < 4:
        s = sum(terms)
        return s, abs(terms[-1]) if terms else 0.0
    partial = np.cumsum(terms)
    depth = min(8, len(partial) - 1)
    row = partial.astype(float)
    last = row[-1]
    for _ in range(depth):
        row = 0.5 * (row[:-1] + row[1:])
        last = row[-1]
    err = abs(row[-1] - row[-2]) if len(row) >= 2 else abs(terms[-1])
    return float(last), float(err)


def levin_u(terms, beta: float = 1.0) -> tuple:
    """Levin u-transform estimate of sum(terms); returns (estimate, err).

    The classic recursive numerator/denominator triangles; remainder
    estimates omega_n = (beta + n) a_n.
    """
    a = [float(t) for t in terms]
    n_terms = len(a)
    if n_terms < 3:
        s = sum(a)
        return s, abs(a[-1]) if a else 0.0
    s = np.cumsum(a)
    num = []
    den = []
    for n in range(n_terms):
        omega = (beta + n) * a[n]
        if omega == 0.0:
            omega = 1e-300
        num.append(s[n] / omega)
        den.append(1.0 / omega)
    estimates = []
    for k in range(1, n_terms):
        new_num = []
        new_den = []
        for n in range(n_terms - k):
            c = (beta + n) * (beta + n + k - 1) ** (k - 2) / (beta + n + k) ** (k - 1) \
                if k >= 2 else (beta + n) / (beta + n + k)
            new_num.append(num[n + 1] - c * num[n])
            new_den.append(den[n + 1] - c * den[n])
        num, den = new_num, new_den
        if abs(den[0]) > 1e-300:
            estimates.append(num[0] / den[0])
    if not estimates:
        return float(s[-1]), abs(a[-1])
    if len(estimates) == 1:
        return estimates[0], abs(a[-1])
    tail = estimates[-min(4, len(estimates)):]
    err = max(abs(tail[i + 1] - tail[i]) for i in range(len(tail) - 1))
    return estimates[-1], err


def accelerate_panel_sums(panels, tol: float) -> tuple:
    """Best of Euler-then-Levin on a sequence of signed panel integrals.

    Euler first (cheap, robust on strictly alternating tails); switch to
    the Levin estimate only when Euler stalls above tol.  Returns
    (value, err, method_tag).
    """
    e_val, e_err = euler_transform(panels)
    if e_err < tol:
        return e_val, e_err, "euler"
    l_val, l_err = levin_u(panels)
    if l_err < e_err:
        return l_val, l_err, "levin"
    return e_val, e_err, "euler"


def aitken(seq) -> float:
    """One Aitken delta-squared extrapolation of the last three entries."""
    s0, s1, s2 = seq[-3], seq[-2], seq[-1]
    denom = (s2 - s1) - (s1 - s0)
    if denom == 0.0:
        return s2
    return s2 - (s2 - s1) ** 2 / denom


def richardson(seq, order: float = 1.0) -> float:
    """Richardson extrapolation assuming error ~ C / n^order between rows."""
    rows = [list(map(float, seq))]
    k = 1
    while len(rows[-1]) > 1:
        prev = rows[-1]
        factor = 2.0 ** (order + k - 1)
        rows.append([(factor * prev[i + 1] - prev[i]) / (factor - 1.0)
                     for i in range(len(prev) - 1)])
        k += 1
    return rows[-1][0]
