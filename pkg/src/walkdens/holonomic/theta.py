"""Theta-form differential operators and the recurrence -> ODE translation.

A ThetaOperator is sum_i x^{m_i} P_i(theta) with theta = x d/dx and
exact-rational P_i.  The Mellin rules  M[x^mu f](s) = F(s+mu)  and
M[D_x f](s) = -(s-1) F(s-1)  give  M[theta f](s) = -s F(s), so a term
x^mu P(theta) acts on the transform side as P(-(s+mu)) F(s+mu).
Writing the moment recurrence in descending form sum_j c_j(k) f(k-j) = 0
with f(k) = W_n(2k) = M[p_n](2k+1) therefore translates to the operator

    sum_j x^{2(lam-j)} P_j(theta),   P_j(u) = c_j((2j - 1 - u)/2),

normalized to content-free integer coefficients with the top x-power's
polynomial carrying a positive leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from ..moments.recurrence import RecurrenceOperator
from .polys import Poly


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return _stirling2(n - 1, k - 1) + k * _stirling2(n - 1, k)


@dataclass(frozen=True)
class ThetaOperator:
    """terms: tuple of (x_power, Poly in theta), sorted by descending power."""

    terms: tuple

    def __post_init__(self):
        cleaned = tuple(sorted(((m, p) for m, p in self.terms if p),
                               key=lambda t: -t[0]))
        object.__setattr__(self, "terms", cleaned)

    def theta_degree(self) -> int:
        return max((p.degree() for _, p in self.terms), default=-1)

    def __add__(self, other):
        acc = {}
        for m, p in self.terms + other.terms:
            acc[m] = acc.get(m, Poly()) + p
        return ThetaOperator(tuple(acc.items()))

    def scale(self, q) -> "ThetaOperator":
        return ThetaOperator(tuple((m, p * Fraction(q)) for m, p in self.terms))

    def to_dx(self) -> list:
        """Rewrite as sum_r a_r(x) D_x^r; returns [(r, Poly in x)], r desc.

        Uses theta^i = sum_r S2(i, r) x^r D_x^r.
        """
        acc = {}
        for m, p in self.terms:
            for i, ci in enumerate(p.c):
                if not ci:
                    continue
                for r in range(i + 1):
                    s2 = _stirling2(i, r)
                    if s2:
                        cur = acc.get(r, {})
                        cur[m + r] = cur.get(m + r, Fraction(0)) + ci * s2
                        acc[r] = cur
        out = []
        for r in sorted(acc, reverse=True):
            coeffs = acc[r]
            top = max(coeffs)
            c = [coeffs.get(i, Fraction(0)) for i in range(top + 1)]
            out.append((r, Poly(c)))
        return out

    def pretty(self, dx_form: bool = False) -> str:
        """Plain-text rendering, grouped like the displayed operators."""
        if dx_form:
            pieces = []
            for r, p in self.to_dx():
                poly = _poly_str(p, "x")
                if r == 0:
                    pieces.append(f"({poly})")
                else:
                    pieces.append(f"({poly}) D^{r}")
            return " + ".join(pieces)
        pieces = []
        for m, p in self.terms:
            poly = _poly_str(p, "T")
            if m == 0:
                pieces.append(f"({poly})")
            else:
                pieces.append(f"x^{m} ({poly})")
        return " + ".join(pieces)


def _poly_str(p: Poly, var: str) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree(), -1, -1):
        v = p.c[i]
        if not v:
            continue
        if i == 0:
            parts.append(f"{v}")
        elif i == 1:
            parts.append(f"{v}*{var}")
        else:
            parts.append(f"{v}*{var}^{i}")
    return " + ".join(parts).replace("+ -", "- ")


def mellin_translate(rec: RecurrenceOperator) -> ThetaOperator:
    """Translate the even-moment recurrence into the density's theta-form
    annihilating operator (normalized, exact)."""
    lam = rec.order
    terms = []
    for j in range(lam + 1):
        cj = rec.descending_coeff(j)
        pj = cj.compose_linear(Fraction(-1, 2), Fraction(2 * j - 1, 2))
        terms.append((2 * (lam - j), pj))
    op = ThetaOperator(tuple(terms))
    # normalize: clear rational content jointly, fix the top-power sign
    nums = [v.numerator for _, p in op.terms for v in p.c if v]
    dens = [v.denominator for _, p in op.terms for v in p.c if v]
    if nums:
        den_lcm = reduce(lambda a, b: a * b // gcd(a, b), dens, 1)
        num_gcd = reduce(gcd, nums)
        op = op.scale(Fraction(den_lcm, num_gcd))
    top = max(m for m, _ in op.terms)
    for m, p in op.terms:
        if m == top and p.lc() < 0:
            op = op.scale(-1)
            break
    return op


# the displayed operators, kept as exact golden structures

def a4_operator() -> ThetaOperator:
    """x^4 (T+1)^3 - 4 x^2 T(5 T^2+3) + 64 (T-1)^3."""
    t_plus = Poly((1, 1)) ** 3
    mid = Poly((0, -12, 0, -20))
    t_minus = Poly((-1, 1)) ** 3 * 64
    return ThetaOperator(((4, t_plus), (2, mid), (0, t_minus)))


def a5_operator() -> ThetaOperator:
    """x^6 (T+1)^4 - x^4 (35 T^4+42 T^2+3)
       + x^2 (259 (T-1)^4 + 104 (T-1)^2) - 225 (T-3)^2 (T-1)^2."""
    p6 = Poly((1, 1)) ** 4
    p4 = Poly((-3, 0, -42, 0, -35))
    p2 = Poly((-1, 1)) ** 4 * 259 + Poly((-1, 1)) ** 2 * 104
    p0 = (Poly((-3, 1)) * Poly((-1, 1))) ** 2 * (-225)
    return ThetaOperator(((6, p6), (4, p4), (2, p2), (0, p0)))


def b4_operator() -> ThetaOperator:
    """64 z^2 (T+1)^3 - 2 z (2T+1)(5T^2+5T+2) + T^3 (Domb series annihilator)."""
    p2 = Poly((1, 1)) ** 3 * 64
    p1 = Poly((1, 2)) * Poly((2, 5, 5)) * (-2)
    p0 = Poly((0, 0, 0, 1))
    return ThetaOperator(((2, p2), (1, p1), (0, p0)))


def a4_dx_golden() -> list:
    """The D_x-form of A4 as displayed: leading (x-4)(x-2)x^3(x+2)(x+4)."""
    lead = Poly.from_roots([4, 2, -2, -4]) * Poly((0, 0, 0, 1))
    d2 = Poly((0, 0, 0, 0, -60, 0, 6))          # 6 x^4 (x^2 - 10)
    d1 = Poly((0, 64, 0, -32, 0, 7))            # x (7 x^4 - 32 x^2 + 64)
    d0 = Poly((-8, 0, 1)) * Poly((8, 0, 1))     # (x^2-8)(x^2+8)
    return [(3, lead), (2, d2), (1, d1), (0, d0)]
