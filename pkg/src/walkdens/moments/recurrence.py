"""The explicit moment recurrence and its characteristic polynomial.

For the n-step walk the even moments f(k) = W_n(2k) satisfy an order
ceil(n/2) recurrence with polynomial coefficients of degree n-1.  The
coefficient of f(k-j) is

    k^{n+1} * sum over sequences a_1,...,a_j (0 <= a_i <= n,
              a_{i+1} <= a_i - 2) of
              prod_i (-a_i)(n+1-a_i) ((k-i)/(k-i+1))^{a_i - 1}.

Clearing the (k-i+1) denominators and stripping the common linear
factors and integer content yields the normalized operator; the
characteristic polynomial keeps only the leading k-coefficients, which
drop the position-dependent rational factors entirely and admit a fast
dynamic program usable far beyond the full operator's practical range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from ..errors import GuardExceeded
from ..holonomic.polys import Poly


@dataclass(frozen=True)
class RecurrenceOperator:
    """sum_j coeffs[j](k) * f(k + j) = 0, exact polynomial coefficients."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def apply(self, f, k) -> Fraction:
        """Evaluate sum_j q_j(k) f(k+j) with exact arithmetic."""
        k = Fraction(k)
        return sum((q(k) * Fraction(f(k + j)) for j, q in enumerate(self.coeffs)),
                   Fraction(0))

    def annihilates(self, values, k_from: int = 0) -> bool:
        """Check the relation on a window of integer samples.

        values[i] = f(k_from + i); every full window must give exactly 0.
        """
        lam = self.order
        for k in range(k_from, k_from + len(values) - lam):
            s = sum(q(Fraction(k)) * values[k - k_from + j]
                    for j, q in enumerate(self.coeffs))
            if s != 0:
                return False
        return True

    def descending_coeff(self, j: int) -> Poly:
        """Coefficient of f(k - j) in the k-descending form."""
        lam = self.order
        return self.coeffs[lam - j].shift(-lam)


def _position_factor(n: int, i: int, a: int) -> Poly:
    # (-a)(n+1-a) (k-i)^{a-1} (k-i+1)^{n-a}, the denominator-cleared weight
    w = Fraction(-a * (n + 1 - a))
    p = Poly((w,))
    p = p * Poly((-i, 1)) ** (a - 1)
    p = p * Poly((1 - i, 1)) ** (n - a)
    return p


@lru_cache(maxsize=32)
def verrill_operator(n: int) -> RecurrenceOperator:
    """Normalized moment recurrence for the n-step walk (ascending form)."""
    if n < 1:
        raise GuardExceeded("verrill_operator wants n >= 1")
    lam = (n + 1) // 2
    sums = [Poly() for _ in range(lam + 1)]
    sums[0] = Poly((1,))

    def dfs(pos: int, prev: int, prod: Poly):
        # extend the admissible sequence by one value at position pos
        for a in range(1, min(n, prev - 2) + 1):
            q = prod * _position_factor(n, pos, a)
            sums[pos] = sums[pos] + q
            if pos < lam:
                dfs(pos + 1, a, q)

    dfs(1, n + 2, Poly((1,)))

    k_pow = Poly((0, 1)) ** (n + 1)
    cleared = []
    for j in range(lam + 1):
        trail = Poly((1,))
        for i in range(j + 1, lam + 1):
            trail = trail * Poly((1 - i, 1)) ** (n - 1)
        cleared.append(k_pow * sums[j] * trail)

    # strip common linear factors (k - c), c = 0..lam-1, then the content
    for c in range(lam):
        m = min(p.linear_root_multiplicity(c) for p in cleared)
        if m:
            factor = Poly((-c, 1)) ** m
            cleared = [p.exact_div(factor) for p in cleared]
    num = reduce(gcd, (v.numerator for p in cleared for v in p.c if v))
    if num:
        cleared = [p * Fraction(1, num) for p in cleared]
    if cleared[0].lc() < 0:
        cleared = [p * Fraction(-1) for p in cleared]

    # descending j-form -> ascending: q_{lam-j}(k) = c_j(k + lam)
    ascending = [cleared[lam - jj].shift(lam) for jj in range(lam + 1)]
    return RecurrenceOperator(tuple(ascending))


def char_poly(n: int) -> Poly:
    """Characteristic polynomial of the moment recurrence.

    Coefficient of x^{lam-j} is the alternating admissible-sequence sum
    sum prod_i (-a_i)(n+1-a_i); a dynamic program over (max value, length)
    evaluates it without enumerating the (exponentially many) sequences.
    """
    if n < 1:
        raise GuardExceeded("char_poly wants n >= 1")
    lam = (n + 1) // 2
    # rows[a][l] = weighted count over sequences with values <= a, length l
    prev2 = [1] + [0] * lam  # a = -1
    prev1 = [1] + [0] * lam  # a = 0
    for a in range(1, n + 1):
        w = -a * (n + 1 - a)
        cur = [prev1[0]] + [prev1[ell] + w * prev2[ell - 1] for ell in range(1, lam + 1)]
        prev2, prev1 = prev1, cur
    coeffs = [Fraction(prev1[lam - d]) for d in range(lam + 1)]  # ascending in x
    return Poly(coeffs)


def char_poly_product_form(n: int) -> Poly:
    """prod (x - m^2) over 1 <= m <= n with m = n (mod 2)."""
    return Poly.from_roots([m * m for m in range(1, n + 1) if (n - m) % 2 == 0])
