"""Exact even moments of n-step walks: big-integer combinatorics.

W_n(2k) = sum over compositions a_1+...+a_n = k of multinomial(k; a)^2.
Computed via the equivalent binomial convolution
W_n(2k) = sum_j C(k,j)^2 W_{n-1}(2j), which reorganizes the multinomial
sum one walk step at a time (W_1(2j) = 1).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..errors import GuardExceeded

GUARD_N = 10
GUARD_K = 30


@lru_cache(maxsize=64)
def even_moment_table(n: int, kmax: int) -> tuple:
    """(W_n(0), W_n(2), ..., W_n(2*kmax)) as exact integers; unguarded."""
    if n < 1 or kmax < 0:
        raise ValueError("even_moment_table wants n >= 1, kmax >= 0")
    row = [1] * (kmax + 1)  # W_1(2k) = 1
    for _ in range(n - 1):
        row = [sum(comb(k, j) ** 2 * row[j] for j in range(k + 1))
               for k in range(kmax + 1)]
    return tuple(row)


def even_moment_exact(n: int, k: int) -> int:
    """W_n(2k), exactly.  Guarded at n <= 10, k <= 30 (the multinomial
    composition count beyond that is no longer desk-sized)."""
    if n < 1 or k < 0:
        raise GuardExceeded("even_moment_exact wants n >= 1, k >= 0")
    if n > GUARD_N or k > GUARD_K:
        raise GuardExceeded(
            f"even_moment_exact guard exceeded (n <= {GUARD_N}, k <= {GUARD_K})")
    return even_moment_table(n, k)[k]
