"""Truncated log-power series sum_k (a_k + b_k log x) x^(alpha+k).

The coefficient slots accept floats (numeric evaluation), Fractions, or
tuples of Fractions (exact linear combinations over symbolic seeds, used
by the exact annihilation checks).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LogPowerSeries:
    alpha: Fraction          # exponent offset
    a: tuple                 # plain coefficients
    b: tuple                 # log x coefficients
    radius: float            # empirical convergence radius

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b coefficient lists must align")

    def __len__(self):
        return len(self.a)

    def eval(self, x: float) -> float:
        """Numeric evaluation (float coefficients); Horner in x."""
        if x <= 0.0:
            return 0.0
        lx = math.log(x)
        acc = 0.0
        for ak, bk in zip(reversed(self.a), reversed(self.b)):
            acc = acc * x + (float(ak) + float(bk) * lx)
        return acc * x ** float(self.alpha)

    def eval_tail_ratio(self, x: float) -> float:
        """|last kept term| relative to the value, a truncation heuristic."""
        if x <= 0.0 or not self.a:
            return 0.0
        lx = math.log(x)
        k = len(self.a) - 1
        last = (float(self.a[k]) + float(self.b[k]) * lx) * x ** (float(self.alpha) + k)
        v = self.eval(x)
        return abs(last / v) if v else abs(last)
