"""Dense exact polynomials over the rationals, univariate and bivariate.

Everything here is big-rational (fractions.Fraction); no floating point
enters any identity check.  Only the operations the operator algebra and
the combinatorial identities need are implemented.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, gcd


def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Univariate polynomial, coefficients ascending, exact rationals."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _trim([Fraction(x) for x in coeffs])

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, v):
        return cls((v,))

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def lc(self) -> Fraction:
        return self.c[-1] if self.c else Fraction(0)

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        return len(self.c) <= 1 and (self.c[0] if self.c else 0) == other

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        n = max(len(self.c), len(other.c))
        a = list(self.c) + [Fraction(0)] * (n - len(self.c))
        for i, v in enumerate(other.c):
            a[i] += v
        return Poly(a)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-v for v in self.c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly((other,)).__neg__())

    def __rsub__(self, other):
        return Poly((other,)) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            q = Fraction(other)
            return Poly([v * q for v in self.c])
        if not self.c or not other.c:
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = Poly((1,))
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __call__(self, x):
        acc = 0
        for v in reversed(self.c):
            acc = acc * x + v
        return acc

    def compose_linear(self, a, b):
        """p(a*x + b), exact."""
        lin = Poly((Fraction(b), Fraction(a)))
        acc = Poly()
        for v in reversed(self.c):
            acc = acc * lin + v
        return acc

    def shift(self, a):
        """p(x + a)."""
        return self.compose_linear(1, a)

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [Fraction(0)] * max(0, len(rem) - len(other.c) + 1)
        d = other.degree()
        lc = other.lc()
        for i in range(len(rem) - 1, d - 1, -1):
            f = rem[i] / lc
            if f:
                q[i - d] = f
                for j, b in enumerate(other.c):
                    rem[i - d + j] -= f * b
        return Poly(q), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def linear_root_multiplicity(self, root) -> int:
        """Multiplicity of the factor (x - root)."""
        m = 0
        p = self
        root = Fraction(root)
        while not p.is_zero() and p(root) == 0:
            p = p.exact_div(Poly((-root, 1)))
            m += 1
        return m

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        if not self.c:
            return Fraction(1)
        num = reduce(gcd, (abs(v.numerator) for v in self.c))
        den = reduce(_lcm, (v.denominator for v in self.c))
        return Fraction(num, den) if num else Fraction(1)

    def __repr__(self):
        if not self.c:
            return "Poly(0)"
        parts = []
        for i, v in enumerate(self.c):
            if v:
                parts.append(f"{v}*x^{i}" if i else f"{v}")
        return "Poly(" + " + ".join(parts) + ")"


def _lcm(a, b):
    return a * b // gcd(a, b)


class BivarPoly:
    """Bivariate polynomial as a {(i, j): Fraction} dict on X^i u^j."""

    __slots__ = ("m",)

    def __init__(self, monomials=None):
        self.m = {}
        if monomials:
            for k, v in monomials.items():
                v = Fraction(v)
                if v:
                    self.m[k] = v

    @classmethod
    def const(cls, v):
        return cls({(0, 0): v})

    @classmethod
    def var_x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def var_u(cls):
        return cls({(0, 1): 1})

    def __eq__(self, other):
        return self.m == other.m

    def __add__(self, other):
        out = dict(self.m)
        for k, v in other.m.items():
            w = out.get(k, Fraction(0)) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        r = BivarPoly()
        r.m = out
        return r

    def __neg__(self):
        r = BivarPoly()
        r.m = {k: -v for k, v in self.m.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            q = Fraction(other)
            r = BivarPoly()
            if q:
                r.m = {k: v * q for k, v in self.m.items()}
            return r
        out = {}
        for (i1, j1), v1 in self.m.items():
            for (i2, j2), v2 in other.m.items():
                k = (i1 + i2, j1 + j2)
                w = out.get(k, Fraction(0)) + v1 * v2
                if w:
                    out[k] = w
                elif k in out:
                    del out[k]
        r = BivarPoly()
        r.m = out
        return r

    __rmul__ = __mul__

    def substitute_x(self, value) -> Poly:
        """Set X = value, returning a Poly in u."""
        value = Fraction(value)
        out = {}
        for (i, j), v in self.m.items():
            out[j] = out.get(j, Fraction(0)) + v * value**i
        if not out:
            return Poly()
        coeffs = [Fraction(0)] * (max(out) + 1)
        for j, v in out.items():
            coeffs[j] = v
        return Poly(coeffs)

    def u_degree(self) -> int:
        return max((j for _, j in self.m), default=-1)

    def substitute_linear(self, x_sub: "BivarPoly", u_sub: "BivarPoly") -> "BivarPoly":
        """Substitute X -> x_sub, u -> u_sub (both BivarPoly in new vars)."""
        xi = max((i for i, _ in self.m), default=0)
        uj = max((j for _, j in self.m), default=0)
        xp = [BivarPoly.const(1)]
        for _ in range(xi):
            xp.append(xp[-1] * x_sub)
        up = [BivarPoly.const(1)]
        for _ in range(uj):
            up.append(up[-1] * u_sub)
        acc = BivarPoly()
        for (i, j), v in self.m.items():
            acc = acc + xp[i] * up[j] * v
        return acc

    def __repr__(self):
        terms = sorted(self.m.items())
        return "BivarPoly(" + ", ".join(f"X^{i} u^{j}: {v}" for (i, j), v in terms) + ")"


def binom_poly(var_is_x: bool, j: int) -> BivarPoly:
    """C(x, j) or C(y, j) as a bivariate polynomial (y encoded as u-slot)."""
    acc = BivarPoly.const(Fraction(1, 1))
    v = BivarPoly.var_x() if var_is_x else BivarPoly.var_u()
    for i in range(j):
        acc = acc * (v - BivarPoly.const(i))
    num, den = acc, Fraction(1, _factorial(j))
    return num * den


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
