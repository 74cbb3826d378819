"""Bessel kernel tests: trivial values, bisection-located zero, branch
agreement at the crossover, the derivative identity, and Nicholson's
integral representation as an independent quadrature check."""

import math

import mpmath
import numpy as np
import pytest

from walkdens.errors import DomainError
from walkdens.numerics import bessel
from walkdens.numerics.precision import EXTENDED
from walkdens.quadrature import tanh_sinh

mpmath.mp.dps = 30


def test_trivial_values():
    assert bessel.bessel_j(0, 0.0) == 1.0
    assert bessel.bessel_j(1, 0.0) == 0.0
    assert bessel.modified_bessel("I0", 0.0) == 1.0


def test_first_j0_zero_by_bisection():
    # independent oracle: bisection on the power-series branch
    lo, hi = 2.0, 3.0
    assert bessel.bessel_j(0, lo) > 0 > bessel.bessel_j(0, hi)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if bessel.bessel_j(0, mid) > 0:
            lo = mid
        else:
            hi = mid
    j01 = 0.5 * (lo + hi)
    assert abs(j01 - 2.404825557695773) < 1e-12
    assert abs(bessel.bessel_j(0, j01)) < 1e-12


@pytest.mark.parametrize("order", [0, 1])
def test_branch_agreement_at_crossover(order):
    # series just below 18 vs asymptotics just above must agree through
    # a smooth continuation; compare both against mpmath at 17.9999/18.0001
    for x in (17.9999, 18.0001):
        ref = float(mpmath.besselj(order, x))
        assert abs(bessel.bessel_j(order, x, EXTENDED) - ref) < 1e-13
    # direct cross-branch check: evaluate the series branch above cutoff
    x = 18.0
    series_val = bessel._j_series_dd(0, x, 1e-13, 1000)
    asym_val = bessel._j_asymptotic(0, x)
    assert abs(series_val - asym_val) < 1e-13


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.5, 5.0, 9.0, 14.0, 17.5, 18.5, 25.0, 60.0, 200.0])
def test_j0_j1_against_mpmath(x):
    assert abs(bessel.j0(x) - float(mpmath.besselj(0, x))) < 2e-14
    assert abs(bessel.j1(x) - float(mpmath.besselj(1, x))) < 2e-14


def test_j0_derivative_is_minus_j1():
    h = 1e-5
    for x in np.arange(0.5, 20.5, 0.5):
        fd = (bessel.j0(x + h) - bessel.j0(x - h)) / (2 * h)
        assert abs(fd + bessel.j1(x)) < 1e-8


@pytest.mark.parametrize("x", [0.05, 0.3, 1.0, 2.0, 5.0, 10.0, 16.9, 17.5, 30.0, 80.0])
def test_i0_k0_against_mpmath(x):
    assert abs(bessel.i0(x) / float(mpmath.besseli(0, x)) - 1.0) < 1e-13
    assert abs(bessel.k0(x) / float(mpmath.besselk(0, x)) - 1.0) < 1e-13


def test_i0_two_summation_orders_agree():
    # forward Kahan-compensated vs reversed plain summation of the series
    x = 1.0
    q = 0.25 * x * x
    terms = []
    t = 1.0
    for k in range(1, 40):
        t *= q / (k * k)
        terms.append(t)
    backward = 1.0 + sum(reversed(terms))
    assert abs(bessel.i0(1.0) - backward) < 1e-14


def test_k0_requires_positive_argument():
    with pytest.raises(DomainError):
        bessel.modified_bessel("K0", 0.0)
    with pytest.raises(DomainError):
        bessel.modified_bessel("K0", -1.0)


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_nicholson_integral_identity(t):
    # I0(t) K0(t) = (2/pi) * int_0^{pi/2} K0(2 t sin a) da
    def integrand(a):
        return np.array([bessel.k0(2.0 * t * math.sin(ai)) for ai in np.atleast_1d(a)])

    rhs = (2.0 / math.pi) * tanh_sinh(integrand, 0.0, 0.5 * math.pi, tol=1e-12)
    lhs = bessel.i0(t) * bessel.k0(t)
    assert abs(lhs - rhs) < 1e-10


def test_array_versions_match_scalar():
    xs = np.array([0.3, 1.7, 8.0, 15.0, 17.9, 18.2, 44.0, 123.0])
    j0v = bessel.j0_array(xs)
    j1v = bessel.j1_array(xs)
    for i, x in enumerate(xs):
        assert abs(j0v[i] - bessel.j0(float(x))) < 5e-13
        assert abs(j1v[i] - bessel.j1(float(x))) < 5e-13


def test_zero_tables():
    z0 = bessel.bessel_zeros(0, 30)
    z1 = bessel.bessel_zeros(1, 30)
    for z in z0:
        assert abs(bessel.j0(z)) < 1e-12
    for z in z1:
        assert abs(bessel.j1(z)) < 1e-12
    assert all(b - a > 2.9 for a, b in zip(z0, z0[1:]))
