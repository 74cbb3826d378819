"""Kernel self-tests for the double-double layer.

The acceptance bar: double_double mode must carry >= 25 significant
decimal digits.  Reference values come from mpmath at 50 digits.
"""

import math

import mpmath
import pytest

from walkdens.numerics import ddouble as dd

mpmath.mp.dps = 50


def _rel(a_dd, ref) -> float:
    ref = mpmath.mpf(ref)
    got = mpmath.mpf(a_dd[0]) + mpmath.mpf(a_dd[1])
    if ref == 0:
        return abs(got)
    return float(abs((got - ref) / ref))


def test_constants_are_25_digit_accurate():
    assert _rel(dd.PI, mpmath.pi) < 1e-31
    assert _rel(dd.LN2, mpmath.log(2)) < 1e-31
    assert _rel(dd.EULER_GAMMA, mpmath.euler) < 1e-31


def test_field_ops_round_trip():
    a = dd.from_str("1.3718273645182736451827364518273645")
    b = dd.from_str("2.7182818284590452353602874713526625")
    s = dd.add(a, b)
    ref_sum = mpmath.mpf("1.3718273645182736451827364518273645") + mpmath.mpf(
        "2.7182818284590452353602874713526625"
    )
    assert _rel(s, ref_sum) < 1e-30
    p = dd.mul(a, b)
    ref = mpmath.mpf("1.3718273645182736451827364518273645") * mpmath.mpf(
        "2.7182818284590452353602874713526625"
    )
    assert _rel(p, ref) < 1e-30
    q = dd.div(p, b)
    assert _rel(q, mpmath.mpf("1.3718273645182736451827364518273645")) < 1e-30


@pytest.mark.parametrize("x", [0.1, 1.0, 2.0, 10.0, -3.5, 100.0, -50.25])
def test_exp_against_mpmath(x):
    assert _rel(dd.exp(dd.dd(x)), mpmath.exp(x)) < 1e-29


@pytest.mark.parametrize("x", [0.01, 0.5, 1.0, 2.0, 1e4, 123.456])
def test_log_against_mpmath(x):
    assert _rel(dd.log(dd.dd(x)), mpmath.log(x)) < 1e-29


@pytest.mark.parametrize("x", [0.1, 1.0, 3.0, 10.0, 100.0, 1234.5])
def test_trig_against_mpmath(x):
    assert abs(dd.to_float(dd.sin(dd.dd(x))) - float(mpmath.sin(x))) < 1e-28 * max(1.0, x)
    assert abs(dd.to_float(dd.cos(dd.dd(x))) - float(mpmath.cos(x))) < 1e-28 * max(1.0, x)


def test_sqrt_and_pow():
    assert _rel(dd.sqrt(dd.dd(2.0)), mpmath.sqrt(2)) < 1e-30
    assert _rel(dd.pow_int(dd.dd(3.0), 7), 2187) < 1e-30
    assert _rel(dd.pow_int(dd.dd(2.0), -3), mpmath.mpf(1) / 8) < 1e-30


def test_exp_log_self_consistency():
    x = dd.from_str("0.123456789123456789123456789")
    y = dd.log(dd.exp(x))
    assert abs(dd.to_float(dd.sub(y, x))) < 1e-28


def test_double_double_carries_25_digits():
    # pi + an offset at the 27th digit must survive the round trip
    tiny = 1e-27
    a = dd.add_d(dd.PI, tiny)
    diff = dd.to_float(dd.sub(a, dd.PI))
    assert math.isclose(diff, tiny, rel_tol=1e-3)
