"""Elliptic/AGM/Clausen tests with the stated independent oracles:
Legendre relation, cubic-convergence measurement, Richardson-accelerated
direct series for Clausen."""

import math

import numpy as np
import pytest

from walkdens.errors import DomainError, SingularInput
from walkdens.numerics.clausen import clausen
from walkdens.numerics.elliptic import (
    agm3,
    elliptic_e,
    elliptic_k,
    elliptic_k_above_one,
)


def test_trivial_values():
    assert abs(elliptic_k(0.0) - 0.5 * math.pi) < 1e-15
    assert elliptic_e(1.0) == 1.0
    assert abs(elliptic_e(0.0) - 0.5 * math.pi) < 1e-15


def test_elliptic_k_singular_input():
    with pytest.raises(SingularInput):
        elliptic_k(1.0)
    with pytest.raises(DomainError):
        elliptic_k(1.5)


def test_legendre_relation():
    # E K' + E' K - K K' = pi/2 at k = 1/sqrt(2) (self-complementary point)
    k = 1.0 / math.sqrt(2.0)
    K = elliptic_k(k)
    E = elliptic_e(k)
    residual = 2.0 * E * K - K * K - 0.5 * math.pi
    assert abs(residual) < 1e-13


@pytest.mark.parametrize("k", [0.1, 0.3, 0.6, 0.9, 0.99])
def test_legendre_relation_general(k):
    kp = math.sqrt(1.0 - k * k)
    lhs = (elliptic_e(k) * elliptic_k(kp) + elliptic_e(kp) * elliptic_k(k)
           - elliptic_k(k) * elliptic_k(kp))
    assert abs(lhs - 0.5 * math.pi) < 1e-13


def test_reciprocal_modulus_reduction():
    # Re K(k) = K(1/k)/k must tie continuously to K below 1
    assert abs(elliptic_k_above_one(2.0) - elliptic_k(0.5) / 2.0) < 1e-15


def test_agm3_fixed_point():
    assert agm3(5.0, 5.0) == 5.0
    assert agm3(12.0, 12.0) == 12.0


def test_agm3_hypergeometric_identity():
    # 1/AG3(1, s) = 2F1(1/3, 2/3; 1; 1 - s^3); sum the series directly
    s = 0.7
    z = 1.0 - s**3
    term = 1.0
    total = 1.0
    a, b = 1.0 / 3.0, 2.0 / 3.0
    for n in range(0, 4000):
        term *= (a + n) * (b + n) / ((1.0 + n) * (1.0 + n)) * z
        total += term
        if abs(term) < 1e-16 * abs(total):
            break
    assert abs(1.0 / agm3(1.0, s) - total) < 1e-12


def test_agm3_cubic_convergence():
    # once |a-b|/a < 0.1 the gap must shrink at least cubically
    a, b = 1.0, 0.92
    gaps = []
    for _ in range(3):
        gaps.append(abs(a - b) / a)
        a, b = (a + 2 * b) / 3.0, (b * (a * a + a * b + b * b) / 3.0) ** (1.0 / 3.0)
    assert gaps[1] < gaps[0] ** 3 * 10.0
    assert gaps[2] < gaps[1] ** 3 * 10.0


def test_agm3_domain():
    with pytest.raises(DomainError):
        agm3(-1.0, 2.0)


def test_clausen_trivial_zeros():
    assert clausen(0.0) == 0.0
    assert clausen(math.pi) == 0.0


def _clausen_series_oracle(theta: float) -> float:
    # partial sums at multiples of the sign period + Richardson in 1/m
    period = 6  # theta = pi/3 has sin(n theta) of period 6 in n
    ms = [400, 800, 1600, 3200]
    sums = []
    for m in ms:
        n = np.arange(1, period * m + 1, dtype=float)
        sums.append(float(np.sum(np.sin(n * theta) / n**2)))
    # error of S_{6m} behaves like c/m + d/m^2 + ...
    rows = [sums]
    for k in range(1, len(ms)):
        prev = rows[-1]
        rows.append([(2.0**k * prev[i + 1] - prev[i]) / (2.0**k - 1.0)
                     for i in range(len(prev) - 1)])
    return rows[-1][0]


def test_clausen_maximum_against_series_oracle():
    oracle = _clausen_series_oracle(math.pi / 3.0)
    val = clausen(math.pi / 3.0)
    assert abs(val - oracle) < 1e-9
    assert abs(val - 1.014941606) < 5e-10


def test_clausen_odd_and_periodic():
    for theta in (0.3, 1.0, 2.5):
        assert clausen(-theta) == -clausen(theta)
        assert abs(clausen(theta + 2.0 * math.pi) - clausen(theta)) < 1e-14


def test_clausen_duplication():
    # Cl(2t) = 2 Cl(t) - 2 Cl(pi - t)
    for t in (0.2, 0.7, 1.3):
        lhs = clausen(2.0 * t)
        rhs = 2.0 * clausen(t) - 2.0 * clausen(math.pi - t)
        assert abs(lhs - rhs) < 1e-13
