"""Hypergeometric / eta / gamma-family tests.

Oracles: mpmath (independent implementation), the Clausen identity at
theta = pi/6, the reflection formula, dual eta formulas, and the
finite-difference theta-form ODE residual."""

import cmath
import math
from fractions import Fraction

import mpmath
import pytest

from walkdens.errors import DomainError, PoleError
from walkdens.numerics import gammafn
from walkdens.numerics.clausen import clausen
from walkdens.numerics.eta import (
    dedekind_eta,
    dedekind_eta_product,
    eta_nome,
    eta_real_nome,
)
from walkdens.numerics.hyper import (
    HyperParams,
    em_zeta_tail,
    hyp32_log_continuation,
    hyp_pfq,
)
from walkdens.numerics.precision import EXTENDED, Precision

mpmath.mp.dps = 35

F13 = Fraction(1, 3)
F12 = Fraction(1, 2)
F23 = Fraction(2, 3)


# -- gamma family --------------------------------------------------------------

def test_gamma_half_is_sqrt_pi():
    assert abs(gammafn.gamma(0.5) - math.sqrt(math.pi)) < 1e-15


def test_gamma_reflection_at_two_thirds():
    z = 2.0 / 3.0
    residual = gammafn.gamma(z) * gammafn.gamma(1.0 - z) - math.pi / math.sin(math.pi * z)
    assert abs(residual) < 1e-14


def test_gamma_poles():
    with pytest.raises(PoleError):
        gammafn.gamma(0.0)
    with pytest.raises(PoleError):
        gammafn.gamma(-3.0)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.7, 3.3, 10.2, 25.0, -0.5, -2.3])
def test_gamma_digamma_against_mpmath(x):
    assert abs(gammafn.gamma(x) / float(mpmath.gamma(x)) - 1.0) < 5e-14
    assert abs(gammafn.digamma(x) - float(mpmath.digamma(x))) < 1e-13


def test_gamma_dd_has_extra_digits():
    got = gammafn.gamma_dd(0.25)
    ref = mpmath.gamma(mpmath.mpf(1) / 4)
    rel = abs((mpmath.mpf(got[0]) + mpmath.mpf(got[1])) / ref - 1)
    assert rel < 1e-25


def test_harmonic_helpers():
    assert gammafn.harmonic(0) == 0.0
    assert abs(gammafn.harmonic_half(0) - (2.0 - 2.0 * math.log(2.0))) < 1e-15
    # H_{n+1/2} = gamma + psi(n + 3/2)
    for n in (0, 1, 4):
        ref = gammafn.EULER_GAMMA + gammafn.digamma(n + 1.5)
        assert abs(gammafn.harmonic_half(n) - ref) < 1e-13


def test_zeta_even_values():
    assert abs(gammafn.zeta_even(2) - math.pi**2 / 6.0) < 1e-15
    assert abs(gammafn.zeta_even(4) - math.pi**4 / 90.0) < 1e-15


def test_li4_half_constant_against_series():
    s = sum(0.5**k / k**4 for k in range(1, 60))
    assert abs(gammafn.LI4_HALF - s) < 1e-15


def test_gammainc_chi2():
    # Q(1/2, x/2) is the chi^2_1 tail; compare with erfc via mpmath
    for x in (0.5, 2.0, 5.0):
        ref = float(mpmath.gammainc(0.5, x / 2.0, mpmath.inf, regularized=True))
        assert abs(gammafn.gammainc_upper_reg(0.5, x / 2.0) - ref) < 1e-12


# -- pFq -----------------------------------------------------------------------

def test_pfq_at_zero_is_one():
    p = HyperParams((0.3, 1.7), (2.2,))
    assert hyp_pfq(p, 0.0).value == 1.0


def test_2f1_log_case():
    # 2F1(1, 1; 2; z) = -log(1-z)/z
    tight = Precision(target_rel_error=1e-15)
    val = hyp_pfq(HyperParams((1.0, 1.0), (2.0,)), 0.5, tight).value
    assert abs(val - (-math.log(0.5) / 0.5)) < 1e-14


def test_3f2_clausen_identity():
    # 2 sin(pi/6) 3F2(1/2,1/2,1/2; 3/2,3/2; sin^2(pi/6)) =
    #     Cl(pi/3) + 2 (pi/6) log(2 sin(pi/6));  sin(pi/6) = 1/2
    f = hyp_pfq(HyperParams((F12, F12, F12), (Fraction(3, 2), Fraction(3, 2))), 0.25)
    residual = 2.0 * 0.5 * f.value - (clausen(math.pi / 3.0) + 0.0)
    assert abs(residual) < 1e-12


@pytest.mark.parametrize("z", [0.2, -0.6, 0.9])
def test_3f2_against_mpmath(z):
    p = HyperParams((F13, F12, F23), (1.0, 1.0))
    ref = float(mpmath.hyp3f2(mpmath.mpf(1) / 3, mpmath.mpf(1) / 2,
                              mpmath.mpf(2) / 3, 1, 1, z))
    tight = Precision(target_rel_error=1e-15)
    assert abs(hyp_pfq(p, z, tight).value - ref) < 1e-13


def test_terminating_series_is_exact():
    # 3F2(-1,-1,-1; 1,-1/2; 1/4) appears in the even-moment closed form
    p = HyperParams((-1.0, -1.0, -1.0), (1.0, -0.5))
    assert hyp_pfq(p, 0.25).value == 1.5


def test_unit_argument_4f3():
    # 4F3(1/2,1/2,1/2,1; 3/2,3/2,3/2; 1) = sum 1/(2n+1)^3 = 7 zeta(3)/8
    p = HyperParams((F12, F12, F12, 1.0),
                    (Fraction(3, 2), Fraction(3, 2), Fraction(3, 2)))
    got = hyp_pfq(p, 1.0)
    ref = 7.0 * gammafn.ZETA3 / 8.0
    assert abs(got.value - ref) < 2e-14
    assert got.err < 1e-12


def test_unit_argument_small_excess():
    # 3F2(-1/2,1/3,2/3; 1,1; 1), excess 3/2: slow series needs completion
    p = HyperParams((-0.5, F13, F23), (1.0, 1.0))
    got = hyp_pfq(p, 1.0)
    ref = float(mpmath.hyp3f2(mpmath.mpf(-1) / 2, mpmath.mpf(1) / 3,
                              mpmath.mpf(2) / 3, 1, 1, 1))
    assert abs(got.value - ref) < 1e-12


def test_unit_argument_dd_mode():
    p = HyperParams((F12, F12, F12, 1.0),
                    (Fraction(3, 2), Fraction(3, 2), Fraction(3, 2)))
    got = hyp_pfq(p, 1.0, EXTENDED)
    assert abs(got.value - 7.0 * gammafn.ZETA3 / 8.0) < 1e-14


def test_pfq_domain_errors():
    with pytest.raises(DomainError):
        hyp_pfq(HyperParams((0.5, 0.5), (1.5,)), 1.25)
    with pytest.raises(DomainError):
        HyperParams((0.5,), (-1.0,))
    with pytest.raises(DomainError):
        # excess = 1 + 2 - 3.5 = -1/2: divergent at the unit argument
        hyp_pfq(HyperParams((1.0, 1.0, 1.5), (1.0, 1.0)), 1.0)


def test_theta_form_ode_residual():
    # theta(theta+c-1)F = z(theta+a)(theta+b)F for 2F1 at an interior point
    a, b, c = 1.0 / 3.0, 2.0 / 3.0, 1.0
    z0 = 0.3
    h = 1e-3

    def f(z):
        return hyp_pfq(HyperParams((a, b), (c,)), z).value

    # derivatives by central differences
    f0 = f(z0)
    f1 = (f(z0 + h) - f(z0 - h)) / (2 * h)
    f2 = (f(z0 + h) - 2 * f0 + f(z0 - h)) / h**2
    theta_f = z0 * f1
    theta2_f = z0 * f1 + z0 * z0 * f2
    lhs = theta2_f + (c - 1.0) * theta_f
    rhs = z0 * (theta2_f + (a + b) * theta_f + a * b * f0)
    assert abs(lhs - rhs) < 1e-6


def test_em_zeta_tail():
    ref = float(mpmath.zeta(2.5)) - sum(n ** -2.5 for n in range(1, 50))
    assert abs(em_zeta_tail(2.5, 50) - ref) < 1e-15


# -- the explicit 3F2 continuation ---------------------------------------------

def test_log_continuation_matches_paper_value_at_31_25():
    # prefactored: 2 sqrt(15)/pi^2 * Re 3F2(...; 125/4) = 0.3299338011
    val = 2.0 * math.sqrt(15.0) / math.pi**2 * hyp32_log_continuation(31.25)
    assert abs(val - 0.3299338011) < 1e-10


def test_log_continuation_against_mpmath():
    for z in (2.0, 5.0, 31.25, 200.0):
        ref = complex(mpmath.hyp3f2(0.5, 0.5, 0.5, mpmath.mpf(5) / 6,
                                    mpmath.mpf(7) / 6, z)).real
        assert abs(hyp32_log_continuation(z) - ref) < 1e-12


def test_log_continuation_leading_asymptotics():
    z = 1e6
    lead = math.log(108.0 * z) / (2.0 * math.sqrt(3.0 * z))
    assert abs(hyp32_log_continuation(z) / lead - 1.0) < 1e-6


def test_log_continuation_domain():
    with pytest.raises(DomainError):
        hyp32_log_continuation(0.9)


# -- eta ------------------------------------------------------------------------

def test_eta_single_term_dominance():
    tau = 10j
    val = dedekind_eta(tau)
    q24 = cmath.exp(1j * cmath.pi * tau / 12.0)
    assert abs(val - q24) < 1e-27


def test_eta_product_vs_series():
    tau = -0.5 + 0.6j
    a = dedekind_eta(tau)
    b = dedekind_eta_product(tau)
    assert abs(a - b) < 1e-13


def test_eta_real_nome_dual_forms():
    q = math.exp(-1.0)
    a = eta_nome(q, form="series")
    b = eta_nome(q, form="product")
    assert abs(a - b) < 1e-13
    assert abs(a.imag) < 1e-16
    # and the modular-accelerated real version agrees
    assert abs(eta_real_nome(1.0) - a.real) < 1e-13


@pytest.mark.parametrize("y", [0.5, 1.0, 2.0])
def test_eta_modularity(y):
    tau = complex(0.0, y)
    lhs = dedekind_eta(-1.0 / tau)
    rhs = cmath.sqrt(-1j * tau) * dedekind_eta(tau)
    assert abs(lhs - rhs) < 1e-10


def test_eta_against_mpmath():
    for tau in (0.25 + 0.8j, -0.5 + 0.6455j, 1j):
        # reference: q^{1/24} times mpmath's q-Pochhammer (q; q)_inf
        ref = complex(mpmath.exp(1j * mpmath.pi * tau / 12)
                      * mpmath.qp(mpmath.exp(2j * mpmath.pi * tau)))
        assert abs(dedekind_eta(tau) - ref) < 1e-13


def test_eta_domain():
    with pytest.raises(DomainError):
        dedekind_eta(1.0 - 0.5j)
