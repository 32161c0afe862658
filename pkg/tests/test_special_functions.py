import math

import mpmath
import numpy as np
import pytest
from scipy import integrate
from hypothesis import given, settings, strategies as st

from conftest import JACOBI_TOL, THETA_TOL
from special_functions import (
    EllipticModulus,
    complete_E,
    complete_K,
    complete_K_derivative,
    heuman_lambda0,
    heuman_lambda0_derivatives,
    incomplete_third_carlson,
    incomplete_E,
    incomplete_F,
    inverse_cn,
    inverse_dn,
    inverse_sn,
    jacobi_sn_cn_dn,
    jacobi_zeta,
    theta_H,
    theta_Theta,
    theta_Theta1,
)
from utils import DomainError

moduli = st.floats(min_value=0.02, max_value=0.98)


@pytest.mark.parametrize('k', [0.0, 0.1, 0.5, 0.9, 0.999])
def test_complete_integrals_match_mpmath(k):
    assert complete_K(k) == pytest.approx(float(mpmath.ellipk(k * k)), rel=1e-14)
    assert complete_E(k) == pytest.approx(float(mpmath.ellipe(k * k)), rel=1e-14)


def test_complete_K_at_zero_is_half_pi():
    assert complete_K(0.0) == pytest.approx(math.pi / 2, abs=1e-15)


def test_complete_K_near_one_stays_accurate():
    k = 1.0 - 1e-12
    assert complete_K(k) == pytest.approx(float(mpmath.ellipk(mpmath.mpf(k) ** 2)), rel=1e-8)


def test_complete_K_rejects_k_one():
    with pytest.raises(DomainError):
        complete_K(1.0)


def test_complete_K_derivative_by_central_difference(modulus):
    h = 1e-6
    numeric = (complete_K(modulus + h) - complete_K(modulus - h)) / (2 * h)
    assert complete_K_derivative(modulus) == pytest.approx(numeric, rel=1e-7)


def test_legendre_relation(modulus):
    mod = EllipticModulus(modulus)
    value = (mod.complete_E * mod.quarter_period_K_prime + mod.complete_E_prime * mod.quarter_period_K
             - mod.quarter_period_K * mod.quarter_period_K_prime)
    assert value == pytest.approx(math.pi / 2, abs=1e-13)


def test_incomplete_integrals_reach_complete_values(modulus):
    assert incomplete_F(1.0, modulus) == pytest.approx(complete_K(modulus), rel=1e-13)
    assert incomplete_E(1.0, modulus) == pytest.approx(complete_E(modulus), rel=1e-13)


@pytest.mark.parametrize('l', [0.2, 0.7, 0.99])
def test_incomplete_F_matches_mpmath(l, modulus):
    expected = mpmath.ellipf(mpmath.asin(l), modulus ** 2)
    assert incomplete_F(l, modulus) == pytest.approx(float(expected), rel=1e-13)


@given(u=st.floats(min_value=-50.0, max_value=50.0), k=moduli)
@settings(max_examples=200, deadline=None)
def test_jacobi_identities(u, k):
    sn, cn, dn = jacobi_sn_cn_dn(u, k)
    assert abs(sn ** 2 + cn ** 2 - 1.0) <= JACOBI_TOL
    assert abs(dn ** 2 + k ** 2 * sn ** 2 - 1.0) <= JACOBI_TOL


def test_jacobi_functions_at_quarter_period(modulus):
    K = complete_K(modulus)
    sn, cn, dn = jacobi_sn_cn_dn(K, modulus)
    assert sn == pytest.approx(1.0, abs=1e-14)
    assert cn == pytest.approx(0.0, abs=1e-14)
    assert dn == pytest.approx(math.sqrt(1 - modulus ** 2), abs=1e-14)


def test_jacobi_large_argument_periodicity(modulus):
    K = complete_K(modulus)
    u = np.linspace(-1.0, 1.0, 11)
    near = np.array(jacobi_sn_cn_dn(u, modulus))
    far = np.array(jacobi_sn_cn_dn(u + 400.0 * K, modulus))
    assert np.max(np.abs(near - far)) < 1e-10


def test_inverse_functions_are_principal(modulus):
    K = complete_K(modulus)
    u = np.linspace(0.0, K, 25)
    sn, cn, dn = jacobi_sn_cn_dn(u, modulus)
    assert np.allclose(inverse_sn(sn, modulus), u, atol=1e-7)
    assert np.allclose(inverse_cn(cn, modulus), u, atol=1e-7)
    assert np.allclose(jacobi_sn_cn_dn(inverse_dn(dn, modulus), modulus)[2], dn, atol=1e-13)


def test_inverse_dn_clips_within_slack():
    k = 0.6
    kp = math.sqrt(1 - k * k)
    assert inverse_dn(kp - 1e-15, k) == pytest.approx(complete_K(k))
    assert inverse_dn(1.0 + 1e-15, k) == 0.0
    with pytest.raises(DomainError):
        inverse_dn(kp - 1e-6, k)


@pytest.mark.parametrize('l', [0.0, 0.3, 0.8, 1.0])
def test_heuman_lambda_against_mpmath(l, modulus):
    phi = mpmath.asin(l)
    m, mc = mpmath.mpf(modulus) ** 2, 1 - mpmath.mpf(modulus) ** 2
    K, E = mpmath.ellipk(m), mpmath.ellipe(m)
    expected = 2 / mpmath.pi * (E * mpmath.ellipf(phi, mc) + K * mpmath.ellipe(phi, mc) - K * mpmath.ellipf(phi, mc))
    assert heuman_lambda0(l, modulus) == pytest.approx(float(expected), abs=1e-13)


def test_heuman_lambda_boundary_moduli():
    assert heuman_lambda0(0.4, 0.0) == pytest.approx(0.4)
    assert heuman_lambda0(0.4, 1.0) == pytest.approx(2 / math.pi * math.asin(0.4))


@given(z=st.floats(min_value=-4.0, max_value=4.0), k=st.floats(min_value=0.05, max_value=0.95))
@settings(max_examples=200, deadline=None)
def test_sn_as_theta_quotient(z, k):
    sn = jacobi_sn_cn_dn(z, k)[0]
    assert theta_H(z, k) / (math.sqrt(k) * theta_Theta(z, k)) == pytest.approx(sn, abs=JACOBI_TOL)


def test_theta_half_period_relations(modulus):
    K = complete_K(modulus)
    z = np.linspace(-2.0, 2.0, 9)
    assert np.max(np.abs(np.asarray(theta_Theta(z + K, modulus)) - np.asarray(theta_Theta1(z, modulus)))) < THETA_TOL * 10
    assert np.max(np.abs(np.asarray(theta_Theta(z + 2 * K, modulus)) - np.asarray(theta_Theta(z, modulus)))) < THETA_TOL * 10


def test_theta_complex_argument_matches_mpmath():
    k = 0.7
    mod = EllipticModulus(k)
    z = 0.3 + 0.4j
    v = math.pi * z / (2 * mod.quarter_period_K)
    expected = complex(mpmath.jtheta(4, v, mod.nome_q))
    assert abs(theta_Theta(z, k) - expected) < 1e-13


def test_jacobi_zeta_vanishes_at_quarter_period(modulus):
    assert jacobi_zeta(complete_K(modulus), modulus) == pytest.approx(0.0, abs=1e-13)


@pytest.mark.parametrize('n', [-2.0, 0.3, 0.9])
def test_third_kind_integral_against_quadrature(n):
    k = 0.6
    x = 0.7 * float(complete_K(k))
    exact, _ = integrate.quad(lambda u: 1.0 / (1.0 - n * float(jacobi_sn_cn_dn(u, k)[0]) ** 2), 0.0, x,
                              epsabs=0.0, epsrel=1e-13)
    assert float(incomplete_third_carlson(x, n, k)) == pytest.approx(exact, rel=1e-10)


def test_heuman_derivatives_match_differences():
    l, k, h = 0.4, 0.6, 1e-6
    d_l, d_k = heuman_lambda0_derivatives(l, k)
    numeric_l = (heuman_lambda0(l + h, k) - heuman_lambda0(l - h, k)) / (2 * h)
    numeric_k = (heuman_lambda0(l, k + h) - heuman_lambda0(l, k - h)) / (2 * h)
    assert float(d_l) == pytest.approx(float(numeric_l), rel=1e-6)
    assert float(d_k) == pytest.approx(float(numeric_k), rel=1e-6)


@pytest.mark.parametrize('k', [0.0, 1e-12, 1e-9, 0.3, 0.9, 1.0])
def test_heuman_at_quarter_turn_is_one(k):
    assert heuman_lambda0(1.0, k) == pytest.approx(1.0, abs=1e-15)


def test_heuman_vectorized_across_the_pole():
    values = heuman_lambda0(np.array([0.5, 1.0, 1.0 - 1e-15]), 1e-12)
    assert np.all(np.isfinite(values))
    assert values[1] == 1.0


@given(u=st.floats(min_value=-20.0, max_value=20.0), k=moduli)
@settings(max_examples=100, deadline=None)
def test_jacobi_quarter_period_shift(u, k):
    K = complete_K(k)
    kp = math.sqrt(1 - k * k)
    sn, cn, dn = jacobi_sn_cn_dn(u, k)
    sn_s, cn_s, dn_s = jacobi_sn_cn_dn(u - K, k)
    assert abs(cn_s - kp * sn / dn) <= JACOBI_TOL
    assert abs(sn_s + cn / dn) <= JACOBI_TOL
    assert abs(dn_s - kp / dn) <= JACOBI_TOL


def test_jacobi_second_order_equations(modulus):
    h = 1e-4
    u = np.linspace(-6.0, 6.0, 41)
    below, here, above = (np.array(jacobi_sn_cn_dn(u + j * h, modulus)) for j in (-1, 0, 1))
    second = (above - 2 * here + below) / h ** 2
    sn, cn, dn = here
    m = modulus ** 2
    assert np.max(np.abs(second[0] - (-(1 + m) * sn + 2 * m * sn ** 3))) < 1e-5
    assert np.max(np.abs(second[1] - ((2 * m - 1) * cn - 2 * m * cn ** 3))) < 1e-5
    assert np.max(np.abs(second[2] - ((2 - m) * dn - 2 * dn ** 3))) < 1e-5


def test_incomplete_integrals_against_quadrature_grid():
    worst = 0.0
    for k in np.linspace(0.02, 0.98, 20):
        for l in np.linspace(0.02, 0.99, 20):
            top = math.asin(l)
            F, _ = integrate.quad(lambda t: 1.0 / math.sqrt(1 - (k * math.sin(t)) ** 2), 0.0, top,
                                  epsabs=0.0, epsrel=1e-14)
            E, _ = integrate.quad(lambda t: math.sqrt(1 - (k * math.sin(t)) ** 2), 0.0, top,
                                  epsabs=0.0, epsrel=1e-14)
            worst = max(worst, abs(incomplete_F(l, k) - F), abs(incomplete_E(l, k) - E))
    assert worst <= 1e-11
