import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import IDENTITY_TOL
from fundamental_system import (
    OrbitlikeParams,
    WavelikeParams,
    frame,
    frame_orbitlike,
    frame_wavelike,
    kappa_period,
    halphen_hermite_orbitlike,
    halphen_hermite_wavelike,
    orbitlike_pair,
    rotation_delta_theta,
    rotation_delta_theta_derivative,
    solve_k_for_rotation,
    wavelike_hyperbolic_increment,
    wavelike_pair,
)
from special_functions import complete_K, jacobi_sn_cn_dn
from utils import CurvatureZeroError, DomainError


def test_rotation_limits():
    assert abs(rotation_delta_theta(1e-6) - math.sqrt(2) * math.pi) < 1e-9
    # Delta theta -> pi only logarithmically, through 2 k' sqrt(2-k^2) K
    gaps = [rotation_delta_theta(1.0 - eps) - math.pi for eps in (1e-4, 1e-8, 1e-12)]
    assert all(gap > 0 for gap in gaps)
    assert gaps == sorted(gaps, reverse=True)
    assert gaps[-1] < 1e-3


@pytest.mark.parametrize('k', [1e-12, 1e-9, 1e-8])
def test_rotation_finite_where_k_prime_rounds_to_one(k):
    assert rotation_delta_theta(k) == pytest.approx(math.sqrt(2) * math.pi, abs=1e-9)


def test_rotation_strictly_decreasing():
    values = rotation_delta_theta(np.linspace(0.005, 0.995, 200))
    assert np.all(np.diff(values) < 0)


def test_rotation_derivative_negative_and_consistent(modulus):
    h = 1e-6
    numeric = (rotation_delta_theta(modulus + h) - rotation_delta_theta(modulus - h)) / (2 * h)
    assert rotation_delta_theta_derivative(modulus) < 0
    assert rotation_delta_theta_derivative(modulus) == pytest.approx(numeric, rel=1e-6, abs=1e-8)


@pytest.mark.parametrize('m, n, k', [(2, 3, 0.9362), (7, 10, 0.7463), (12, 17, 0.5327)])
def test_solve_k_for_rotation_matches_table(m, n, k):
    assert solve_k_for_rotation(2 * math.pi * m / n) == pytest.approx(k, abs=5e-5)


@given(ratio=st.floats(min_value=0.52, max_value=0.70))
@settings(max_examples=50, deadline=None)
def test_solve_k_for_rotation_inverts(ratio):
    target = 2 * math.pi * ratio
    assert rotation_delta_theta(solve_k_for_rotation(target)) == pytest.approx(target, abs=1e-12)


@pytest.mark.parametrize('target', [math.pi, math.sqrt(2) * math.pi, 5.0])
def test_solve_k_for_rotation_rejects_outside(target):
    with pytest.raises(DomainError):
        solve_k_for_rotation(target)


def test_params_reject_bad_moduli():
    with pytest.raises(DomainError):
        OrbitlikeParams(1.0)
    with pytest.raises(DomainError):
        WavelikeParams(0.6)


def test_orbitlike_first_integral(modulus):
    params = OrbitlikeParams(modulus, 0.3)
    values = frame_orbitlike(np.linspace(-10, 10, 200), params)
    mu = -values.kappap ** 2 + values.kappa ** 2 - values.kappa ** 4 / 4
    assert np.max(np.abs(mu - params.mu)) < IDENTITY_TOL


def test_wavelike_first_integral(wavelike_modulus):
    params = WavelikeParams(wavelike_modulus, 0.3)
    values = frame_wavelike(np.linspace(-10, 10, 200), params)
    mu = -values.kappap ** 2 + values.kappa ** 2 - values.kappa ** 4 / 4
    assert np.max(np.abs(mu - params.mu)) < IDENTITY_TOL


def test_orbitlike_frame_norm_and_wronskian(modulus):
    params = OrbitlikeParams(modulus, 0.7)
    values = frame_orbitlike(np.linspace(-8, 8, 200), params)
    norm = values.W1 ** 2 + values.W2 ** 2
    assert np.max(np.abs(norm - (1 - params.mu / values.kappa ** 2))) < IDENTITY_TOL
    wronskian = values.W1 * values.W2p - values.W2 * values.W1p
    assert np.max(np.abs(wronskian - math.sqrt(params.mu) / 2)) < IDENTITY_TOL


def test_orbitlike_angle_advances_by_rotation(modulus):
    params = OrbitlikeParams(modulus)
    s = np.linspace(0, params.period, 20)
    step = frame_orbitlike(s + params.period, params).theta - frame_orbitlike(s, params).theta
    assert np.allclose(step, rotation_delta_theta(modulus), atol=1e-10)


def test_wavelike_hat_pair_is_hyperbolic(wavelike_modulus):
    params = WavelikeParams(wavelike_modulus, -0.2)
    values = frame_wavelike(np.linspace(-6, 6, 200), params)
    lorentz = values.W2hat ** 2 - values.W1hat ** 2
    assert np.max(np.abs(lorentz - (values.kappa ** 2 - params.mu))) < IDENTITY_TOL


def test_wavelike_angle_advances_per_period(wavelike_modulus):
    params = WavelikeParams(wavelike_modulus)
    s = np.linspace(0.1, 2.0, 10)
    step = frame_wavelike(s + params.period, params).theta - frame_wavelike(s, params).theta
    assert np.allclose(step, wavelike_hyperbolic_increment(wavelike_modulus), atol=1e-10)
    assert wavelike_hyperbolic_increment(wavelike_modulus) > 0


def test_wavelike_frame_singular_at_curvature_zero():
    params = WavelikeParams(0.8)
    zero = params.scale * params.modulus.quarter_period_K
    values = frame(np.array([zero]), params)
    assert values.curvature_zero[0]
    assert np.isnan(values.W1[0])
    assert np.isfinite(values.W1hat[0])
    with pytest.raises(CurvatureZeroError):
        values.require_regular()


@pytest.mark.parametrize('k', [0.3, 0.7, 0.95])
def test_orbitlike_polar_and_theta_pairs_agree(k):
    t = np.linspace(-5, 5, 41)
    polar = np.array(orbitlike_pair(t, k)[:4])
    theta = np.array(halphen_hermite_orbitlike(t, k))
    assert np.max(np.abs(polar - theta)) < 1e-10


@pytest.mark.parametrize('k', [0.75, 0.85, 0.95])
def test_wavelike_polar_and_theta_pairs_agree(k):
    t = np.linspace(-3, 3, 31)
    polar = np.array(wavelike_pair(t, k)[:4])
    theta = np.array(halphen_hermite_wavelike(t, k))
    # the odd solution is fixed only up to sign
    sign = np.sign(polar[2][t.size // 2] * theta[2][t.size // 2])
    theta[[0, 2]] *= sign
    assert np.max(np.abs(polar - theta) / np.maximum(np.abs(polar), 1.0)) < 1e-10


def test_frame_dispatch():
    params = OrbitlikeParams(0.5)
    assert np.allclose(frame(1.0, params).kappa, frame_orbitlike(1.0, params).kappa)


@pytest.mark.parametrize('params', [OrbitlikeParams(0.4), WavelikeParams(0.8)], ids=['orbitlike', 'wavelike'])
def test_curvature_is_periodic(params):
    s = np.linspace(0.0, 3.0, 25)
    period = kappa_period(params)
    assert period == params.period
    assert np.max(np.abs(frame(s + period, params).kappa - frame(s, params).kappa)) < IDENTITY_TOL


@given(t=st.floats(min_value=-20.0, max_value=20.0), k=st.floats(min_value=0.05, max_value=0.97))
@settings(max_examples=200, deadline=None)
def test_orbitlike_pair_identities(t, k):
    w1, w2, w1p, w2p, _ = orbitlike_pair(t, k)
    sn, cn, dn = (float(v) for v in jacobi_sn_cn_dn(t, k))
    assert w1 ** 2 + w2 ** 2 == pytest.approx(2 - k * k - dn * dn, abs=IDENTITY_TOL)
    assert w1 * w1p + w2 * w2p == pytest.approx(k * k * sn * cn * dn, abs=IDENTITY_TOL)
    assert w1 * w2p - w2 * w1p == pytest.approx(math.sqrt(1 - k * k) * math.sqrt(2 - k * k), abs=IDENTITY_TOL)
    assert w1p ** 2 + w2p ** 2 == pytest.approx(1 - k * k + dn ** 4, abs=IDENTITY_TOL)


def test_orbitlike_pair_at_minus_quarter_period(modulus):
    K = float(complete_K(modulus))
    w1, w2, _, _, _ = orbitlike_pair(-K, modulus)
    expected = np.exp(0.5j * (math.pi - rotation_delta_theta(modulus)))
    assert abs(complex(w1 + 1j * w2) - expected) < IDENTITY_TOL


@pytest.mark.parametrize('k, s_star', [(0.8, 0.0), (0.5, 1.3), (0.95, -2.0)])
def test_orbitlike_angle_anchors(k, s_star):
    params = OrbitlikeParams(k, s_star)
    delta = rotation_delta_theta(k)
    assert float(frame_orbitlike(-s_star, params).theta) == pytest.approx(-delta / 2, abs=IDENTITY_TOL)
    half = params.period / 2
    anchors = frame_orbitlike(-s_star + half * np.arange(-3, 4), params).theta
    assert np.allclose(anchors, (np.arange(-3, 4) - 1) * delta / 2, atol=IDENTITY_TOL)
    s = np.linspace(0.1, 7.0, 30)
    pairs = frame_orbitlike(-s_star + s, params).theta + frame_orbitlike(-s_star - s, params).theta
    assert np.allclose(pairs, -delta, atol=IDENTITY_TOL)


@pytest.mark.parametrize('turns', [-2, 1, 3])
def test_orbitlike_quasi_periodicity(modulus, turns):
    params = OrbitlikeParams(modulus, 0.4)
    s = np.linspace(-5.0, 5.0, 40)
    here = frame_orbitlike(s, params)
    there = frame_orbitlike(s + turns * params.period, params)
    rotated = (here.W1 + 1j * here.W2) * np.exp(1j * turns * rotation_delta_theta(modulus))
    assert np.max(np.abs(there.W1 + 1j * there.W2 - rotated)) < IDENTITY_TOL


@pytest.mark.parametrize('l', [-1, 0, 1, 2])
def test_orbitlike_reflection(modulus, l):
    params = OrbitlikeParams(modulus, 0.6)
    s = np.linspace(-5.0, 5.0, 40)
    here = frame_orbitlike(s, params)
    mirror = frame_orbitlike(-s - 2 * params.s_star + l * params.period, params)
    expected = (-mirror.W1 + 1j * mirror.W2) * np.exp(1j * (l - 1) * rotation_delta_theta(modulus))
    assert np.max(np.abs(here.W1 + 1j * here.W2 - expected)) < IDENTITY_TOL


def test_orbitlike_rotation_factorization(modulus):
    params = OrbitlikeParams(modulus, -0.3)
    v = frame_orbitlike(np.linspace(-6.0, 6.0, 60), params)
    mu = params.mu
    root = np.sqrt(v.kappa ** 2 - mu)
    b = -math.sqrt(mu) * v.kappa / (2 * root)
    c = mu * v.kappap / (v.kappa ** 2 * root)
    cos_t, sin_t = np.cos(v.theta), np.sin(v.theta)
    assert np.max(np.abs(v.W1 + root / v.kappa * sin_t)) < IDENTITY_TOL
    assert np.max(np.abs(v.W2 - root / v.kappa * cos_t)) < IDENTITY_TOL
    assert np.max(np.abs(v.W1p - (b * cos_t - c * sin_t))) < IDENTITY_TOL
    assert np.max(np.abs(v.W2p - (b * sin_t + c * cos_t))) < IDENTITY_TOL


def test_orbitlike_angle_derivative(modulus):
    params = OrbitlikeParams(modulus, 0.25)
    s = np.linspace(-4.0, 4.0, 33)
    h = 1e-5
    numeric = (frame_orbitlike(s + h, params).theta - frame_orbitlike(s - h, params).theta) / (2 * h)
    kappa2 = frame_orbitlike(s, params).kappa ** 2
    expected = math.sqrt(params.mu) * kappa2 / (2 * (kappa2 - params.mu))
    assert np.max(np.abs(numeric - expected)) < 1e-6
    assert np.all(expected > 0)


def test_wavelike_pair_identities(wavelike_modulus):
    k = wavelike_modulus
    K = float(complete_K(k))
    t = np.linspace(-0.98, 0.98, 49) * K
    w1hat, w2hat, w1hatp, w2hatp, _ = wavelike_pair(t, k)
    sn, cn, dn = (np.asarray(v) for v in jacobi_sn_cn_dn(t, k))
    assert np.max(np.abs(w2hat ** 2 - w1hat ** 2 - (1 - k * k + (2 * k * k - 1) * cn ** 2))) < IDENTITY_TOL
    # w_j = w_hat_j / cn on the open quarter period
    w1, w2 = w1hat / cn, w2hat / cn
    w1p = w1hatp / cn + w1hat * sn * dn / cn ** 2
    w2p = w2hatp / cn + w2hat * sn * dn / cn ** 2
    wronskian = w2 * w1p - w1 * w2p
    expected = -k * math.sqrt((1 - k * k) * (2 * k * k - 1))
    assert np.max(np.abs(wronskian - expected)) < IDENTITY_TOL


def test_wavelike_hat_pair_limits():
    params = WavelikeParams(0.8)
    ends = frame_wavelike(np.array([-30.0, 30.0]), params)
    assert ends.W1hat[0] / ends.W2hat[0] == pytest.approx(1.0, abs=1e-6)
    assert ends.W1hat[1] / ends.W2hat[1] == pytest.approx(-1.0, abs=1e-6)
    assert np.all(frame_wavelike(np.linspace(-20.0, 20.0, 801), params).W2hat > 0)


def test_wavelike_hyperbolic_factorization(wavelike_modulus):
    params = WavelikeParams(wavelike_modulus, 0.2)
    v = frame_wavelike(np.linspace(-5.0, 5.0, 60), params)
    regular = ~v.curvature_zero
    kappa, kappap, theta = v.kappa[regular], v.kappap[regular], v.theta[regular]
    mu = params.mu
    root = np.sqrt(kappa ** 2 - mu)
    b = -math.sqrt(abs(mu)) * kappa / (2 * root)
    c = mu * kappap / (kappa ** 2 * root)
    cosh_t, sinh_t = np.cosh(theta), np.sinh(theta)
    scale = np.maximum(np.abs(v.W2[regular]), 1.0)
    assert np.max(np.abs(v.W1[regular] + root / kappa * sinh_t) / scale) < IDENTITY_TOL
    assert np.max(np.abs(v.W2[regular] - root / kappa * cosh_t) / scale) < IDENTITY_TOL
    assert np.max(np.abs(v.W1p[regular] - (b * cosh_t - c * sinh_t)) / scale) < IDENTITY_TOL
    assert np.max(np.abs(v.W2p[regular] - (-b * sinh_t + c * cosh_t)) / scale) < IDENTITY_TOL


def test_wavelike_angle_derivative(wavelike_modulus):
    params = WavelikeParams(wavelike_modulus, 0.1)
    s = np.linspace(-4.0, 4.0, 33)
    h = 1e-5
    numeric = (frame_wavelike(s + h, params).theta - frame_wavelike(s - h, params).theta) / (2 * h)
    kappa2 = frame_wavelike(s, params).kappa ** 2
    expected = math.sqrt(abs(params.mu)) * kappa2 / (2 * (kappa2 - params.mu))
    assert np.max(np.abs(numeric - expected)) < 1e-6


def test_solve_k_for_rotation_near_three_fifths():
    k = solve_k_for_rotation(6 * math.pi / 5)
    assert math.isfinite(k)
    assert k == pytest.approx(0.9918, abs=1e-4)
