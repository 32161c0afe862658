"""
Fundamental system of w'' + 2 dn^2 w = 0 and the orbitlike frame

The primary evaluation is polar: w1 + i w2 = r exp(i(pi/2 + Phi)) with
r^2 = k'^2 + k^2 sn^2 and Phi' = k' sqrt(2-k^2) / r^2. Phi is an incomplete
integral of the third kind, so the angle comes out unwrapped. The
Halphen-Hermite theta construction is kept as an independent evaluation.
"""

import logging
import math

import numpy as np
from scipy import optimize, special

from special_functions import (
    complete_K,
    heuman_lambda0,
    incomplete_F,
    incomplete_third_carlson,
    jacobi_sn_cn_dn,
    jacobi_zeta,
    theta_H,
    theta_H_derivative,
    theta_Theta,
    theta_Theta_derivative,
)
from utils import DomainError, NumericalFailure, load_config
from .params import FrameValues, OrbitlikeParams

logger = logging.getLogger(__name__)

CONFIG = load_config()['fundamental_system']


def rotation_delta_theta(k):
    """Angular progress per curvature period, pi - pi Lambda_0(arcsin k', k) + 2 k' sqrt(2-k^2) K(k)"""
    k_arr = np.asarray(k, dtype=float)
    if not np.all((k_arr > 0.0) & (k_arr < 1.0)):
        raise DomainError(f"rotation_delta_theta needs k in (0, 1), got {k}")
    kp = np.sqrt((1.0 - k_arr) * (1.0 + k_arr))
    value = (math.pi - math.pi * np.asarray(heuman_lambda0(kp, k_arr))
             + 2.0 * kp * np.sqrt(2.0 - k_arr ** 2) * np.asarray(complete_K(k_arr)))
    return value.item() if value.ndim == 0 else value


def rotation_delta_theta_derivative(k):
    """d(Delta theta_k)/dk = 2 (2E + (k^2-2) K) / (k k' sqrt(2-k^2)), negative on (0,1)"""
    k = np.asarray(k, dtype=float)
    kp2 = (1.0 - k) * (1.0 + k)
    K = special.ellipkm1(kp2)
    E = special.ellipe(k * k)
    value = 2.0 * (2.0 * E + (k * k - 2.0) * K) / (k * np.sqrt(kp2) * np.sqrt(2.0 - k * k))
    return value.item() if value.ndim == 0 else value


def solve_k_for_rotation(target):
    """Modulus k with Delta theta_k = target, for pi < target < sqrt(2) pi"""
    target = float(target)
    if not (math.pi < target < math.sqrt(2.0) * math.pi):
        raise DomainError(f"rotation target must lie in (pi, sqrt(2) pi), got {target}")

    def residual(k):
        return rotation_delta_theta(k) - target

    lower, upper = CONFIG['rotation_k_bracket']
    f_lower, f_upper = residual(lower), residual(upper)
    if not (math.isfinite(f_lower) and math.isfinite(f_upper)):
        raise NumericalFailure(f"rotation angle is not finite at the bracket ends ({f_lower}, {f_upper})")
    if f_lower <= 0.0 or f_upper >= 0.0:
        raise DomainError(f"rotation target {target} is too close to the ends of (pi, sqrt(2) pi)")
    k = optimize.brentq(residual, lower, upper, xtol=1e-16, rtol=4 * np.finfo(float).eps, maxiter=200)
    logger.debug("solve_k_for_rotation(%r) -> %r", target, k)
    return k


def _phase_on_fundamental(t0, k):
    """Phi on [-K, K] via the Carlson form of int_0^t du / (k'^2 + k^2 sn^2)"""
    kp2 = (1.0 - k) * (1.0 + k)
    c0 = math.sqrt(kp2) * math.sqrt(2.0 - k * k)
    return (c0 / kp2) * incomplete_third_carlson(t0, -k * k / kp2, k)


def orbitlike_pair(t, k):
    """
    (w1, w2, w1', w2', Phi) at argument t

    w1 is odd, w2 even, w2(0) = k', w1'(0) = -sqrt(2-k^2); Phi is the continuous phase with Phi(0) = 0.
    """
    t = np.asarray(t, dtype=float)
    m = k * k
    kp2 = (1.0 - k) * (1.0 + k)
    c0 = math.sqrt(kp2) * math.sqrt(2.0 - m)
    K = float(complete_K(k))
    delta = rotation_delta_theta(k)

    turns = np.round(t / (2.0 * K))
    t0 = t - 2.0 * K * turns
    phase = _phase_on_fundamental(t0, k) + turns * delta

    sn, cn, dn, _ = special.ellipj(t0, m)
    r = np.sqrt(kp2 + m * sn * sn)
    rp = m * sn * cn * dn / r
    sin_p, cos_p = np.sin(phase), np.cos(phase)
    w1 = -r * sin_p
    w2 = r * cos_p
    w1p = -rp * sin_p - (c0 / r) * cos_p
    w2p = rp * cos_p - (c0 / r) * sin_p
    return w1, w2, w1p, w2p, phase


def halphen_hermite_orbitlike(z, k):
    """
    (w1, w2, w1', w2') from the Halphen-Hermite solution H(z - i alpha)/Theta(z) exp(z zeta(i alpha))

    alpha = F(k', k') so that sn(i alpha, k)^2 = -(k'/k)^2; real and imaginary parts are
    scaled to w2(0) = k' and oriented so that w1'(0) < 0.
    """
    z = np.asarray(z, dtype=float)
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    alpha = float(incomplete_F(kp, kp))
    shift = 1j * alpha
    zeta_a = complex(jacobi_zeta(shift, k))

    def plus(x):
        x = np.asarray(x, dtype=float)
        h = np.asarray(theta_H(x - shift, k))
        hp = np.asarray(theta_H_derivative(x - shift, k))
        th = np.asarray(theta_Theta(x, k))
        thp = np.asarray(theta_Theta_derivative(x, k))
        growth = np.exp(x * zeta_a)
        value = h / th * growth
        deriv = (hp / th - h * thp / th ** 2 + zeta_a * h / th) * growth
        return value, deriv

    w0, w0p = plus(0.0)
    scale = kp / float(np.imag(w0))
    orientation = -1.0 if scale * float(np.real(w0p)) > 0.0 else 1.0
    value, deriv = plus(z)
    w1 = orientation * scale * np.real(value)
    w1p = orientation * scale * np.real(deriv)
    w2 = scale * np.imag(value)
    w2p = scale * np.imag(deriv)
    return w1, w2, w1p, w2p


def frame_orbitlike(s, params: OrbitlikeParams):
    """W1, W2, derivatives, curvature and unwrapped angle theta at s"""
    s = np.asarray(s, dtype=float)
    k = params.k
    root = params.scale
    K = params.modulus.quarter_period_K
    u = (s + params.s_star) / root
    t = -K + u
    w1, w2, w1p, w2p, phase = orbitlike_pair(t, k)
    sn, cn, dn = (np.asarray(v) for v in jacobi_sn_cn_dn(u, k))
    kappa = 2.0 * dn / root
    kappap = -2.0 * k * k * sn * cn / (root * root)
    return FrameValues(
        W1=w1 / root,
        W2=w2 / root,
        W1p=w1p / root ** 2,
        W2p=w2p / root ** 2,
        kappa=kappa,
        kappap=kappap,
        theta=phase,
    )
