"""
Fundamental system of w'' - 2(1-k^2)/cn^2 w = 0 and the wavelike frame

The smooth extensions w_hat = cn * w are evaluated in hyperbolic polar form,
w_hat2 = rho cosh(chi), w_hat1 = rho sinh(chi) with rho^2 = k'^2 + (2k^2-1) cn^2
and chi' = -k k' sqrt(2k^2-1) cn^2 / rho^2.
"""

import math

import numpy as np
from scipy import special

from special_functions import (
    jacobi_sn_cn_dn,
    jacobi_zeta,
    theta_Theta,
    theta_Theta1,
    theta_Theta1_derivative,
    theta_Theta_derivative,
)
from utils import load_config
from .params import FrameValues, WavelikeParams

CONFIG = load_config()['fundamental_system']


def _chi_on_fundamental(t0, k):
    """chi on [-K, K]: -(c1/k^2) (u - ((1-n)/3) sn^3 R_J(cn^2, dn^2, 1, 1 - n sn^2)), n = (2k^2-1)/k^2"""
    m = k * k
    kp2 = (1.0 - k) * (1.0 + k)
    c1 = k * math.sqrt(kp2) * math.sqrt(2.0 * m - 1.0)
    n = (2.0 * m - 1.0) / m
    sn, cn, dn, _ = special.ellipj(t0, m)
    s3 = sn ** 3
    rj = special.elliprj(cn * cn, dn * dn, 1.0, 1.0 - n * sn * sn)
    return -(c1 / m) * (t0 - ((1.0 - n) / 3.0) * s3 * rj)


def wavelike_chi_increment(k):
    """Increment of chi over 2K, negative"""
    K = float(special.ellipkm1((1.0 - k) * (1.0 + k)))
    return 2.0 * float(_chi_on_fundamental(K, k))


def wavelike_hyperbolic_increment(k):
    """Increment of the wavelike angle theta over one curvature period, positive"""
    return -2.0 * wavelike_chi_increment(k)


def wavelike_pair(t, k):
    """(w_hat1, w_hat2, w_hat1', w_hat2', chi) at argument t"""
    t = np.asarray(t, dtype=float)
    m = k * k
    kp2 = (1.0 - k) * (1.0 + k)
    c1 = k * math.sqrt(kp2) * math.sqrt(2.0 * m - 1.0)
    K = float(special.ellipkm1(kp2))
    turns = np.round(t / (2.0 * K))
    t0 = t - 2.0 * K * turns
    chi = _chi_on_fundamental(t0, k) + turns * wavelike_chi_increment(k)

    sn, cn, dn, _ = special.ellipj(t0, m)
    # cn changes sign under the 2K shift, cn^2, sn cn dn do not
    rho = np.sqrt(kp2 + (2.0 * m - 1.0) * cn * cn)
    rhop = -(2.0 * m - 1.0) * cn * sn * dn / rho
    chip = -c1 * cn * cn / rho ** 2
    sh, ch = np.sinh(chi), np.cosh(chi)
    what1 = rho * sh
    what2 = rho * ch
    what1p = rhop * sh + rho * chip * ch
    what2p = rhop * ch + rho * chip * sh
    return what1, what2, what1p, what2p, chi


def halphen_hermite_wavelike(z, k):
    """
    (w_hat1, w_hat2, w_hat1', w_hat2') from w_pm = Theta_1(z +- alpha)/Theta(z) exp(-+ z zeta(alpha))

    alpha = F(k'/k, k), normalized by k / (w_+(0) + w_-(0)).
    """
    z = np.asarray(z, dtype=float)
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    alpha = float(special.ellipkinc(math.asin(kp / k), k * k))
    zeta_a = float(jacobi_zeta(alpha, k))

    th = np.asarray(theta_Theta(z, k))
    thp = np.asarray(theta_Theta_derivative(z, k))

    def branch(sign):
        shifted = z + sign * alpha
        t1 = np.asarray(theta_Theta1(shifted, k))
        t1p = np.asarray(theta_Theta1_derivative(shifted, k))
        growth = np.exp(-sign * z * zeta_a)
        value = t1 / th * growth
        deriv = (t1p / th - t1 * thp / th ** 2 - sign * zeta_a * t1 / th) * growth
        return value, deriv

    plus, plus_p = branch(1.0)
    minus, minus_p = branch(-1.0)
    norm = k / (2.0 * float(theta_Theta1(alpha, k)) / float(theta_Theta(0.0, k)))
    return norm * (plus - minus), norm * (plus + minus), norm * (plus_p - minus_p), norm * (plus_p + minus_p)


def frame_wavelike(s, params: WavelikeParams):
    """
    W_hat pair (finite everywhere), W pair (NaN at kappa zeros), curvature and hyperbolic angle

    W_hat2 - i W_hat1 = sqrt(kappa^2 - mu) (cosh theta + i sinh theta), theta(-s*) = 0.
    """
    s = np.asarray(s, dtype=float)
    k = params.k
    root = params.scale
    t = (s + params.s_star) / root
    what1, what2, what1p, what2p, chi = wavelike_pair(t, k)
    sn, cn, dn = (np.asarray(v) for v in jacobi_sn_cn_dn(t, k))

    amp = 2.0 * k / (root * root)
    W1hat = amp * what1
    W2hat = amp * what2
    W1hatp = amp * what1p / root
    W2hatp = amp * what2p / root
    kappa = (2.0 * k / root) * cn
    kappap = -(2.0 * k / (root * root)) * sn * dn

    zero = np.abs(cn) < CONFIG['curvature_zero_tol']
    with np.errstate(divide='ignore', invalid='ignore'):
        safe = np.where(zero, 1.0, kappa)
        W1 = np.where(zero, np.nan, W1hat / safe)
        W2 = np.where(zero, np.nan, W2hat / safe)
        W1p = np.where(zero, np.nan, W1hatp / safe - W1hat * kappap / safe ** 2)
        W2p = np.where(zero, np.nan, W2hatp / safe - W2hat * kappap / safe ** 2)
    return FrameValues(
        W1=W1,
        W2=W2,
        W1p=W1p,
        W2p=W2p,
        kappa=kappa,
        kappap=kappap,
        theta=-chi,
        W1hat=W1hat,
        W2hat=W2hat,
        W1hatp=W1hatp,
        W2hatp=W2hatp,
        curvature_zero=zero,
    )
