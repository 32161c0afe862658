"""
The conformally invariant distance function Z(s; P) and its expansion in the fundamental system
"""

import numpy as np

from utils import CurvatureZeroError, DomainError
from .geometry import CurveState, HyperbolicPoint


def _probe(P):
    if isinstance(P, HyperbolicPoint):
        p1, p2 = P.x1, P.x2
    else:
        p1, p2 = P
    if np.any(np.asarray(p2) == 0):
        raise DomainError("Z(s; P) needs P2 != 0")
    return p1, p2


def z_value(state: CurveState, P):
    """Z = ((gamma1-P1)^2 + (gamma2-P2)^2) / (2 P2 gamma2)"""
    p1, p2 = _probe(P)
    g1, g2 = np.asarray(state.gamma1), np.asarray(state.gamma2)
    return ((g1 - p1) ** 2 + (g2 - p2) ** 2) / (2.0 * p2 * g2)


def z_jet(state: CurveState, P):
    """
    (Z, Z', Z'') along a curve state, using gamma' = gamma2 (cos phi, sin phi) and phi' = kappa - cos phi
    """
    p1, p2 = _probe(P)
    g1, g2 = np.asarray(state.gamma1), np.asarray(state.gamma2)
    sin_p, cos_p = np.sin(state.phi), np.cos(state.phi)
    u = g1 - p1
    z = z_value(state, P)
    lever = g2 / p2 - z - 1.0
    zp = (u / p2) * cos_p + lever * sin_p
    phip = np.asarray(state.kappa) - cos_p
    zpp = g2 / p2 - zp * sin_p + phip * (-(u / p2) * sin_p + lever * cos_p)
    return z, zp, zpp


def distance_Z(s, P, curve):
    """Z(s; P) along `curve`; for P in the upper half-plane d(gamma(s), P) = arcosh(1 + Z)"""
    return z_value(curve.state(s), P)


def z_prime(s, P, curve):
    """Closed form Z'(s; P)"""
    return z_jet(curve.state(s), P)[1]


def _weights(state, P):
    p1, p2 = _probe(P)
    g1, g2 = float(state.gamma1), float(state.gamma2)
    u = g1 - p1
    return (u * u + p2 * p2) / (2.0 * p2 * g2), g2 / (2.0 * p2), u / p2


def _c_terms(state, mu):
    kappa, kappap = float(state.kappa), float(state.kappap)
    sin_p, cos_p = np.sin(float(state.phi)), np.cos(float(state.phi))
    c1 = kappa / mu + kappap * sin_p / mu - kappa ** 2 * cos_p / (2.0 * mu)
    c2 = kappa / mu - kappap * sin_p / mu + kappa ** 2 * cos_p / (2.0 * mu)
    c3 = -kappa ** 2 * sin_p / (2.0 * mu) - kappap * cos_p / mu
    return c1, c2, c3


def z_expansion_constant_C(state: CurveState, P, mu):
    """The constant C of the Z-ODE kappa Z'' - 2 kappa' Z' + kappa (Z+1) = 2 mu C"""
    alpha, beta, delta = _weights(state, P)
    c1, c2, c3 = _c_terms(state, mu)
    return alpha * c1 + beta * c2 + delta * c3


def xi_vectors(state: CurveState, frame, mu):
    """
    The three vectors xi^j solving [[W1, W2], [W1', W2']] xi^j = v^j at one parameter value
    """
    kappa, kappap = float(state.kappa), float(state.kappap)
    if kappa == 0 or not np.isfinite(float(frame.W1)):
        raise CurvatureZeroError("xi vectors are undefined at a zero of kappa")
    sin_p, cos_p = np.sin(float(state.phi)), np.cos(float(state.phi))
    c1, c2, c3 = _c_terms(state, mu)
    wronskian = np.array([[float(frame.W1), float(frame.W2)],
                          [float(frame.W1p), float(frame.W2p)]])
    rhs = np.array([
        [1.0 / kappa - c1, -sin_p / kappa - kappap / kappa ** 2],
        [1.0 / kappa - c2, sin_p / kappa - kappap / kappa ** 2],
        [-c3, cos_p / kappa],
    ]).T
    solved = np.linalg.solve(wronskian, rhs)
    return solved[:, 0], solved[:, 1], solved[:, 2]


def z_expansion_coefficients(curve, P, s0=0.0):
    """
    (A, B, C) with Z(s; P) = -1 + kappa(s) (A W1(s) + B W2(s) + C) for all s

    The result does not depend on s0. For wavelike curves s0 must avoid the zeros of kappa.
    """
    state = curve.state(float(s0))
    frame = curve.frame(float(s0))
    if frame.curvature_zero is not None and bool(np.any(frame.curvature_zero)):
        raise CurvatureZeroError(f"s0 = {s0} is a zero of the wavelike curvature")
    xi1, xi2, xi3 = xi_vectors(state, frame, curve.mu)
    alpha, beta, delta = _weights(state, P)
    A, B = alpha * xi1 + beta * xi2 + delta * xi3
    C = z_expansion_constant_C(state, P, curve.mu)
    return float(A), float(B), float(C)


def z_from_expansion(s, curve, coefficients):
    """-1 + kappa (A W1 + B W2 + C); for wavelike curves written with W_hat so it is finite at kappa zeros"""
    A, B, C = coefficients
    f = curve.frame(s)
    if f.W1hat is not None:
        return -1.0 + A * f.W1hat + B * f.W2hat + C * f.kappa
    return -1.0 + f.kappa * (A * f.W1 + B * f.W2 + C)


def distinguished_point(curve):
    """P with Z(s; P) = -1 + kappa(s)/sqrt(mu) for orbitlike curves"""
    coeffs = curve.coeffs
    if curve.kind != 'orbitlike':
        raise DomainError("the distinguished center exists for orbitlike curves only")
    return HyperbolicPoint(coeffs.b3 / coeffs.a3, 1.0 / (np.sqrt(curve.mu) * coeffs.a3))
