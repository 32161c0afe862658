"""
Closed-form evaluation of elasticae and fitting of their coefficients
"""

import math
from dataclasses import dataclass

import numpy as np

from fundamental_system import (
    OrbitlikeParams,
    WavelikeParams,
    frame_orbitlike,
    frame_wavelike,
)
from utils import CoefficientError, DomainError
from .coefficients import CurveCoefficients
from .geometry import CurveState

SPECIAL_KINDS = ('circular', 'geodesic_vertical', 'geodesic_halfcircle', 'catenoid')


def curvature(s, params):
    """(kappa, kappa') of the family at s"""
    if params.kind == 'orbitlike':
        f = frame_orbitlike(s, params)
    else:
        f = frame_wavelike(s, params)
    return f.kappa, f.kappap


def _unwrapped(phi):
    phi = np.asarray(phi, dtype=float)
    if phi.ndim == 1 and phi.size > 1:
        return np.unwrap(phi)
    return phi


def phi_from_formula(gamma1, gamma2, kappa, kappap, mu, a3, b3):
    """
    Tangent angle from (sin phi, cos phi) = mu/(2(kappa^2-mu)) [[kappa^2, 2kappa'], [2kappa', -kappa^2]] v
    with v = (a3 gamma1 - b3, a3 gamma2 - kappa/mu)
    """
    v1 = a3 * gamma1 - b3
    v2 = a3 * gamma2 - kappa / mu
    factor = mu / (2.0 * (kappa * kappa - mu))
    sin_phi = factor * (kappa * kappa * v1 + 2.0 * kappap * v2)
    cos_phi = factor * (2.0 * kappap * v1 - kappa * kappa * v2)
    return _unwrapped(np.arctan2(sin_phi, cos_phi))


def evaluate_orbitlike(s, params: OrbitlikeParams, coeffs: CurveCoefficients, check=True):
    """gamma = ((bW + b3), 1/kappa) / (aW + a3) with the angle from the b3/a3 identities"""
    if coeffs.kind != 'orbitlike':
        raise CoefficientError(f"evaluate_orbitlike needs orbitlike coefficients, got {coeffs.kind}")
    if check:
        coeffs.validate(params.mu)
    f = frame_orbitlike(s, params)
    denom = coeffs.a1 * f.W1 + coeffs.a2 * f.W2 + coeffs.a3
    gamma1 = (coeffs.b1 * f.W1 + coeffs.b2 * f.W2 + coeffs.b3) / denom
    gamma2 = 1.0 / (f.kappa * denom)
    phi = phi_from_formula(gamma1, gamma2, f.kappa, f.kappap, params.mu, coeffs.a3, coeffs.b3)
    return CurveState(gamma1, gamma2, phi, f.kappa, f.kappap)


def evaluate_wavelike(s, params: WavelikeParams, coeffs: CurveCoefficients, check=True):
    """Explicit formula written in W_hat1, W_hat2 and kappa, finite across zeros of kappa"""
    if coeffs.kind not in ('wavelike_a3_nonzero', 'wavelike_a3_zero'):
        raise CoefficientError(f"evaluate_wavelike needs wavelike coefficients, got {coeffs.kind}")
    if check:
        coeffs.validate(params.mu)
    f = frame_wavelike(s, params)
    denom = coeffs.a1 * f.W1hat + coeffs.a2 * f.W2hat + coeffs.a3 * f.kappa
    gamma1 = (coeffs.b1 * f.W1hat + coeffs.b2 * f.W2hat + coeffs.b3 * f.kappa) / denom
    gamma2 = 1.0 / denom
    phi = phi_from_formula(gamma1, gamma2, f.kappa, f.kappap, params.mu, coeffs.a3, coeffs.b3)
    return CurveState(gamma1, gamma2, phi, f.kappa, f.kappap)


def evaluate_special(kind, s):
    """Clifford circle, vertical geodesic, halfcircle geodesic or catenoid profile at s"""
    s = np.asarray(s, dtype=float)
    zero = np.zeros_like(s)
    if kind == 'circular':
        root2 = math.sqrt(2.0)
        denom = root2 + np.cos(s)
        gamma1 = (1.0 + root2) * np.sin(s) / denom
        gamma2 = (1.0 + root2) / denom
        phi = np.arctan2(np.sin(s), 1.0 + root2 * np.cos(s))
        return CurveState(gamma1, gamma2, _unwrapped(phi), zero + root2, zero)
    if kind == 'geodesic_vertical':
        return CurveState(zero, np.exp(s), zero + 0.5 * math.pi, zero, zero)
    if kind == 'geodesic_halfcircle':
        phi = np.arctan2(-np.tanh(s), 1.0 / np.cosh(s))
        return CurveState(np.tanh(s), 1.0 / np.cosh(s), phi, zero, zero)
    if kind == 'catenoid':
        sech = 1.0 / np.cosh(s)
        phi = np.arctan2(np.tanh(s), sech)
        return CurveState(s.copy(), np.cosh(s), phi, 2.0 * sech, -2.0 * sech * np.tanh(s))
    raise DomainError(f"unknown special elastica {kind!r}, expected one of {SPECIAL_KINDS}")


def special_period(kind):
    """Parameter period of the closed special curves"""
    if kind == 'circular':
        return 2.0 * math.pi
    return math.inf


def _scalar_state(initial: CurveState):
    return (float(initial.gamma1), float(initial.gamma2), float(initial.phi))


def _a3_b3(gamma1, gamma2, phi, kappa, kappap, mu):
    sin_p, cos_p = math.sin(phi), math.cos(phi)
    a3 = (2.0 * kappa + 2.0 * kappap * sin_p - kappa * kappa * cos_p) / (2.0 * mu * gamma2)
    b3 = a3 * gamma1 - (kappa * kappa * sin_p + 2.0 * kappap * cos_p) / (2.0 * mu)
    return a3, b3


def fit_coefficients(params, initial: CurveState, s0=0.0):
    """Coefficients of the elastica of `params` passing through `initial` at s0"""
    gamma1, gamma2, phi = _scalar_state(initial)
    if gamma2 <= 0:
        raise DomainError("initial point must lie in the upper half-plane")
    mu = params.mu
    if params.kind == 'orbitlike':
        f = frame_orbitlike(s0, params)
        kappa, kappap = float(f.kappa), float(f.kappap)
        a3, b3 = _a3_b3(gamma1, gamma2, phi, kappa, kappap, mu)
        sigma1 = 1.0 - a3 * gamma2 * kappa
        sigma2 = math.sqrt(mu) * (gamma1 * a3 - b3)
        rotor = a3 * complex(sigma2, sigma1) / math.hypot(sigma1, sigma2) * np.exp(1j * float(f.theta))
        return CurveCoefficients.orbitlike(rotor.real, rotor.imag, b3, mu)

    f = frame_wavelike(s0, params)
    kappa, kappap = float(f.kappa), float(f.kappap)
    w1, w2 = float(f.W1hat), float(f.W2hat)
    a3, b3 = _a3_b3(gamma1, gamma2, phi, kappa, kappap, mu)
    root = math.sqrt(abs(mu))
    scale = 1.0 / gamma2 + abs(kappa) + 1.0
    if abs(a3) > 1e-12 * scale:
        # a.W_hat = 1/gamma2 - a3 kappa, (a2, a1).W_hat = -sqrt|mu| (a3 gamma1 - b3)/gamma2
        tau1 = 1.0 / gamma2 - a3 * kappa
        tau2 = -root * (a3 * gamma1 - b3) / gamma2
        det = w1 * w1 - w2 * w2
        a1 = (w1 * tau1 - w2 * tau2) / det
        return CurveCoefficients.wavelike(a1, a3, b3, mu)

    # a3 = 0: a1 W_hat1 + |a1| W_hat2 = 1/gamma2; the sign of a1 follows from the derivative relation
    w1p, w2p = float(f.W1hatp), float(f.W2hatp)
    best = None
    for sign in (1.0, -1.0):
        a1 = 1.0 / (gamma2 * (w1 + sign * w2))
        if math.copysign(1.0, a1) != sign:
            continue
        mismatch = abs(a1 * (w1p + sign * w2p) + math.sin(phi) / gamma2)
        if best is None or mismatch < best[0]:
            best = (mismatch, a1)
    if best is None:
        raise CoefficientError("no consistent a1 for a3 = 0 wavelike fit")
    a1 = best[1]
    b1 = a1 * (gamma1 - b3 * kappa * gamma2)
    return CurveCoefficients.wavelike_a3_zero(a1, math.copysign(1.0, a1) * b1, b3, mu)


@dataclass(frozen=True)
class Elastica:
    """An elastica: curvature family parameters plus the six coefficients"""
    params: object
    coeffs: CurveCoefficients

    def __post_init__(self):
        self.coeffs.validate(self.params.mu)

    @property
    def kind(self):
        return self.params.kind

    @property
    def mu(self):
        return self.params.mu

    @classmethod
    def from_initial_state(cls, params, initial: CurveState, s0=0.0):
        return cls(params, fit_coefficients(params, initial, s0))

    @classmethod
    def unit(cls, params):
        """Coefficients with a3 = 1, b3 = 0 and a1 = 0"""
        if params.kind == 'orbitlike':
            return cls(params, CurveCoefficients.orbitlike(0.0, 1.0, 0.0, params.mu))
        return cls(params, CurveCoefficients.wavelike(0.0, 1.0, 0.0, params.mu))

    def state(self, s):
        if self.kind == 'orbitlike':
            return evaluate_orbitlike(s, self.params, self.coeffs, check=False)
        return evaluate_wavelike(s, self.params, self.coeffs, check=False)

    def frame(self, s):
        if self.kind == 'orbitlike':
            return frame_orbitlike(s, self.params)
        return frame_wavelike(s, self.params)

    def kappa(self, s):
        return curvature(s, self.params)[0]

    @property
    def period(self):
        return self.params.period
