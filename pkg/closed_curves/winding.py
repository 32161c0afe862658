"""
Winding numbers of closed elasticae by summation of angle increments
"""

import logging
import math

import numpy as np

from elastica import distinguished_point
from utils import NumericalFailure, load_config
from .table import canonical_curve, closed_curve_record

logger = logging.getLogger(__name__)

CONFIG = load_config()['closed_curves']

MAX_DOUBLINGS = 6


def _snap_winding(path, length, samples):
    """Sum arg(z_{i+1}/z_i) over a closed complex path; doubles the sampling until the sum is an integer"""
    tol = CONFIG['winding_snap_tol']
    for _ in range(MAX_DOUBLINGS + 1):
        z = path(np.linspace(0.0, length, samples + 1))
        if np.any(z == 0):
            raise NumericalFailure("curve passes through the winding center")
        total = float(np.sum(np.angle(z[1:] / z[:-1]))) / (2.0 * math.pi)
        nearest = round(total)
        if abs(total - nearest) <= tol:
            return int(nearest)
        logger.debug("winding sum %.6f with %d samples, doubling", total, samples)
        samples *= 2
    raise NumericalFailure(f"winding number did not snap to an integer (last sum {total:.6f})")


def winding_number_about(curve, P, length, periods=1):
    """Winding number of the closed curve s -> gamma(s) - P on [0, length]"""
    p = complex(float(P.x1), float(P.x2)) if hasattr(P, 'x1') else complex(*P)
    samples = CONFIG['winding_samples_per_period'] * max(int(periods), 1)

    def path(s):
        state = curve.state(s)
        return np.asarray(state.gamma1) + 1j * np.asarray(state.gamma2) - p

    return _snap_winding(path, length, samples)


def winding_number(m, n):
    """Winding number of gamma_{m,n} around (b3/a3, 1/(sqrt(mu) a3)); equals m"""
    curve = canonical_curve(m, n)
    record = closed_curve_record(m, n)
    return winding_number_about(curve, distinguished_point(curve), record.length_L, periods=n)


def auxiliary_winding(m, n):
    """Winding number of eta = gamma1 - b3/a3 + i (gamma2 kappa/sqrt(mu) - 1/(sqrt(mu) a3)) around 0"""
    curve = canonical_curve(m, n)
    record = closed_curve_record(m, n)
    coeffs = curve.coeffs
    root = math.sqrt(curve.mu)

    def path(s):
        state = curve.state(s)
        real = np.asarray(state.gamma1) - coeffs.b3 / coeffs.a3
        imag = np.asarray(state.gamma2) * np.asarray(state.kappa) / root - 1.0 / (root * coeffs.a3)
        return real + 1j * imag

    return _snap_winding(path, record.length_L, CONFIG['winding_samples_per_period'] * n)
