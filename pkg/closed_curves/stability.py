"""
Second variation of the Willmore energy along gamma_{m,n} and the monochromatic instability criterion
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from elastica import CurveCoefficients, Elastica, curvature, enclosure
from fundamental_system import OrbitlikeParams
from special_functions import complete_E, complete_K
from utils import DomainError, NumericalFailure, load_config, validate_coprime_pair
from .table import closed_curve_record, solve_k_mn

logger = logging.getLogger(__name__)

CONFIG = load_config()['closed_curves']

MIN_SAMPLES = 2048


@dataclass(frozen=True)
class StabilityCoefficients:
    alpha0: float
    beta0: float
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class InstabilityReport:
    m: int
    n: int
    k: float
    A_k: float
    B_k: float
    C_k: float
    n_threshold: float
    provably_unstable: bool
    test_mode_j: int
    I_value: float


@dataclass(frozen=True)
class TorusGap:
    annulus_width: float
    center_separation: float
    mu: float


def _cutoff_polynomial(k):
    K, E = float(complete_K(k)), float(complete_E(k))
    return 16.0 * (1.0 - k) * (1.0 + k) * K * K - 44.0 * (2.0 - k * k) * E * K + 75.0 * E * E


def stability_coefficients(k):
    """Mean values alpha0, beta0 of the second variation weights and the criterion constants A, B, C"""
    K, E = float(complete_K(k)), float(complete_E(k))
    m = k * k
    root = math.sqrt(2.0 - m)
    alpha0 = 20.0 * E / ((2.0 - m) * K) - 4.0
    beta0 = (28.0 * (2.0 - m) * E + 2.0 * (3.0 * m - 2.0) * (m + 2.0) * K) / (3.0 * (2.0 - m) ** 2 * K)
    # pi sqrt(alpha0) / (sqrt(2-k^2) K), i.e. 2 pi sqrt(5E - (2-k^2)K) / ((2-k^2) K^(3/2))
    A = math.pi * math.sqrt(max(alpha0, 0.0)) / (root * K)
    B = math.pi ** 2 / ((2.0 - m) * K * K)
    C = math.sqrt(max(_cutoff_polynomial(k), 0.0)) / (math.sqrt(3.0) * (2.0 - m) * K)
    return StabilityCoefficients(alpha0, beta0, A, B, C)


def instability_cutoff():
    """Modulus where 16k'^2K^2 - 44(2-k^2)EK + 75E^2 changes sign (about 0.6869145)"""
    return optimize.brentq(_cutoff_polynomial, 0.1, 0.99, xtol=1e-14)


def _monochromatic(k, n, j):
    coeffs = stability_coefficients(k)
    half_length = math.sqrt(2.0 - k * k) * n * float(complete_K(k))
    if j == 0:
        return coeffs.beta0 * 2.0 * half_length
    if (2 * j) % n == 0:
        raise DomainError(f"closed form needs 2j outside n N_0, got j={j}, n={n}")
    omega = math.pi * j / half_length
    return 2.0 * half_length * ((omega ** 2 - coeffs.alpha0 / 4.0) ** 2
                                + (8.0 * coeffs.beta0 - coeffs.alpha0 ** 2) / 16.0)


def monochromatic_second_variation(m, n, j):
    """I_{m,n}(cos(2 pi j s / L)) in closed form"""
    m, n = validate_coprime_pair(m, n)
    return _monochromatic(solve_k_mn(m, n), n, int(j))


def _test_mode(k, n, alpha0):
    centre = math.sqrt(max(alpha0, 0.0)) * math.sqrt(2.0 - k * k) * n * float(complete_K(k)) / (2.0 * math.pi)
    candidates = [j for j in {math.floor(centre), math.ceil(centre)} if j > 0 and (2 * j) % n != 0]
    if not candidates:
        return 0, _monochromatic(k, n, 0)
    values = {j: _monochromatic(k, n, j) for j in candidates}
    best = min(values, key=values.get)
    return best, values[best]


def instability_report(m, n):
    """Monochromatic instability criterion for gamma_{m,n}"""
    m, n = validate_coprime_pair(m, n)
    k = solve_k_mn(m, n)
    coeffs = stability_coefficients(k)
    if coeffs.C > 0:
        threshold = (coeffs.A + math.sqrt(coeffs.A ** 2 + 4.0 * coeffs.B * coeffs.C)) / (2.0 * coeffs.C)
    else:
        threshold = math.inf
    unstable = coeffs.C > 0 and n > threshold
    j, value = _test_mode(k, n, coeffs.alpha0)
    if unstable and not value < 0:
        raise NumericalFailure(f"criterion holds for ({m}, {n}) but I = {value:.6e} for mode j = {j}")
    return InstabilityReport(m, n, k, coeffs.A, coeffs.B, coeffs.C, threshold, unstable, j, value)


def monochromatic_samples(m, n, j, count):
    """cos(2 pi j s / L) on a uniform grid of [0, L)"""
    record = closed_curve_record(m, n)
    s = np.arange(count) * record.length_L / count
    return np.cos(2.0 * math.pi * j * s / record.length_L)


def _spectral_integral(values, kappa, kappap, length):
    count = values.size
    omega = 2.0 * math.pi * np.fft.fftfreq(count, d=length / count)
    spectrum = np.fft.fft(values)
    first = 1j * omega * spectrum
    if count % 2 == 0:
        first[count // 2] = 0.0
    d1 = np.fft.ifft(first).real
    d2 = np.fft.ifft(-omega ** 2 * spectrum).real
    k2 = kappa * kappa
    integrand = (2.0 * d2 ** 2 - (5.0 * k2 - 4.0) * d1 ** 2
                 + (6.0 * kappap ** 2 - k2 * k2 + 3.0 * k2 + 2.0) * values ** 2)
    return float(np.mean(integrand)) * length


def second_variation(m, n, phi_samples):
    """
    I_{m,n}(phi) = int 2 phi''^2 - (5 kappa^2 - 4) phi'^2 + (6 kappa'^2 - kappa^4 + 3 kappa^2 + 2) phi^2
    for an L-periodic phi given by uniform samples on [0, L), with spectral derivatives
    """
    values = np.asarray(phi_samples, dtype=float)
    if values.ndim != 1 or values.size < MIN_SAMPLES:
        raise DomainError(f"second_variation needs at least {MIN_SAMPLES} samples, got {values.size}")
    record = closed_curve_record(m, n)
    params = OrbitlikeParams(record.k_mn, 0.0)
    length = record.length_L
    s = np.arange(values.size) * length / values.size
    kappa, kappap = curvature(s, params)
    value = _spectral_integral(values, np.asarray(kappa), np.asarray(kappap), length)
    if values.size % 2 == 0:
        coarse = _spectral_integral(values[::2], np.asarray(kappa)[::2], np.asarray(kappap)[::2], length)
        if abs(value - coarse) > CONFIG['second_variation_rtol'] * max(abs(value), 1.0):
            logger.warning("second variation of (%d, %d) not resolved: %.10g vs %.10g at half resolution",
                           m, n, value, coarse)
    return value


def torus_convergence_gap(m, n):
    """Annulus width, center separation (a3 = 1, b3 = 0) and mu of gamma_{m,n}"""
    m, n = validate_coprime_pair(m, n)
    params = OrbitlikeParams(solve_k_mn(m, n), 0.0)
    curve = Elastica(params, CurveCoefficients.orbitlike(0.0, 1.0, 0.0, params.mu))
    region = enclosure(curve)
    return TorusGap(region.width, region.center_separation, params.mu)
