"""
Utility functions for the hyperbolic elastica toolkit
"""

import os
import math
from fractions import Fraction

import numpy as np


class DomainError(ValueError):
    """Argument outside the documented domain of an operation"""


class CoefficientError(ValueError):
    """Curve coefficients violate the constraints of their family"""


class CurvatureZeroError(ValueError):
    """W1, W2 requested at a zero of the wavelike curvature"""


class RotationPoleError(ValueError):
    """Mobius rotation evaluated at its pole"""


class UnsupportedFamily(ValueError):
    """Operation not available for the requested elastica family"""


class NumericalFailure(RuntimeError):
    """A numerical procedure did not reach its target accuracy"""


class PrecisionWarning(UserWarning):
    """Result computed, but with reduced accuracy"""


THREADS_ENV_VAR = 'ELASTICA_THREADS'


def load_config():
    """Load configuration settings"""
    return {
        'special_functions': {
            'theta_tolerance': 1e-17,
            'precision_warning_k': 0.999,
        },
        'fundamental_system': {
            'curvature_zero_tol': 1e-12,
            'rotation_k_bracket': (1e-12, 1.0 - 1e-13),
        },
        'closed_curves': {
            'winding_samples_per_period': 10_000,
            'winding_snap_tol': 1e-3,
            'brute_force_samples': 20_000,
            'second_variation_samples': 4096,
            'second_variation_rtol': 1e-6,
        },
        'dirichlet': {
            'k_min': 0.02,
            'k_max': 0.998,
            'grid': 24,
            'l_max': 40,
            'tol': 1e-10,
            'max_starts': 48,
        },
        'oracle': {
            'rel_tol': 1e-11,
            'abs_tol': 1e-12,
            'max_step': np.inf,
        },
        'cli': {
            'threads': default_threads(),
            'float_format': '%.17g',
            'sample_count': 1000,
        },
        'reporting': {
            'output_dir': 'reports',
            'dpi': 150,
            'svg_hashsalt': 'elastica',
            'margin': 0.05,
        },
    }


def default_threads():
    """Thread count from the environment, falling back to the CPU count"""
    value = os.environ.get(THREADS_ENV_VAR)
    if value:
        try:
            threads = int(value)
        except ValueError:
            raise DomainError(f"{THREADS_ENV_VAR} must be an integer, got {value!r}")
        if threads < 1:
            raise DomainError(f"{THREADS_ENV_VAR} must be positive, got {threads}")
        return threads
    return os.cpu_count() or 1


def validate_modulus(k, lower=0.0, upper=1.0, include_lower=False, name='k'):
    """Validate a modulus (or array of moduli) against an open/half-open interval"""
    k_arr = np.asarray(k, dtype=float)
    if not np.all(np.isfinite(k_arr)):
        raise DomainError(f"{name} must be finite, got {k}")
    low_ok = k_arr >= lower if include_lower else k_arr > lower
    if not np.all(low_ok & (k_arr < upper)):
        bracket = '[' if include_lower else '('
        raise DomainError(f"{name} must lie in {bracket}{lower}, {upper}), got {k}")
    return k


def validate_coprime_pair(m, n):
    """Validate (m, n) as the rotation data of a closed orbitlike elastica"""
    if int(m) != m or int(n) != n or m < 1 or n < 1:
        raise DomainError(f"m and n must be positive integers, got ({m}, {n})")
    m, n = int(m), int(n)
    if math.gcd(m, n) != 1:
        raise DomainError(f"m and n must be coprime, got ({m}, {n})")
    ratio = 2 * m / n
    if not (1.0 < ratio < math.sqrt(2.0)):
        raise DomainError(f"need 1 < 2m/n < sqrt(2), got 2m/n = {ratio:.6f}")
    return m, n


def parse_number(text):
    """Parse a decimal or an 'm/n' rational"""
    text = str(text).strip()
    if '/' in text:
        try:
            return float(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"Cannot parse rational {text!r}")
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"Cannot parse number {text!r}")


def parse_rotation(text):
    """Parse 'm/n' as a rotation target 2*pi*m/n, returning (m, n, target)"""
    try:
        frac = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"Rotation must be given as m/n, got {text!r}")
    m, n = validate_coprime_pair(frac.numerator, frac.denominator)
    return m, n, 2.0 * math.pi * m / n


def parse_vector(text, length):
    """Parse a comma separated list of numbers (rationals allowed)"""
    parts = [p for p in str(text).split(',') if p.strip()]
    if len(parts) != length:
        raise DomainError(f"Expected {length} comma separated values, got {text!r}")
    return tuple(parse_number(p) for p in parts)
