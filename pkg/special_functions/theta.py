"""
Jacobi theta, eta and zeta functions

Theta(z,k) = theta_0(v, q), H(z,k) = theta_1(v, q), Theta_1(z,k) = theta_3(v, q)
with v = pi z / (2 K(k)) and the nome q = exp(-pi K(k') / K(k)).
Complex z is allowed; the series depth grows with |Im v|.
"""

import math
import warnings

import numpy as np

from utils import DomainError, PrecisionWarning, load_config
from .elliptic import EllipticModulus

CONFIG = load_config()['special_functions']


def _modulus(k):
    if isinstance(k, EllipticModulus):
        modulus = k
    else:
        try:
            modulus = EllipticModulus(float(k))
        except (TypeError, ValueError):
            raise DomainError(f"theta functions need a scalar modulus in (0, 1), got {k}")
    if modulus.k > CONFIG['precision_warning_k']:
        warnings.warn(f"theta series at k = {modulus.k} lose accuracy as q -> 1", PrecisionWarning,
                      stacklevel=3)
    return modulus


def _depth(v, decay):
    """Number of terms so that the tail is below the configured tolerance relative to the largest term"""
    tol = CONFIG['theta_tolerance']
    imag = float(np.max(np.abs(np.imag(v)))) if np.size(v) else 0.0
    return int(math.ceil(imag / decay + math.sqrt(-math.log(tol) / decay))) + 2


def _series(z, k, kind, derivative=False):
    modulus = _modulus(k)
    z = np.asarray(z)
    scale = math.pi / (2.0 * modulus.quarter_period_K)
    v = scale * z
    decay = modulus.nome_log
    depth = _depth(v, decay)
    vv = v[..., np.newaxis]
    if kind == 'H':
        n = np.arange(depth + 1, dtype=float)
        odd = 2.0 * n + 1.0
        coeff = 2.0 * (-1.0) ** n * np.exp(-decay * (n + 0.5) ** 2)
        if derivative:
            return scale * np.sum(coeff * odd * np.cos(odd * vv), axis=-1)
        return np.sum(coeff * np.sin(odd * vv), axis=-1)
    n = np.arange(1, depth + 1, dtype=float)
    sign = (-1.0) ** n if kind == 'Theta' else np.ones_like(n)
    coeff = 2.0 * sign * np.exp(-decay * n * n)
    if derivative:
        return -scale * np.sum(2.0 * n * coeff * np.sin(2.0 * n * vv), axis=-1)
    return 1.0 + np.sum(coeff * np.cos(2.0 * n * vv), axis=-1)


def _out(value):
    value = np.asarray(value)
    if value.ndim == 0:
        return value.item()
    return value


def theta_Theta(z, k):
    """Theta(z, k) = 1 + 2 sum (-1)^n q^(n^2) cos(2 n v)"""
    return _out(_series(z, k, 'Theta'))


def theta_H(z, k):
    """H(z, k) = 2 sum (-1)^n q^((n+1/2)^2) sin((2n+1) v)"""
    return _out(_series(z, k, 'H'))


def theta_Theta1(z, k):
    """Theta_1(z, k) = 1 + 2 sum q^(n^2) cos(2 n v)"""
    return _out(_series(z, k, 'Theta1'))


def theta_Theta_derivative(z, k):
    return _out(_series(z, k, 'Theta', derivative=True))


def theta_H_derivative(z, k):
    return _out(_series(z, k, 'H', derivative=True))


def theta_Theta1_derivative(z, k):
    return _out(_series(z, k, 'Theta1', derivative=True))


def jacobi_zeta(z, k):
    """Jacobi zeta function Theta'(z)/Theta(z) from the differentiated series"""
    modulus = _modulus(k)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', PrecisionWarning)
        return _out(_series(z, modulus, 'Theta', derivative=True) / _series(z, modulus, 'Theta'))
