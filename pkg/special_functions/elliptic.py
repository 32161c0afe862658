"""
Elliptic integrals, Jacobi elliptic functions and Heuman's Lambda function

All functions accept scalars or numpy arrays and return the same shape.
Complete integrals come from scipy's Cephes routines, incomplete integrals
from Carlson's symmetric forms R_F, R_D, R_J.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from utils import DomainError


def _out(value):
    """Return python floats for 0-d results"""
    value = np.asarray(value)
    if value.ndim == 0:
        return value.item()
    return value


def _kprime_sq(k):
    k = np.asarray(k, dtype=float)
    return (1.0 - k) * (1.0 + k)


def _check_closed_unit(values, name, upper_open=False):
    arr = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite, got {values}")
    upper_ok = arr < 1.0 if upper_open else arr <= 1.0
    if not np.all((arr >= 0.0) & upper_ok):
        bracket = ')' if upper_open else ']'
        raise DomainError(f"{name} must lie in [0, 1{bracket}, got {values}")
    return arr


def complete_K(k):
    """Complete elliptic integral of the first kind K(k) = F(1, k)"""
    k = _check_closed_unit(k, 'k', upper_open=True)
    # ellipkm1 takes the complementary parameter and keeps K accurate as k -> 1
    return _out(special.ellipkm1(_kprime_sq(k)))


def complete_E(k):
    """Complete elliptic integral of the second kind E(k) = E(1, k)"""
    k = _check_closed_unit(k, 'k', upper_open=True)
    return _out(special.ellipe(k * k))


def complete_K_derivative(k):
    """dK/dk = (E - k'^2 K) / (k k'^2)"""
    k = np.asarray(k, dtype=float)
    kp2 = _kprime_sq(k)
    return _out((complete_E(k) - kp2 * complete_K(k)) / (k * kp2))


def complete_E_derivative(k):
    """dE/dk = (E - K) / k"""
    k = np.asarray(k, dtype=float)
    return _out((complete_E(k) - complete_K(k)) / k)


def _carlson_F(l, k):
    """F(l, k) for |l| <= 1 via R_F, odd in l"""
    l = np.asarray(l, dtype=float)
    l2 = l * l
    return l * special.elliprf(1.0 - l2, 1.0 - k * k * l2, 1.0)


def _carlson_E(l, k):
    """E(l, k) for |l| <= 1 via R_F and R_D, odd in l"""
    l = np.asarray(l, dtype=float)
    l2 = l * l
    x = 1.0 - l2
    y = 1.0 - k * k * l2
    rf = special.elliprf(x, y, 1.0)
    rd = special.elliprd(x, y, 1.0)
    return l * rf - (k * k / 3.0) * l * l2 * rd


def _check_incomplete_args(l, k):
    l = _check_closed_unit(l, 'l')
    k = _check_closed_unit(k, 'k')
    l, k = np.broadcast_arrays(l, k)
    if np.any((l == 1.0) & (k == 1.0)):
        raise DomainError("F(l, k) and E(l, k) are singular at l = 1, k = 1")
    return l, k


def incomplete_F(l, k):
    """Incomplete integral of the first kind F(l,k) = int_0^l dt / sqrt((1-t^2)(1-k^2 t^2))"""
    l, k = _check_incomplete_args(l, k)
    return _out(_carlson_F(l, k))


def incomplete_E(l, k):
    """Incomplete integral of the second kind E(l,k) = int_0^l sqrt(1-k^2 t^2) / sqrt(1-t^2) dt"""
    l, k = _check_incomplete_args(l, k)
    return _out(_carlson_E(l, k))


def incomplete_third_carlson(x, n, k):
    """
    int_0^x du / (1 - n sn(u,k)^2) for |x| <= K(k)

    Written with s = sn(x) as s R_F(c^2, d^2, 1) + (n/3) s^3 R_J(c^2, d^2, 1, 1 - n s^2),
    which requires 1 - n s^2 > 0 along the path.
    """
    x = np.asarray(x, dtype=float)
    sn, cn, dn, _ = special.ellipj(x, k * k)
    c2 = cn * cn
    d2 = dn * dn
    s2 = sn * sn
    rf = special.elliprf(c2, d2, 1.0)
    rj = special.elliprj(c2, d2, 1.0, 1.0 - n * s2)
    return sn * rf + (n / 3.0) * sn * s2 * rj


def jacobi_sn_cn_dn(u, k):
    """Jacobi elliptic functions sn, cn, dn with argument reduction modulo 4K"""
    k = _check_closed_unit(k, 'k', upper_open=True)
    u = np.asarray(u, dtype=float)
    quarter = special.ellipkm1(_kprime_sq(k))
    u_red = u - 4.0 * quarter * np.round(u / (4.0 * quarter))
    sn, cn, dn, _ = special.ellipj(u_red, k * k)
    return _out(sn), _out(cn), _out(dn)


def inverse_sn(z, k):
    """Principal inverse of sn on [-K, K]"""
    k = _check_closed_unit(k, 'k', upper_open=True)
    z = np.asarray(z, dtype=float)
    if not np.all(np.abs(z) <= 1.0):
        raise DomainError(f"sn^-1 needs z in [-1, 1], got {z}")
    return _out(_carlson_F(z, k))


def inverse_cn(z, k):
    """Principal inverse of cn on [0, K]"""
    k = _check_closed_unit(k, 'k', upper_open=True)
    z = _check_closed_unit(z, 'z')
    return _out(_carlson_F(np.sqrt(1.0 - z * z), k))


def inverse_dn(z, k, slack=1e-13):
    """
    Principal inverse of dn on [0, K]

    Values within `slack` outside [k', 1] are clipped onto the range.
    """
    k = _check_closed_unit(k, 'k', upper_open=True)
    z = np.asarray(z, dtype=float)
    kp = np.sqrt(_kprime_sq(k))
    if not np.all((z >= kp - slack) & (z <= 1.0 + slack)):
        raise DomainError(f"dn^-1 needs z in [k', 1] = [{kp}, 1], got {z}")
    z = np.clip(z, kp, 1.0)
    with np.errstate(invalid='ignore', divide='ignore'):
        l = np.where(k > 0, np.sqrt(1.0 - z * z) / np.where(k > 0, k, 1.0), 0.0)
    return _out(_carlson_F(np.clip(l, 0.0, 1.0), k))


def heuman_lambda0(l, k):
    """
    Heuman's Lambda function Lambda_0(arcsin(l), k)

    (2/pi) (E(k) F(l,k') + K(k) E(l,k') - K(k) F(l,k')); the boundary moduli use the
    limits Lambda_0 = l at k = 0 and Lambda_0 = (2/pi) arcsin(l) at k = 1.
    """
    l = _check_closed_unit(l, 'l')
    k = _check_closed_unit(k, 'k')
    l, k = np.broadcast_arrays(l, k)
    interior = (k > 0.0) & (k < 1.0)
    k_safe = np.where(interior, k, 0.5)
    kp = np.sqrt(_kprime_sq(k_safe))
    K = special.ellipkm1(kp * kp)
    E = special.ellipe(k_safe * k_safe)
    # at l = 1 the Carlson forms with k' = 1 give inf - inf; Lambda_0(pi/2, k) = 1
    at_pole = l == 1.0
    l_safe = np.where(at_pole, 0.5, l)
    Fp = _carlson_F(l_safe, kp)
    Ep = _carlson_E(l_safe, kp)
    value = (2.0 / math.pi) * (E * Fp + K * (Ep - Fp))
    value = np.where(at_pole, 1.0, value)
    value = np.where(k == 0.0, l, value)
    value = np.where(k == 1.0, (2.0 / math.pi) * np.arcsin(l), value)
    return _out(value)


def heuman_lambda0_derivatives(l, k):
    """Partial derivatives (d/dl, d/dk) of Lambda_0(arcsin(l), k) for 0 <= l < 1, 0 < k < 1"""
    l = np.asarray(l, dtype=float)
    k = np.asarray(k, dtype=float)
    kp2 = _kprime_sq(k)
    K = special.ellipkm1(kp2)
    E = special.ellipe(k * k)
    lp = np.sqrt(1.0 - l * l)
    root = np.sqrt(1.0 - kp2 * l * l)
    d_l = 2.0 * (E - kp2 * l * l * K) / (math.pi * lp * root)
    d_k = 2.0 * (E - K) * l * lp / (math.pi * k * root)
    return _out(d_l), _out(d_k)


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus k in (0,1) with cached derived quantities"""
    k: float
    k_prime: float = field(init=False)
    quarter_period_K: float = field(init=False)
    complete_E: float = field(init=False)
    quarter_period_K_prime: float = field(init=False)
    complete_E_prime: float = field(init=False)
    nome_q: float = field(init=False)

    def __post_init__(self):
        k = float(self.k)
        if not (0.0 < k < 1.0):
            raise DomainError(f"modulus must lie in (0, 1), got {k}")
        kp2 = (1.0 - k) * (1.0 + k)
        K = float(special.ellipkm1(kp2))
        K_prime = float(special.ellipkm1(k * k))
        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 'k_prime', math.sqrt(kp2))
        object.__setattr__(self, 'quarter_period_K', K)
        object.__setattr__(self, 'complete_E', float(special.ellipe(k * k)))
        object.__setattr__(self, 'quarter_period_K_prime', K_prime)
        object.__setattr__(self, 'complete_E_prime', float(special.ellipe(kp2)))
        object.__setattr__(self, 'nome_q', math.exp(-math.pi * K_prime / K))

    @classmethod
    def from_parameter(cls, m):
        """Build from the parameter m = k^2"""
        return cls(math.sqrt(m))

    @property
    def nome_log(self):
        """-log(q) = pi K(k') / K(k), the decay rate of the theta series"""
        return math.pi * self.quarter_period_K_prime / self.quarter_period_K
