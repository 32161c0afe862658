"""
Adaptive Runge-Kutta integration of the curve, curvature, Z and Lame equations

These are independent of the closed formulas; closed forms enter only as initial data.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, special

from elastica import CurveState, z_expansion_constant_C, z_jet, z_prime, z_value
from fundamental_system import halphen_hermite_orbitlike, orbitlike_pair
from utils import DomainError, NumericalFailure, load_config

logger = logging.getLogger(__name__)

CONFIG = load_config()['oracle']


@dataclass(frozen=True)
class IntegrationConfig:
    rel_tol: float = field(default=CONFIG['rel_tol'])
    abs_tol: float = field(default=CONFIG['abs_tol'])
    max_step: float = field(default=CONFIG['max_step'])

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0 and self.max_step > 0):
            raise DomainError("integration tolerances and max_step must be positive")


def _solve(rhs, s_end, y0, config, s_start=0.0):
    config = config or IntegrationConfig()
    if s_end == s_start:
        raise DomainError("integration interval has zero length")
    result = integrate.solve_ivp(
        rhs, (s_start, s_end), np.asarray(y0, dtype=float),
        method='DOP853', dense_output=True,
        rtol=config.rel_tol, atol=config.abs_tol, max_step=config.max_step,
    )
    if result.status < 0:
        raise NumericalFailure(f"integration failed: {result.message}")
    logger.debug("DOP853 on [%g, %g]: %d steps", s_start, s_end, result.t.size)
    return result.sol


@dataclass(frozen=True)
class OraclePath:
    """Dense solution of the curve equations gamma' = gamma2 (cos phi, sin phi), phi' = kappa - cos phi"""
    solution: object
    s_end: float
    kappa_fn: object = None

    def values(self, s):
        return self.solution(np.asarray(s, dtype=float))

    def state(self, s):
        y = self.values(s)
        if y.shape[0] >= 5:
            return CurveState(y[0], y[1], y[2], y[3], y[4])
        kappa = self.kappa_fn(np.asarray(s, dtype=float)) if self.kappa_fn is not None else np.nan
        return CurveState(y[0], y[1], y[2], kappa)

    def energy(self, s):
        """int_0^s kappa^2, available for paths from integrate_elastica"""
        y = self.values(s)
        if y.shape[0] < 6:
            raise DomainError("this path carries no energy component")
        return y[5]


def _curve_rhs(gamma2, phi, kappa):
    return gamma2 * math.cos(phi), gamma2 * math.sin(phi), kappa - math.cos(phi)


def integrate_frame(kappa_fn, initial: CurveState, s_end, config=None):
    """Curve with prescribed curvature from gamma(0), phi(0)"""
    def rhs(s, y):
        return _curve_rhs(y[1], y[2], float(kappa_fn(s)))

    y0 = [float(initial.gamma1), float(initial.gamma2), float(initial.phi)]
    return OraclePath(_solve(rhs, float(s_end), y0, config), float(s_end), kappa_fn)


def integrate_curvature(kappa0, kappap0, s_end, config=None):
    """kappa'' = kappa - kappa^3/2; returns the dense solution of (kappa, kappa')"""
    def rhs(s, y):
        return y[1], y[0] - 0.5 * y[0] ** 3

    return _solve(rhs, float(s_end), [kappa0, kappap0], config)


def first_integral(kappa, kappap):
    """mu = -kappa'^2 + kappa^2 - kappa^4/4"""
    return -kappap ** 2 + kappa ** 2 - 0.25 * kappa ** 4


def integrate_elastica(initial: CurveState, s_end, config=None):
    """
    Joint integration of (gamma1, gamma2, phi, kappa, kappa') and the running energy int kappa^2
    """
    def rhs(s, y):
        g1p, g2p, phip = _curve_rhs(y[1], y[2], y[3])
        return g1p, g2p, phip, y[4], y[3] - 0.5 * y[3] ** 3, y[3] ** 2

    y0 = [float(initial.gamma1), float(initial.gamma2), float(initial.phi),
          float(initial.kappa), float(initial.kappap), 0.0]
    if not np.all(np.isfinite(y0)):
        raise DomainError("integrate_elastica needs kappa and kappa' in the initial state")
    return OraclePath(_solve(rhs, float(s_end), y0, config), float(s_end))


def check_Z_ode(curve, P, config=None, s_end=None, samples=200):
    """
    max |kappa Z'' - 2 kappa' Z' + kappa (Z+1) - 2 mu C| along the integrated curve,
    with C taken from the initial state
    """
    s_end = s_end or 2.0 * curve.period
    start = curve.state(0.0)
    path = integrate_elastica(start, s_end, config)
    C = z_expansion_constant_C(start, P, curve.mu)
    grid = np.linspace(0.0, s_end, samples)
    state = path.state(grid)
    z, zp, zpp = z_jet(state, P)
    kappa, kappap = np.asarray(state.kappa), np.asarray(state.kappap)
    residual = kappa * zpp - 2.0 * kappap * zp + kappa * (z + 1.0) - 2.0 * curve.mu * C
    return float(np.max(np.abs(residual)))


def check_z_prime(curve, P, config=None, s_end=None, samples=200):
    """max |Z'(closed form) - dZ/ds| with the derivative taken from the integrator's dense output"""
    s_end = s_end or curve.period
    path = integrate_elastica(curve.state(0.0), s_end, config)
    h = 1e-5
    grid = np.linspace(4 * h, s_end - 4 * h, samples)
    stencil = [(-2, 1.0 / 12.0), (-1, -8.0 / 12.0), (1, 8.0 / 12.0), (2, -1.0 / 12.0)]
    numeric = sum(w * z_value(path.state(grid + j * h), P) for j, w in stencil) / h
    return float(np.max(np.abs(z_prime(grid, P, curve) - numeric)))


def willmore_energy_numeric(curve, L, method='ode', config=None):
    """(pi/2) int_0^L kappa^2, by the ODE energy component or by quad on the closed-form curvature"""
    if not L > 0:
        raise DomainError(f"length must be positive, got {L}")
    if method == 'ode':
        path = integrate_elastica(curve.state(0.0), L, config)
        return 0.5 * math.pi * float(path.energy(L))
    if method == 'quad':
        period = curve.period if math.isfinite(curve.period) else L
        edges = np.append(np.arange(0.0, L, period), L)
        total = 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            value, _ = integrate.quad(lambda s: float(curve.kappa(s)) ** 2, a, b, epsabs=0.0, epsrel=1e-13, limit=200)
            total += value
        return 0.5 * math.pi * total
    raise DomainError(f"unknown energy method {method!r}")


def jacobi_reference(u, k, config=None):
    """(sn, cn, dn) from sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn with (0, 1, 1) at u = 0"""
    u = np.atleast_1d(np.asarray(u, dtype=float))
    m = k * k

    def rhs(x, y):
        return y[1] * y[2], -y[0] * y[2], -m * y[0] * y[1]

    out = np.empty((3, u.size))
    out[:, u == 0] = np.array([[0.0], [1.0], [1.0]])
    for mask in (u > 0, u < 0):
        if np.any(mask):
            sol = _solve(rhs, float(u[mask][np.argmax(np.abs(u[mask]))]), [0.0, 1.0, 1.0], config)
            out[:, mask] = sol(u[mask])
    return out[0], out[1], out[2]


def lame_residual(k, z, config=None):
    """
    Max deviation of the polar and theta-function pairs from the integrated solution of
    w'' + 2 dn^2 w = 0 started from the theta-function data at 0
    """
    z = np.atleast_1d(np.asarray(z, dtype=float))
    m = k * k
    w1, w2, w1p, w2p = (float(v) for v in halphen_hermite_orbitlike(0.0, k))

    def rhs(t, y):
        dn = special.ellipj(t, m)[2]
        q = 2.0 * dn * dn
        return y[2], y[3], -q * y[0], -q * y[1]

    worst = 0.0
    for mask in (z > 0, z < 0):
        if not np.any(mask):
            continue
        points = z[mask]
        sol = _solve(rhs, float(points[np.argmax(np.abs(points))]), [w1, w2, w1p, w2p], config)
        reference = sol(points)
        polar = np.array(orbitlike_pair(points, k)[:4])
        theta_pair = np.array(halphen_hermite_orbitlike(points, k))
        worst = max(worst, float(np.max(np.abs(polar - reference))), float(np.max(np.abs(theta_pair - reference))))
    return worst
