"""
Boundary data and the reduction of the orbitlike Dirichlet problem to two equations in (s*, k)
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from elastica import CurveCoefficients, CurveState, Elastica, Mobius, fit_coefficients
from fundamental_system import OrbitlikeParams, frame_orbitlike
from special_functions import inverse_dn
from utils import DomainError

DEGENERATE_SIGMA = 1e-12
DN_SLACK = 1e-13


@dataclass(frozen=True)
class DirichletProblem:
    """gamma(0) = A, gamma(L) = B, exp(i phi(0)) = exp(i phiA), exp(i phi(L)) = exp(i phiB)"""
    A1: float
    A2: float
    B1: float
    B2: float
    phiA: float
    phiB: float

    def __post_init__(self):
        if not (self.A2 > 0 and self.B2 > 0):
            raise DomainError(f"boundary points must lie in the upper half-plane, got A2={self.A2}, B2={self.B2}")

    @property
    def start(self):
        return CurveState(self.A1, self.A2, self.phiA)

    @property
    def end(self):
        return CurveState(self.B1, self.B2, self.phiB)

    def mirrored(self):
        """Data of the mirror image under (x1, x2) -> (-x1, x2), phi -> pi - phi"""
        return DirichletProblem(-self.A1, self.A2, -self.B1, self.B2, math.pi - self.phiA, math.pi - self.phiB)


@dataclass(frozen=True)
class SigmaQuad:
    sigma1: float
    sigma2: float
    sigma3: float
    sigma4: float

    @property
    def angle_factor(self):
        """(sigma1 - i sigma2)(sigma3 + i sigma4), normalized to modulus one"""
        value = complex(self.sigma1, -self.sigma2) * complex(self.sigma3, self.sigma4)
        return value / abs(value)


@dataclass(frozen=True)
class Assembly:
    coeffs: Optional[CurveCoefficients]
    L: float
    r1: float
    r2: float
    sigma_sign: int
    feasible: bool
    reason: str
    sigmas: Optional[SigmaQuad]
    angle_ratio: complex = complex(math.nan, math.nan)
    dn_excess: float = 0.0

    @property
    def residual_vector(self):
        """(r1, Re rho - 1, Im rho) with rho the unit angle ratio"""
        return np.array([self.r1, self.angle_ratio.real - 1.0, self.angle_ratio.imag])


@dataclass(frozen=True)
class EndpointData:
    """Everything in the reduction that does not depend on the branch integer l"""
    params: OrbitlikeParams
    coeffs: CurveCoefficients
    kappa_end: float
    kappap_twice: float
    r1: float
    sigmas: SigmaQuad
    theta_start: float
    dn_target: float
    dn_excess: float


def _infeasible(reason, sigma=0, coeffs=None, sigmas=None, r1=math.nan, excess=0.0):
    return Assembly(coeffs, math.nan, r1, math.nan, sigma, False, reason, sigmas, dn_excess=excess)


def endpoint_data(problem: DirichletProblem, s_star, k):
    """
    Fit a3, b3, a, b at A and derive kappa(L), the sign data and r1 from the data at B

    sigma1 and sigma3 are taken in the forms 1 - a3 A2 kappa(0) and (1 - mu a3^2 |B - b3/a3|^2) / 2.
    These forms keep sigma1^2 + sigma2^2 = (kappa(0)^2 - mu) A2^2 a3^2.
    kappa(L) within DN_SLACK of an end of the range of kappa is snapped onto it.
    """
    params = OrbitlikeParams(k, s_star)
    mu = params.mu
    coeffs = fit_coefficients(params, problem.start)
    a3, b3 = coeffs.a3, coeffs.b3
    start = frame_orbitlike(0.0, params)
    kappa0 = float(start.kappa)

    sigma1 = 1.0 - a3 * problem.A2 * kappa0
    sigma2 = math.sqrt(mu) * (a3 * problem.A1 - b3)
    offset = a3 * problem.B1 - b3
    spread = mu * ((problem.B2 * a3) ** 2 + offset ** 2)
    sigma3 = 0.5 * (1.0 - spread)
    sigma4 = math.sqrt(mu) * offset

    X = (1.0 + spread) / (2.0 * problem.B2 * a3)
    u = 2.0 * mu * offset
    v = 2.0 * mu * a3 * problem.B2 - 2.0 * X
    sin_b, cos_b = math.sin(problem.phiB), math.cos(problem.phiB)
    kappap_twice = u * cos_b + v * sin_b
    r1 = X * X - (u * sin_b - v * cos_b)

    dn_target = X * params.scale / 2.0
    k_prime = params.modulus.k_prime
    if abs(dn_target - 1.0) <= DN_SLACK:
        dn_target = 1.0
    elif abs(dn_target - k_prime) <= DN_SLACK:
        dn_target = k_prime
    excess = max(k_prime - dn_target, dn_target - 1.0, 0.0)
    if excess <= DN_SLACK:
        excess = 0.0
    return EndpointData(params, coeffs, X, kappap_twice, r1, SigmaQuad(sigma1, sigma2, sigma3, sigma4),
                        float(start.theta), dn_target, excess)


def _sigma_branches(data: EndpointData):
    if abs(data.kappap_twice) < DEGENERATE_SIGMA:
        return (1, -1)
    return (1 if data.kappap_twice > 0 else -1,)


def assemble_from(data: EndpointData, l, sigma=None, clip=False):
    """Length and angle residual for branch l (and a given sign, or the sign of kappa'(L))"""
    params = data.params
    if data.coeffs.a3 <= 0:
        return _infeasible("a3 <= 0", coeffs=data.coeffs, sigmas=data.sigmas, r1=data.r1)
    sigma = sigma if sigma is not None else _sigma_branches(data)[0]
    if data.dn_excess > 0 and not clip:
        return _infeasible(f"kappa(L) outside the range of kappa (dn = {data.dn_target:.6g})", sigma,
                           data.coeffs, data.sigmas, data.r1, data.dn_excess)
    k_prime = params.modulus.k_prime
    K = params.modulus.quarter_period_K
    target = min(max(data.dn_target, k_prime), 1.0)
    # inverse_dn loses half the digits next to its ends
    if target == 1.0:
        offset = 0.0
    elif target == k_prime:
        offset = K
    else:
        offset = float(inverse_dn(target, params.k))
    L = -params.s_star + params.scale * (2.0 * l * K - sigma * offset)
    if L <= 0:
        return Assembly(data.coeffs, L, data.r1, math.nan, sigma, False, "L <= 0", data.sigmas,
                        dn_excess=data.dn_excess)
    theta_end = float(frame_orbitlike(L, params).theta)
    ratio = np.exp(1j * (theta_end - data.theta_start)) * np.conj(data.sigmas.angle_factor)
    return Assembly(data.coeffs, L, data.r1, float(abs(ratio - 1.0)), sigma, data.dn_excess == 0,
                    "" if data.dn_excess == 0 else "kappa(L) clipped to the range of kappa",
                    data.sigmas, complex(ratio), data.dn_excess)


def assemble(problem: DirichletProblem, s_star, k, l, sigma=None):
    """
    Coefficients, length and residuals of the candidate orbitlike solution with parameters (s*, k)
    on branch l. Infeasible candidates are returned with feasible=False and a reason.
    """
    data = endpoint_data(problem, s_star, k)
    candidates = [assemble_from(data, l, s) for s in ((sigma,) if sigma is not None else _sigma_branches(data))]
    feasible = [c for c in candidates if c.feasible]
    if not feasible:
        return candidates[0]
    return min(feasible, key=lambda c: math.hypot(c.r1, c.r2))


@dataclass(frozen=True)
class DirichletSolution:
    k: float
    s_star: float
    branch_l: int
    length_L: float
    coeffs: CurveCoefficients
    residual_r1: float
    residual_r2: float
    symmetric: bool = False
    orientation: str = 'positive'
    sigma_sign: int = 1

    @property
    def curve(self):
        return Elastica(OrbitlikeParams(self.k, self.s_star), self.coeffs)

    def state(self, s):
        """Curve state; negatively oriented solutions are mirror images of the fitted curve"""
        state = self.curve.state(s)
        if self.orientation == 'negative':
            return Mobius.reflect_h().apply_state(state)
        return state

    def as_dict(self):
        return {
            'k': self.k, 's_star': self.s_star, 'branch_l': self.branch_l, 'length_L': self.length_L,
            'coeffs': dict(zip(('a1', 'a2', 'a3', 'b1', 'b2', 'b3'), self.coeffs.as_tuple())),
            'residual_r1': self.residual_r1, 'residual_r2': self.residual_r2,
            'symmetric': self.symmetric, 'orientation': self.orientation,
        }
