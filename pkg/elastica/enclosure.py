"""
Regions that contain an elastica: annulus (orbitlike), halfcircle annulus (wavelike, a3 != 0)
and cone (wavelike, a3 = 0)
"""

import math
from dataclasses import dataclass

import numpy as np

from utils import DomainError
from .geometry import _coords


def _disc_slack(points, center, radius):
    x1, x2 = _coords(points)
    return radius - np.hypot(x1 - center[0], x2 - center[1])


@dataclass(frozen=True)
class Annulus:
    """
    Closed outer disc minus open inner disc; the curve touches the outer circle where
    kappa is maximal and the inner circle where kappa is minimal
    """
    outer_center: tuple
    outer_radius: float
    inner_center: tuple
    inner_radius: float
    outer_touch_s: float
    inner_touch_s: float
    period: float

    kind = 'annulus'

    def contains(self, points):
        """Signed slack, >= 0 inside"""
        outer = _disc_slack(points, self.outer_center, self.outer_radius)
        inner = -_disc_slack(points, self.inner_center, self.inner_radius)
        return np.minimum(outer, inner)

    @property
    def width(self):
        """Outer minus inner radius"""
        return self.outer_radius - self.inner_radius

    @property
    def center_separation(self):
        return math.hypot(self.outer_center[0] - self.inner_center[0], self.outer_center[1] - self.inner_center[1])

    def touch_parameters(self, s_min, s_max):
        """Parameters in [s_min, s_max] where the curve meets the outer and inner circle"""
        def lattice(base):
            j0 = math.ceil((s_min - base) / self.period)
            j1 = math.floor((s_max - base) / self.period)
            return [base + j * self.period for j in range(j0, j1 + 1)]
        return lattice(self.outer_touch_s), lattice(self.inner_touch_s)

    def bounds(self, points=None):
        c, r = self.outer_center, self.outer_radius
        return c[0] - r, c[0] + r, max(c[1] - r, 0.0), c[1] + r

    def circles(self):
        return [(self.outer_center, self.outer_radius), (self.inner_center, self.inner_radius)]


@dataclass(frozen=True)
class HalfcircleAnnulus:
    """
    Lens between two circular arcs through the endpoint limits, around the limit halfcircle
    of center (b3/a3, 0) and radius eta
    """
    outer_center: tuple
    inner_center: tuple
    radius: float
    limit_center: float
    limit_radius: float
    touch_s: float
    half_period: float

    kind = 'halfcircle_annulus'

    def contains(self, points):
        outer = _disc_slack(points, self.outer_center, self.radius)
        inner = -_disc_slack(points, self.inner_center, self.radius)
        return np.minimum(outer, inner)

    @property
    def limits(self):
        return (self.limit_center - self.limit_radius, 0.0), (self.limit_center + self.limit_radius, 0.0)

    def touch_parameters(self, s_min, s_max):
        """Extrema of kappa in [s_min, s_max]; they alternate between the two arcs"""
        j0 = math.ceil((s_min - self.touch_s) / self.half_period)
        j1 = math.floor((s_max - self.touch_s) / self.half_period)
        return [self.touch_s + j * self.half_period for j in range(j0, j1 + 1)]

    def bounds(self, points=None):
        c, r = self.outer_center, self.radius
        return c[0] - r, c[0] + r, 0.0, c[1] + r

    def circles(self):
        return [(self.outer_center, self.radius), (self.inner_center, self.radius)]


@dataclass(frozen=True)
class Cone:
    """|gamma1 - apex| <= tan_half_aperture * gamma2, apex on the boundary"""
    apex: float
    tan_half_aperture: float
    touch_s: float
    half_period: float

    kind = 'cone'

    def contains(self, points):
        x1, x2 = _coords(points)
        return (self.tan_half_aperture * x2 - np.abs(x1 - self.apex)) / math.sqrt(1.0 + self.tan_half_aperture ** 2)

    @property
    def half_aperture(self):
        return math.atan(self.tan_half_aperture)

    def touch_parameters(self, s_min, s_max):
        j0 = math.ceil((s_min - self.touch_s) / self.half_period)
        j1 = math.floor((s_max - self.touch_s) / self.half_period)
        return [self.touch_s + j * self.half_period for j in range(j0, j1 + 1)]

    def bounds(self, points=None):
        if points is None:
            raise DomainError("a cone is unbounded; pass sampled points to get a view box")
        _, x2 = _coords(points)
        top = float(np.max(x2))
        reach = self.tan_half_aperture * top
        return self.apex - reach, self.apex + reach, 0.0, top

    def circles(self):
        return []


def _orbitlike_annulus(curve):
    params, coeffs = curve.params, curve.coeffs
    root = math.sqrt(params.mu)
    k_prime = params.modulus.k_prime
    scale = params.scale
    x0 = coeffs.b3 / coeffs.a3
    unit = 1.0 / (root * coeffs.a3)

    def disc(rho):
        return (x0, rho * unit), math.sqrt(rho * rho - 1.0) * unit

    outer_center, outer_radius = disc(scale / k_prime)
    inner_center, inner_radius = disc(scale)
    peak = math.fmod(-params.s_star, params.period)
    return Annulus(outer_center, outer_radius, inner_center, inner_radius,
                   peak, peak + 0.5 * params.period, params.period)


def _wavelike_region(curve):
    params, coeffs = curve.params, curve.coeffs
    root = math.sqrt(abs(params.mu))
    rho = params.scale / params.modulus.k_prime
    half_period = 0.5 * params.period
    peak = math.fmod(-params.s_star, half_period)
    if coeffs.kind == 'wavelike_a3_zero':
        return Cone(coeffs.b1 / coeffs.a1, rho, peak, half_period)
    eta = 1.0 / (root * abs(coeffs.a3))
    x0 = coeffs.b3 / coeffs.a3
    return HalfcircleAnnulus((x0, rho * eta), (x0, -rho * eta), eta * math.sqrt(1.0 + rho * rho),
                             x0, eta, peak, half_period)


def enclosure(curve):
    """Annulus, halfcircle annulus or cone containing the curve, by family and a3"""
    if curve.kind == 'orbitlike':
        return _orbitlike_annulus(curve)
    return _wavelike_region(curve)


def wavelike_limits(curve, periods=6):
    """
    (lim s -> +inf, lim s -> -inf) of a wavelike elastica as (x1, x2) pairs; an endpoint at
    infinity is reported as (nan, inf)
    """
    if curve.kind != 'wavelike':
        raise DomainError("endpoint limits exist for wavelike curves only")
    coeffs = curve.coeffs
    reach = periods * curve.params.period
    ahead = curve.state(np.array([reach]))
    behind = curve.state(np.array([-reach]))
    if coeffs.kind == 'wavelike_a3_zero':
        apex = (coeffs.b1 / coeffs.a1, 0.0)
        far = (math.nan, math.inf)
        return (apex, far) if float(ahead.gamma2[0]) < float(behind.gamma2[0]) else (far, apex)
    left, right = _wavelike_region(curve).limits
    x_ahead = float(ahead.gamma1[0])
    if abs(x_ahead - left[0]) <= abs(x_ahead - right[0]):
        return left, right
    return right, left
