"""
Points, curve states, hyperbolic distance and Mobius isometries of the upper half-plane
"""

import math
from dataclasses import dataclass

import numpy as np

from utils import DomainError, RotationPoleError


@dataclass(frozen=True)
class HyperbolicPoint:
    """Point (x1, x2); x2 may be negative or complex when used as a probe for Z"""
    x1: float
    x2: complex

    def __post_init__(self):
        if np.any(np.asarray(self.x2) == 0):
            raise DomainError("HyperbolicPoint needs x2 != 0")

    @property
    def as_complex(self):
        return np.asarray(self.x1) + 1j * np.asarray(self.x2)

    def is_geometric(self):
        x2 = np.asarray(self.x2)
        return bool(np.all(np.isreal(x2)) and np.all(np.real(x2) > 0))


@dataclass(frozen=True)
class CurveState:
    """Position, tangent angle and curvature of an arclength parametrized curve"""
    gamma1: np.ndarray
    gamma2: np.ndarray
    phi: np.ndarray
    kappa: np.ndarray = np.nan
    kappap: np.ndarray = np.nan

    def __post_init__(self):
        if not np.all(np.asarray(self.gamma2) > 0):
            raise DomainError("curve points must lie in the upper half-plane (gamma2 > 0)")

    @property
    def point(self):
        return HyperbolicPoint(self.gamma1, self.gamma2)

    @property
    def tangent(self):
        """Unit complex number exp(i phi)"""
        return np.exp(1j * np.asarray(self.phi))

    def at(self, index):
        """Single sample of a sampled state"""
        pick = lambda v: np.asarray(v)[index] if np.ndim(v) else v
        return CurveState(pick(self.gamma1), pick(self.gamma2), pick(self.phi), pick(self.kappa), pick(self.kappap))


def _coords(p):
    if isinstance(p, (HyperbolicPoint,)):
        return np.asarray(p.x1, dtype=float), np.asarray(p.x2, dtype=float)
    if isinstance(p, CurveState):
        return np.asarray(p.gamma1, dtype=float), np.asarray(p.gamma2, dtype=float)
    arr = np.asarray(p, dtype=float)
    return arr[..., 0], arr[..., 1]


def hyperbolic_distance(p, q):
    """Distance arcosh(1 + |p-q|^2 / (2 p2 q2)), computed as 2 arsinh(|p-q| / (2 sqrt(p2 q2)))"""
    x1, x2 = _coords(p)
    y1, y2 = _coords(q)
    if np.any(x2 <= 0) or np.any(y2 <= 0):
        raise DomainError("hyperbolic distance needs points with positive height")
    chord = np.hypot(x1 - y1, x2 - y2)
    value = 2.0 * np.arcsinh(chord / (2.0 * np.sqrt(x2 * y2)))
    return value.item() if np.ndim(value) == 0 else value


@dataclass(frozen=True)
class Mobius:
    """
    Isometry z -> (a w + b)/(c w + d) with ad - bc > 0, where w = -conj(z) if `reflect` else w = z
    """
    a: float
    b: float
    c: float
    d: float
    reflect: bool = False

    def __post_init__(self):
        if self.a * self.d - self.b * self.c <= 0:
            raise DomainError("Mobius map needs ad - bc > 0")

    @classmethod
    def translate(cls, a):
        return cls(1.0, float(a), 0.0, 1.0)

    @classmethod
    def dilate(cls, b):
        if b <= 0:
            raise DomainError(f"dilation factor must be positive, got {b}")
        return cls(float(b), 0.0, 0.0, 1.0)

    @classmethod
    def rotate(cls, theta):
        half = 0.5 * float(theta)
        return cls(math.cos(half), math.sin(half), -math.sin(half), math.cos(half))

    @classmethod
    def reflect_h(cls):
        return cls(1.0, 0.0, 0.0, 1.0, reflect=True)

    @classmethod
    def invert(cls):
        # 1/conj(z) = -1/w for w = -conj(z)
        return cls(0.0, -1.0, 1.0, 0.0, reflect=True)

    def _mirrored(self):
        # R o A = A' o R for R(z) = -conj(z)
        return Mobius(self.a, -self.b, -self.c, self.d)

    def __matmul__(self, other):
        """Composition self o other"""
        inner = other._mirrored() if self.reflect else Mobius(other.a, other.b, other.c, other.d)
        a = self.a * inner.a + self.b * inner.c
        b = self.a * inner.b + self.b * inner.d
        c = self.c * inner.a + self.d * inner.c
        d = self.c * inner.b + self.d * inner.d
        return Mobius(a, b, c, d, reflect=self.reflect != other.reflect)

    def apply_point(self, z):
        z = np.asarray(z, dtype=complex)
        w = -np.conj(z) if self.reflect else z
        denom = self.c * w + self.d
        if np.any(np.abs(denom) < 1e-300):
            raise RotationPoleError("Mobius map evaluated at its pole")
        return (self.a * w + self.b) / denom, denom

    def apply_state(self, state: CurveState):
        z = np.asarray(state.gamma1) + 1j * np.asarray(state.gamma2)
        image, denom = self.apply_point(z)
        phi = np.asarray(state.phi, dtype=float)
        if self.reflect:
            phi = math.pi - phi
        phi = phi - 2.0 * np.angle(denom)
        sign = -1.0 if self.reflect else 1.0
        return CurveState(
            np.real(image),
            np.imag(image),
            phi,
            sign * np.asarray(state.kappa, dtype=float),
            sign * np.asarray(state.kappap, dtype=float),
        )


MOBIUS_KINDS = {
    'translate': Mobius.translate,
    'dilate': Mobius.dilate,
    'rotate': Mobius.rotate,
    'reflect_h': lambda: Mobius.reflect_h(),
    'invert': lambda: Mobius.invert(),
}


def mobius_map(kind, *args):
    """Build a named isometry"""
    try:
        factory = MOBIUS_KINDS[kind]
    except KeyError:
        raise DomainError(f"unknown Mobius kind {kind!r}, expected one of {sorted(MOBIUS_KINDS)}")
    return factory(*args)


def mobius_apply(kind, state, *args):
    """Apply translate(a), dilate(b), rotate(theta), reflect_h or invert to a curve state"""
    transform = kind if isinstance(kind, Mobius) else mobius_map(kind, *args)
    return transform.apply_state(state)


def mobius_compose(*maps):
    """Composition maps[0] o maps[1] o ..."""
    result = Mobius(1.0, 0.0, 0.0, 1.0)
    for transform in maps:
        result = result @ transform
    return result
