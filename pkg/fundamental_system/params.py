"""
Parameter records for the two elastica families and the frame value bundle
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from special_functions import EllipticModulus, incomplete_F
from utils import CurvatureZeroError, DomainError


@dataclass(frozen=True)
class OrbitlikeParams:
    """Orbitlike curvature kappa(s) = 2/sqrt(2-k^2) dn((s+s*)/sqrt(2-k^2), k)"""
    k: float
    s_star: float = 0.0
    kind = 'orbitlike'
    mu: float = field(init=False)
    modulus: EllipticModulus = field(init=False, repr=False)
    scale: float = field(init=False, repr=False)

    def __post_init__(self):
        k = float(self.k)
        if not (0.0 < k < 1.0):
            raise DomainError(f"orbitlike modulus must lie in (0, 1), got {k}")
        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 's_star', float(self.s_star))
        object.__setattr__(self, 'modulus', EllipticModulus(k))
        object.__setattr__(self, 'scale', math.sqrt(2.0 - k * k))
        object.__setattr__(self, 'mu', 4.0 * (1.0 - k) * (1.0 + k) / (2.0 - k * k) ** 2)

    @property
    def period(self):
        """Period of kappa, 2 sqrt(2-k^2) K(k)"""
        return 2.0 * self.scale * self.modulus.quarter_period_K

    @property
    def kappa_max(self):
        return 2.0 / self.scale

    @property
    def kappa_min(self):
        return 2.0 * self.modulus.k_prime / self.scale

    def with_shift(self, s_star):
        return OrbitlikeParams(self.k, s_star)


@dataclass(frozen=True)
class WavelikeParams:
    """Wavelike curvature kappa(s) = 2k/sqrt(2k^2-1) cn((s+s*)/sqrt(2k^2-1), k)"""
    k: float
    s_star: float = 0.0
    kind = 'wavelike'
    mu: float = field(init=False)
    alpha_k: float = field(init=False)
    modulus: EllipticModulus = field(init=False, repr=False)
    scale: float = field(init=False, repr=False)

    def __post_init__(self):
        k = float(self.k)
        if not (1.0 / math.sqrt(2.0) < k < 1.0):
            raise DomainError(f"wavelike modulus must lie in (1/sqrt(2), 1), got {k}")
        modulus = EllipticModulus(k)
        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 's_star', float(self.s_star))
        object.__setattr__(self, 'modulus', modulus)
        object.__setattr__(self, 'scale', math.sqrt(2.0 * k * k - 1.0))
        object.__setattr__(self, 'mu', -4.0 * k * k * (1.0 - k) * (1.0 + k) / (2.0 * k * k - 1.0) ** 2)
        object.__setattr__(self, 'alpha_k', float(incomplete_F(modulus.k_prime / k, k)))

    @property
    def period(self):
        """Period of kappa, 4 sqrt(2k^2-1) K(k)"""
        return 4.0 * self.scale * self.modulus.quarter_period_K

    @property
    def kappa_max(self):
        return 2.0 * self.k / self.scale

    def with_shift(self, s_star):
        return WavelikeParams(self.k, s_star)


@dataclass(frozen=True)
class FrameValues:
    """Normalized fundamental pair, curvature and angle function at one or more s"""
    W1: np.ndarray
    W2: np.ndarray
    W1p: np.ndarray
    W2p: np.ndarray
    kappa: np.ndarray
    kappap: np.ndarray
    theta: np.ndarray
    W1hat: Optional[np.ndarray] = None
    W2hat: Optional[np.ndarray] = None
    W1hatp: Optional[np.ndarray] = None
    W2hatp: Optional[np.ndarray] = None
    curvature_zero: Optional[np.ndarray] = None

    def require_regular(self):
        """Raise if W1, W2 were requested at a zero of kappa"""
        if self.curvature_zero is not None and np.any(self.curvature_zero):
            raise CurvatureZeroError("W1, W2 are undefined at zeros of the wavelike curvature; use W1hat, W2hat")
        return self
