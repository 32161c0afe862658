"""
The six constants a1, a2, a3, b1, b2, b3 of the explicit formulas
"""

import math
from dataclasses import dataclass

import numpy as np

from utils import CoefficientError

KINDS = ('orbitlike', 'wavelike_a3_nonzero', 'wavelike_a3_zero')


@dataclass(frozen=True)
class CurveCoefficients:
    a1: float
    a2: float
    a3: float
    b1: float
    b2: float
    b3: float
    kind: str = 'orbitlike'

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CoefficientError(f"unknown coefficient kind {self.kind!r}")

    @property
    def a(self):
        return np.array([self.a1, self.a2])

    @property
    def b(self):
        return np.array([self.b1, self.b2])

    def as_tuple(self):
        return (self.a1, self.a2, self.a3, self.b1, self.b2, self.b3)

    @classmethod
    def orbitlike(cls, a1, a2, b3, mu):
        """Complete (a1, a2, b3) by a3 = |a| and b = (b3/a3) a + (1/(sqrt(mu) a3)) a_perp"""
        a3 = math.hypot(a1, a2)
        if a3 == 0:
            raise CoefficientError("orbitlike coefficients need (a1, a2) != 0")
        root = math.sqrt(mu)
        b1 = b3 / a3 * a1 - a2 / (root * a3)
        b2 = b3 / a3 * a2 + a1 / (root * a3)
        return cls(a1, a2, a3, b1, b2, b3, 'orbitlike')

    @classmethod
    def wavelike(cls, a1, a3, b3, mu):
        """Complete (a1, a3, b3), a3 != 0, by a2 = sqrt(a1^2 + a3^2) and b = (b3/a3) a - (1/(sqrt|mu| a3)) (a2, a1)"""
        if a3 == 0:
            raise CoefficientError("use wavelike_a3_zero for a3 = 0")
        a2 = math.hypot(a1, a3)
        root = math.sqrt(abs(mu))
        b1 = b3 / a3 * a1 - a2 / (root * a3)
        b2 = b3 / a3 * a2 - a1 / (root * a3)
        return cls(a1, a2, a3, b1, b2, b3, 'wavelike_a3_nonzero')

    @classmethod
    def wavelike_a3_zero(cls, a1, b2, b3_sign, mu):
        """a3 = 0 family: a2 = |a1|, b1 = sign(a1) b2, |b3| = 1/sqrt|mu|"""
        if a1 == 0:
            raise CoefficientError("wavelike coefficients with a3 = 0 need a1 != 0")
        b3 = math.copysign(1.0 / math.sqrt(abs(mu)), b3_sign)
        return cls(a1, abs(a1), 0.0, math.copysign(1.0, a1) * b2, b2, b3, 'wavelike_a3_zero')

    def constraint_residual(self, mu):
        """Largest violation of the family's constraints, relative to the coefficient scale"""
        a1, a2, a3, b1, b2, b3 = self.as_tuple()
        if self.kind == 'orbitlike':
            if a3 <= 0:
                return math.inf
            root = math.sqrt(mu)
            res = [a3 - math.hypot(a1, a2),
                   b1 - (b3 / a3 * a1 - a2 / (root * a3)),
                   b2 - (b3 / a3 * a2 + a1 / (root * a3))]
            scale = 1.0 + abs(a3) + abs(b1) + abs(b2) + abs(b3)
        elif self.kind == 'wavelike_a3_nonzero':
            if a3 == 0:
                return math.inf
            root = math.sqrt(abs(mu))
            res = [a2 - math.hypot(a1, a3),
                   b1 - (b3 / a3 * a1 - a2 / (root * a3)),
                   b2 - (b3 / a3 * a2 - a1 / (root * a3))]
            scale = 1.0 + abs(a2) + abs(b1) + abs(b2) + abs(b3)
        else:
            root = math.sqrt(abs(mu))
            res = [a3, a2 - abs(a1), b1 - math.copysign(1.0, a1) * b2, abs(b3) - 1.0 / root]
            scale = 1.0 + abs(a2) + abs(b1) + abs(b2) + abs(b3)
        return max(abs(r) for r in res) / scale

    def validate(self, mu, tol=1e-9):
        """Raise CoefficientError when the constraints of the kind are violated"""
        residual = self.constraint_residual(mu)
        if not residual <= tol:
            raise CoefficientError(f"{self.kind} coefficients violate their constraints (residual {residual:.3e})")
        return self

    def scaled(self, factor):
        """Coefficients of the curve dilated by `factor` (a scales by 1/factor, b3/a3 by factor)"""
        return CurveCoefficients(self.a1 / factor, self.a2 / factor, self.a3 / factor,
                                 self.b1, self.b2, self.b3, self.kind)
