"""
Explicit elasticae in the hyperbolic upper half-plane
"""

from .geometry import (
    HyperbolicPoint,
    CurveState,
    Mobius,
    MOBIUS_KINDS,
    hyperbolic_distance,
    mobius_map,
    mobius_apply,
    mobius_compose,
)
from .coefficients import CurveCoefficients
from .curves import (
    SPECIAL_KINDS,
    Elastica,
    curvature,
    evaluate_orbitlike,
    evaluate_wavelike,
    evaluate_special,
    fit_coefficients,
    phi_from_formula,
    special_period,
)
from .distance import (
    distance_Z,
    distinguished_point,
    xi_vectors,
    z_expansion_coefficients,
    z_expansion_constant_C,
    z_from_expansion,
    z_jet,
    z_prime,
    z_value,
)
from .enclosure import Annulus, Cone, HalfcircleAnnulus, enclosure, wavelike_limits
