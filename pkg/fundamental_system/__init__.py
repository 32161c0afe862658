"""
Fundamental systems of the Lame-type equations behind orbitlike and wavelike elasticae
"""

from .params import OrbitlikeParams, WavelikeParams, FrameValues
from .orbitlike import (
    rotation_delta_theta,
    rotation_delta_theta_derivative,
    solve_k_for_rotation,
    orbitlike_pair,
    halphen_hermite_orbitlike,
    frame_orbitlike,
)
from .wavelike import (
    wavelike_pair,
    wavelike_chi_increment,
    wavelike_hyperbolic_increment,
    halphen_hermite_wavelike,
    frame_wavelike,
)


def frame(s, params):
    """Dispatch to the frame of the params' family"""
    if params.kind == 'orbitlike':
        return frame_orbitlike(s, params)
    return frame_wavelike(s, params)


def kappa_period(params):
    return params.period
