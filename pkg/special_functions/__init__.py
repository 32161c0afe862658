"""
Elliptic integrals, Jacobi elliptic functions, Heuman's Lambda and theta functions
"""

from .elliptic import (
    EllipticModulus,
    complete_K,
    complete_E,
    complete_K_derivative,
    complete_E_derivative,
    incomplete_F,
    incomplete_E,
    incomplete_third_carlson,
    jacobi_sn_cn_dn,
    inverse_sn,
    inverse_cn,
    inverse_dn,
    heuman_lambda0,
    heuman_lambda0_derivatives,
)
from .theta import (
    theta_Theta,
    theta_H,
    theta_Theta1,
    theta_Theta_derivative,
    theta_H_derivative,
    theta_Theta1_derivative,
    jacobi_zeta,
)
