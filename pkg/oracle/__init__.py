"""
Independent numerical oracle: ODE integration and the verification suites built on it
"""

from .integrators import (
    IntegrationConfig,
    OraclePath,
    check_Z_ode,
    check_z_prime,
    first_integral,
    integrate_curvature,
    integrate_elastica,
    integrate_frame,
    jacobi_reference,
    lame_residual,
    willmore_energy_numeric,
)
from .verification import SUITES, CheckResult, run_suite
