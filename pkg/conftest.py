import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from closed_curves import canonical_curve, closed_curve_record  # noqa: E402

IDENTITY_TOL = 1e-10
JACOBI_TOL = 1e-12
THETA_TOL = 1e-13


@pytest.fixture(params=[0.1, 0.5, 0.8, 0.95])
def modulus(request):
    return request.param


@pytest.fixture(params=[0.75, 0.8, 0.9])
def wavelike_modulus(request):
    return request.param


@pytest.fixture(scope='session')
def gamma_2_3():
    return canonical_curve(2, 3), closed_curve_record(2, 3)


@pytest.fixture(scope='session')
def gamma_3_5():
    return canonical_curve(3, 5), closed_curve_record(3, 5)
