import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from closed_curves import canonical_curve, closed_curve_record
from elastica import CurveState, Elastica, hyperbolic_distance
from fundamental_system import OrbitlikeParams, WavelikeParams
from oracle import (
    CheckResult,
    IntegrationConfig,
    check_Z_ode,
    check_z_prime,
    first_integral,
    integrate_curvature,
    integrate_elastica,
    integrate_frame,
    jacobi_reference,
    lame_residual,
    run_suite,
    willmore_energy_numeric,
)
from special_functions import jacobi_sn_cn_dn
from utils import DomainError

START = CurveState(0.3, 1.2, 0.7)


@pytest.fixture(scope='module', params=['orbitlike', 'wavelike'])
def curve(request):
    params = OrbitlikeParams(0.6, 0.4) if request.param == 'orbitlike' else WavelikeParams(0.85, 0.4)
    return Elastica.from_initial_state(params, START)


def test_integration_config_rejects_nonpositive():
    with pytest.raises(DomainError):
        IntegrationConfig(rel_tol=0.0)
    with pytest.raises(DomainError):
        IntegrationConfig(max_step=-1.0)


def test_zero_length_interval_rejected(curve):
    with pytest.raises(DomainError):
        integrate_elastica(curve.state(0.0), 0.0)


def test_integrated_curve_matches_closed_form(curve):
    s_end = 3.0 * curve.period
    path = integrate_elastica(curve.state(0.0), s_end)
    grid = np.linspace(0.0, s_end, 300)
    assert np.max(hyperbolic_distance(curve.state(grid), path.state(grid))) < 1e-8


def test_first_integral_is_conserved(curve):
    path = integrate_elastica(curve.state(0.0), 2.0 * curve.period)
    state = path.state(np.linspace(0.0, 2.0 * curve.period, 100))
    assert np.max(np.abs(first_integral(state.kappa, state.kappap) - curve.mu)) < 1e-9


def test_curvature_equation_alone(curve):
    start = curve.state(0.0)
    solution = integrate_curvature(float(start.kappa), float(start.kappap), curve.period)
    grid = np.linspace(0.0, curve.period, 50)
    assert np.max(np.abs(solution(grid)[0] - curve.kappa(grid))) < 1e-9


def test_prescribed_curvature_frame(curve):
    path = integrate_frame(curve.kappa, curve.state(0.0), curve.period)
    grid = np.linspace(0.0, curve.period, 50)
    assert np.max(hyperbolic_distance(curve.state(grid), path.state(grid))) < 1e-8
    with pytest.raises(DomainError):
        path.energy(1.0)


def test_initial_state_needs_curvature():
    with pytest.raises(DomainError):
        integrate_elastica(START, 1.0)


def test_z_checks(curve):
    P = (0.1, 0.9)
    assert check_Z_ode(curve, P) < 1e-8
    assert check_z_prime(curve, P) < 1e-6


@pytest.mark.parametrize('m, n', [(2, 3), (3, 5)])
def test_energy_by_integration(m, n):
    record = closed_curve_record(m, n)
    closed = canonical_curve(m, n)
    ode = willmore_energy_numeric(closed, record.length_L)
    quad = willmore_energy_numeric(closed, record.length_L, method='quad')
    assert ode == pytest.approx(record.willmore_W, rel=1e-8)
    assert quad == pytest.approx(record.willmore_W, rel=1e-10)


def test_energy_rejects_bad_input():
    closed = canonical_curve(2, 3)
    with pytest.raises(DomainError):
        willmore_energy_numeric(closed, 0.0)
    with pytest.raises(DomainError):
        willmore_energy_numeric(closed, 1.0, method='simpson')


@given(k=st.floats(min_value=0.05, max_value=0.98))
@settings(max_examples=15, deadline=None)
def test_jacobi_reference_agrees(k):
    u = np.linspace(-8.0, 8.0, 41)
    reference = np.array(jacobi_reference(u, k))
    closed = np.array(jacobi_sn_cn_dn(u, k))
    assert np.max(np.abs(reference - closed)) < 1e-9


def test_jacobi_reference_at_origin():
    sn, cn, dn = jacobi_reference(np.array([0.0]), 0.5)
    assert (sn[0], cn[0], dn[0]) == (0.0, 1.0, 1.0)


@pytest.mark.parametrize('k', [0.2, 0.7, 0.95])
def test_lame_pairs_solve_the_equation(k):
    assert lame_residual(k, np.linspace(-5.0, 5.0, 41)) < 1e-8


def test_check_result_row():
    row = CheckResult('sample', 1e-12, 1e-10, True).as_row()
    assert list(row) == ['check', 'value', 'tolerance', 'passed']


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite('geodesics')


@pytest.mark.slow
def test_special_function_suite_passes():
    results = run_suite('special-functions')
    assert results
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]
    assert all(math.isfinite(r.value) for r in results)


@pytest.mark.slow
def test_fundamental_system_suite_passes():
    results = run_suite('fundamental-system')
    assert [r.name for r in results if not r.passed] == []
    names = {r.name for r in results}
    assert "theta(-s*) = -Delta theta / 2" in names
    assert "w2 w1' - w1 w2' = -k sqrt((1-k^2)(2k^2-1))" in names
