import math
from dataclasses import astuple

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from closed_curves import closed_curve_record
from dirichlet import (
    DirichletProblem,
    SearchConfig,
    assemble,
    classify_symmetry,
    endpoint_data,
    reproduces_boundary,
    sample_path,
    solve,
    symmetry_breaking_family,
    symmetry_hypothesis_check,
)
from fundamental_system import OrbitlikeParams, frame_orbitlike
from utils import DomainError, UnsupportedFamily

CLOSED_DATA = DirichletProblem(0.0, 1.0, 0.0, 1.0, 0.0, 0.0)


@pytest.fixture(scope='module')
def record_2_3():
    return closed_curve_record(2, 3)


def _narrow(k, width=0.02, **overrides):
    options = dict(k_min=k - width, k_max=min(k + width, 0.999), grid=12, l_max=6, max_starts=24, threads=2)
    options.update(overrides)
    return SearchConfig(**options)


def test_problem_rejects_lower_half_plane():
    with pytest.raises(DomainError):
        DirichletProblem(0.0, -1.0, 0.0, 1.0, 0.0, 0.0)


def test_mirrored_twice_is_identity():
    problem = DirichletProblem(-0.5, 1.0, 0.7, 2.0, 0.3, -1.1)
    assert astuple(problem.mirrored().mirrored()) == pytest.approx(astuple(problem), abs=1e-15)


def test_mirrored_flips_abscissae():
    mirrored = DirichletProblem(-0.5, 1.0, 0.7, 2.0, 0.3, -1.1).mirrored()
    assert (mirrored.A1, mirrored.B1) == (0.5, -0.7)
    assert mirrored.phiA == pytest.approx(math.pi - 0.3)


def test_search_config_validation():
    with pytest.raises(DomainError):
        SearchConfig(k_min=0.5, k_max=0.4)
    with pytest.raises(DomainError):
        SearchConfig(tol=0.0)


def test_closed_curve_is_a_root(record_2_3):
    branch = symmetry_breaking_family(2, 3, 0.0).branch_l
    result = assemble(CLOSED_DATA, 0.0, record_2_3.k_mn, branch)
    assert result.feasible
    assert result.L == pytest.approx(record_2_3.length_L, rel=1e-10)
    assert abs(result.r1) < 1e-10 and result.r2 < 1e-10


@pytest.mark.parametrize('m, n, s_star', [(2, 3, 0.2), (3, 5, -0.5)])
def test_symmetry_breaking_instances(m, n, s_star):
    solution = symmetry_breaking_family(m, n, s_star)
    assert not solution.symmetric
    assert abs(solution.residual_r1) <= 1e-10 and solution.residual_r2 <= 1e-10
    assert reproduces_boundary(CLOSED_DATA, solution)
    assert solution.length_L == pytest.approx(closed_curve_record(m, n).length_L, rel=1e-10)


@pytest.mark.parametrize('turns', [0, 1])
def test_symmetry_on_lattice(record_2_3, turns):
    lattice = OrbitlikeParams(record_2_3.k_mn).period / 2
    assert symmetry_breaking_family(2, 3, turns * lattice).symmetric
    assert not symmetry_breaking_family(2, 3, turns * lattice + 0.05).symmetric


def test_classify_symmetry_with_problem():
    solution = symmetry_breaking_family(2, 3, 0.0)
    assert classify_symmetry(solution, CLOSED_DATA)


def test_sample_path_columns():
    solution = symmetry_breaking_family(2, 3, 0.2)
    path = sample_path(solution, count=50)
    assert list(path.columns) == ['s', 'gamma1', 'gamma2', 'phi', 'kappa']
    assert len(path) == 50
    assert path['s'].iloc[-1] == pytest.approx(solution.length_L)
    assert (path['gamma2'] > 0).all()


def test_solution_serialisation():
    row = symmetry_breaking_family(3, 5, -0.5).as_dict()
    assert row['orientation'] == 'positive'
    assert set(row['coeffs']) == {'a1', 'a2', 'a3', 'b1', 'b2', 'b3'}


def test_solve_rejects_wavelike_and_bad_orientation():
    with pytest.raises(UnsupportedFamily):
        solve(CLOSED_DATA, family='wavelike')
    with pytest.raises(DomainError):
        solve(CLOSED_DATA, orientation='sideways')


def test_hypothesis_flags():
    report = symmetry_hypothesis_check(DirichletProblem(-1.0, 1.0, 1.0, 1.0, 0.3, -0.3))
    assert report.holds
    assert report.orientations_covered == ('negative',)
    level = symmetry_hypothesis_check(DirichletProblem(-1.0, 0.9, 1.0, 0.9, 0.0, 0.0))
    assert level.orientations_covered == ('negative',)
    assert not symmetry_hypothesis_check(CLOSED_DATA).holds
    assert not symmetry_hypothesis_check(DirichletProblem(-1.0, 1.0, 1.0, 2.0, 0.3, -0.3)).holds


@pytest.mark.slow
def test_closed_data_roots_are_closed_curves(record_2_3):
    solutions = solve(CLOSED_DATA, _narrow(record_2_3.k_mn))
    assert solutions
    for solution in solutions:
        assert solution.k == pytest.approx(record_2_3.k_mn, abs=1e-6)
        assert reproduces_boundary(CLOSED_DATA, solution)


@pytest.mark.slow
def test_negative_orientation_has_negative_curvature(record_2_3):
    mirrored = CLOSED_DATA.mirrored()
    solutions = solve(mirrored, _narrow(record_2_3.k_mn), orientation='negative')
    assert solutions
    for solution in solutions:
        assert solution.orientation == 'negative'
        assert reproduces_boundary(mirrored, solution)
        assert np.all(solution.state(np.linspace(0, solution.length_L, 20)).kappa < 0)


@pytest.mark.slow
@given(height=st.floats(min_value=0.3, max_value=3.0), half_width=st.floats(min_value=0.2, max_value=2.0),
       angle=st.floats(min_value=-3.0, max_value=3.0))
@settings(max_examples=10, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_symmetry_theorem(height, half_width, angle):
    problem = DirichletProblem(-half_width, height, half_width, height, angle, -angle)
    report = symmetry_hypothesis_check(problem)
    assume('positive' in report.orientations_covered)
    config = SearchConfig(grid=8, l_max=4, max_starts=8, threads=2)
    for solution in solve(problem, config):
        assert solution.symmetric
        assert abs(solution.coeffs.b3) < 1e-8


@pytest.mark.parametrize('turns, end', [(0, 'max'), (1, 'min')])
def test_extreme_curvature_endpoints_snap(record_2_3, turns, end):
    params = OrbitlikeParams(record_2_3.k_mn)
    s_star = turns * params.period / 2
    data = endpoint_data(CLOSED_DATA, s_star, record_2_3.k_mn)
    assert data.dn_target == (1.0 if end == 'max' else params.modulus.k_prime)
    assert data.dn_excess == 0.0
    branch = symmetry_breaking_family(2, 3, s_star).branch_l
    result = assemble(CLOSED_DATA, s_star, record_2_3.k_mn, branch)
    assert result.feasible
    assert result.r2 < 1e-11
    assert result.L == pytest.approx(record_2_3.length_L, rel=1e-12)


@pytest.mark.parametrize('s_star', [0.2, 1.3])
def test_angle_residual_is_periodic_in_shift(record_2_3, s_star):
    k = record_2_3.k_mn + 1e-3
    period = OrbitlikeParams(k).period
    branch = symmetry_breaking_family(2, 3, s_star).branch_l
    here = assemble(CLOSED_DATA, s_star, k, branch)
    shifted = assemble(CLOSED_DATA, s_star + period, k, branch + 1)
    assert here.feasible and shifted.feasible
    assert shifted.L == pytest.approx(here.L, rel=1e-12)
    assert shifted.r1 == pytest.approx(here.r1, abs=1e-10)
    assert shifted.r2 == pytest.approx(here.r2, abs=1e-10)
    assert here.r2 > 1e-6


@pytest.mark.parametrize('s_star, k', [(0.3, 0.6), (-1.1, 0.9), (2.0, 0.45)])
def test_sign_data_norm(s_star, k):
    problem = DirichletProblem(-0.4, 1.2, 0.9, 0.7, 0.5, -1.3)
    data = endpoint_data(problem, s_star, k)
    kappa0 = float(frame_orbitlike(0.0, data.params).kappa)
    sigmas = data.sigmas
    expected = (kappa0 ** 2 - data.params.mu) * (problem.A2 * data.coeffs.a3) ** 2
    assert sigmas.sigma1 ** 2 + sigmas.sigma2 ** 2 == pytest.approx(expected, rel=1e-10)
