"""
Verification suites: closed formulas against extended precision and ODE integration
"""

import logging
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from closed_curves import (
    PRINTED_TABLE,
    brute_force_intersections,
    build_table,
    canonical_curve,
    closed_curve_record,
    instability_cutoff,
    instability_report,
    monochromatic_samples,
    second_variation,
    self_intersections,
    winding_number,
)
from dirichlet import DirichletProblem, SearchConfig, solve, symmetry_breaking_family
from elastica import (
    CurveState,
    Elastica,
    distance_Z,
    enclosure,
    hyperbolic_distance,
    z_expansion_coefficients,
    z_from_expansion,
)
from fundamental_system import (
    OrbitlikeParams,
    WavelikeParams,
    frame_orbitlike,
    frame_wavelike,
    rotation_delta_theta,
    rotation_delta_theta_derivative,
    wavelike_pair,
)
from special_functions import (
    EllipticModulus,
    complete_E,
    complete_K,
    heuman_lambda0,
    inverse_dn,
    jacobi_sn_cn_dn,
    theta_H,
    theta_Theta,
)
from utils import DomainError
from .integrators import check_Z_ode, integrate_elastica, jacobi_reference, lame_residual, willmore_energy_numeric

logger = logging.getLogger(__name__)

SUITES = ('special-functions', 'fundamental-system', 'elastica', 'closed-curves', 'dirichlet', 'all')
SEED = 20240607
RANDOM_POINTS = 200
RANDOM_CURVES = 10
ORACLE_PERIODS = 5
BRUTE_FORCE_MAX_N = 8
WINDING_PAIRS = ((2, 3), (3, 5), (4, 7), (5, 8))
CUTOFF = 0.6869145


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float
    passed: bool

    def as_row(self):
        return {'check': self.name, 'value': self.value, 'tolerance': self.tolerance, 'passed': self.passed}


def _at_most(name, value, tolerance):
    value = float(value)
    return CheckResult(name, value, tolerance, bool(value <= tolerance))


def _relative(a, b):
    return abs(a - b) / max(abs(b), 1.0)


def special_functions_suite(rng):
    results = []
    moduli = (0.1, 0.5, 0.9, 0.99, 0.999)
    mpmath.mp.dps = 30
    worst_K = max(_relative(complete_K(k), float(mpmath.ellipk(k * k))) for k in moduli)
    worst_E = max(_relative(complete_E(k), float(mpmath.ellipe(k * k))) for k in moduli)
    results.append(_at_most("K(k) against mpmath", worst_K, 1e-13))
    results.append(_at_most("E(k) against mpmath", worst_E, 1e-13))

    legendre = 0.0
    for k in moduli:
        mod = EllipticModulus(k)
        value = (mod.complete_E * mod.quarter_period_K_prime + mod.complete_E_prime * mod.quarter_period_K
                 - mod.quarter_period_K * mod.quarter_period_K_prime)
        legendre = max(legendre, abs(value - 0.5 * math.pi))
    results.append(_at_most("Legendre relation", legendre, 1e-13))

    k = rng.uniform(0.05, 0.95, RANDOM_POINTS)
    u = rng.uniform(-20.0, 20.0, RANDOM_POINTS)
    sn, cn, dn = jacobi_sn_cn_dn(u, k)
    pythagoras = max(np.max(np.abs(sn ** 2 + cn ** 2 - 1.0)), np.max(np.abs(dn ** 2 + k * k * sn ** 2 - 1.0)))
    results.append(_at_most("sn^2 + cn^2 = 1 and dn^2 + k^2 sn^2 = 1", pythagoras, 1e-13))

    ode_gap = 0.0
    grid = np.linspace(-12.0, 12.0, 97)
    for modulus in (0.3, 0.8):
        reference = jacobi_reference(grid, modulus)
        closed = jacobi_sn_cn_dn(grid, modulus)
        ode_gap = max(ode_gap, max(float(np.max(np.abs(a - b))) for a, b in zip(closed, reference)))
    results.append(_at_most("sn, cn, dn against the first order system", ode_gap, 1e-9))

    theta_gap = 0.0
    for modulus in (0.3, 0.6, 0.9):
        z = rng.uniform(-3.0, 3.0, RANDOM_POINTS)
        quotient = np.asarray(theta_H(z, modulus)) / (math.sqrt(modulus) * np.asarray(theta_Theta(z, modulus)))
        theta_gap = max(theta_gap, float(np.max(np.abs(quotient - jacobi_sn_cn_dn(z, modulus)[0]))))
    results.append(_at_most("sn = H / (sqrt(k) Theta)", theta_gap, 1e-12))

    roundtrip = 0.0
    for modulus in moduli[:4]:
        kp = EllipticModulus(modulus).k_prime
        z = np.linspace(kp, 1.0, 50)
        roundtrip = max(roundtrip, float(np.max(np.abs(jacobi_sn_cn_dn(inverse_dn(z, modulus), modulus)[2] - z))))
    results.append(_at_most("dn(dn^-1(z)) = z", roundtrip, 1e-12))

    heuman = 0.0
    for modulus in (0.2, 0.6, 0.95):
        for l in (0.1, 0.5, 0.9):
            phi = mpmath.asin(l)
            m, mp_ = modulus * modulus, 1 - mpmath.mpf(modulus) ** 2
            K, E = mpmath.ellipk(m), mpmath.ellipe(m)
            F1, E1 = mpmath.ellipf(phi, mp_), mpmath.ellipe(phi, mp_)
            exact = 2 / mpmath.pi * (E * F1 + K * E1 - K * F1)
            heuman = max(heuman, abs(heuman_lambda0(l, modulus) - float(exact)))
    results.append(_at_most("Heuman Lambda_0 against mpmath", heuman, 1e-13))
    return results


def _orbitlike_identities(k, s_star, s):
    params = OrbitlikeParams(k, s_star)
    f = frame_orbitlike(s, params)
    kappa2 = f.kappa ** 2
    norm = float(np.max(np.abs(f.W1 ** 2 + f.W2 ** 2 - (kappa2 - params.mu) / kappa2)))
    wronskian = float(np.max(np.abs(f.W1 * f.W2p - f.W2 * f.W1p - math.sqrt(params.mu) / 2.0)))
    delta = rotation_delta_theta(k)
    w = f.W1 + 1j * f.W2
    shifted = frame_orbitlike(s + params.period, params)
    quasi = float(np.max(np.abs(shifted.W1 + 1j * shifted.W2 - w * np.exp(1j * delta))))
    mirror = frame_orbitlike(-s - 2.0 * s_star + params.period, params)
    reflection = float(np.max(np.abs(w - (-mirror.W1 + 1j * mirror.W2))))
    anchor = abs(float(frame_orbitlike(-s_star, params).theta) + 0.5 * delta)
    return norm, wronskian, quasi, reflection, anchor


def _wavelike_identities(k, s_star, s):
    params = WavelikeParams(k, s_star)
    f = frame_wavelike(s, params)
    lorentz = float(np.max(np.abs(f.W2hat ** 2 - f.W1hat ** 2 - (f.kappa ** 2 - params.mu))))
    t = np.linspace(-0.95, 0.95, 39) * params.modulus.quarter_period_K
    w1, w2, w1p, w2p, _ = wavelike_pair(t, k)
    cn = np.asarray(jacobi_sn_cn_dn(t, k)[1])
    expected = -k * math.sqrt((1.0 - k * k) * (2.0 * k * k - 1.0))
    wronskian = float(np.max(np.abs((w2 * w1p - w1 * w2p) / cn ** 2 - expected)))
    return lorentz, wronskian


def fundamental_system_suite(rng):
    gaps = [rotation_delta_theta(1.0 - eps) - math.pi for eps in (1e-4, 1e-8, 1e-12)]
    results = [
        _at_most("Delta theta at k = 1e-6 near sqrt(2) pi",
                 abs(rotation_delta_theta(1e-6) - math.sqrt(2.0) * math.pi), 1e-9),
        _at_most("Delta theta at k = 1 - 1e-12 near pi", gaps[-1], 1e-3),
    ]
    approach = all(a > b > 0 for a, b in zip(gaps, gaps[1:]))
    results.append(CheckResult("Delta theta decreases to pi as k -> 1", int(not approach), 0, approach))
    grid = np.linspace(0.005, 0.995, 200)
    rises = int(np.count_nonzero(np.diff(rotation_delta_theta(grid)) >= 0))
    results.append(CheckResult("Delta theta strictly decreasing", rises, 0, rises == 0))

    k = rng.uniform(0.1, 0.95, 20)
    h = 1e-6
    numeric = (rotation_delta_theta(k + h) - rotation_delta_theta(k - h)) / (2.0 * h)
    results.append(_at_most("d Delta theta / dk against central differences",
                            float(np.max(np.abs(numeric - rotation_delta_theta_derivative(k)) / np.maximum(np.abs(numeric), 1e-2))),
                            1e-6))

    worst = 0.0
    for modulus in (0.3, 0.7, 0.95):
        worst = max(worst, lame_residual(modulus, np.linspace(-6.0, 6.0, 61)))
    results.append(_at_most("polar and theta pairs solve w'' + 2 dn^2 w = 0", worst, 1e-8))

    orbitlike = np.zeros(5)
    for modulus, s_star in zip(rng.uniform(0.1, 0.95, 10), rng.uniform(-2.0, 2.0, 10)):
        s = rng.uniform(-10.0, 10.0, RANDOM_POINTS // 10)
        orbitlike = np.maximum(orbitlike, _orbitlike_identities(modulus, s_star, s))
    names = ("W1^2 + W2^2 = (kappa^2 - mu) / kappa^2", "W1 W2' - W2 W1' = sqrt(mu) / 2",
             "W1 + i W2 advances by exp(i Delta theta) per period", "W1 + i W2 reflects about -s*",
             "theta(-s*) = -Delta theta / 2")
    results.extend(_at_most(name, value, 1e-10) for name, value in zip(names, orbitlike))

    wavelike = np.zeros(2)
    for modulus, s_star in zip(rng.uniform(0.75, 0.95, 10), rng.uniform(-2.0, 2.0, 10)):
        s = rng.uniform(-6.0, 6.0, RANDOM_POINTS // 10)
        wavelike = np.maximum(wavelike, _wavelike_identities(modulus, s_star, s))
    results.append(_at_most("W2hat^2 - W1hat^2 = kappa^2 - mu", wavelike[0], 1e-10))
    results.append(_at_most("w2 w1' - w1 w2' = -k sqrt((1-k^2)(2k^2-1))", wavelike[1], 1e-10))
    return results


def _random_curve(rng, family):
    if family == 'orbitlike':
        params = OrbitlikeParams(rng.uniform(0.2, 0.95))
    else:
        params = WavelikeParams(rng.uniform(0.75, 0.95))
    params = params.with_shift(rng.uniform(0.05, 0.95) * params.period)
    initial = CurveState(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * math.pi))
    return Elastica.from_initial_state(params, initial)


def _oracle_deviation(curve):
    s_end = ORACLE_PERIODS * curve.period
    path = integrate_elastica(curve.state(0.0), s_end)
    grid = np.linspace(0.0, s_end, 400)
    closed, integrated = curve.state(grid), path.state(grid)
    return float(np.max(hyperbolic_distance(closed, integrated)))


def elastica_suite(rng):
    results = []
    curves = {family: [_random_curve(rng, family) for _ in range(RANDOM_CURVES)]
              for family in ('orbitlike', 'wavelike')}
    for family, family_curves in curves.items():
        deviation = max(_oracle_deviation(curve) for curve in family_curves)
        results.append(_at_most(f"{family} closed form against integration", deviation, 1e-8))
        residual = max(curve.coeffs.constraint_residual(curve.mu) for curve in family_curves)
        results.append(_at_most(f"{family} fitted coefficient constraints", residual, 1e-10))

    z_gap, ode_gap, slack = 0.0, 0.0, 0.0
    for curve in curves['orbitlike'][:4] + curves['wavelike'][:4]:
        P = (rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0))
        s = np.linspace(0.0, 2.0 * curve.period, RANDOM_POINTS)
        coefficients = z_expansion_coefficients(curve, P)
        direct = np.asarray(distance_Z(s, P, curve))
        z_gap = max(z_gap, float(np.max(np.abs(z_from_expansion(s, curve, coefficients) - direct)
                                        / np.maximum(np.abs(direct), 1.0))))
        ode_gap = max(ode_gap, check_Z_ode(curve, P))
        state = curve.state(s)
        slack = max(slack, -float(np.min(enclosure(curve).contains(state))))
    results.append(_at_most("Z from the A xi1 + B xi2 + C expansion", z_gap, 1e-10))
    results.append(_at_most("Z solves kappa Z'' - 2 kappa' Z' + kappa (Z+1) = 2 mu C", ode_gap, 1e-8))
    results.append(_at_most("curves stay inside their enclosure", slack, 1e-9))
    return results


def closed_curves_suite(rng):
    results = []
    computed = {(r.m, r.n): r for r in build_table(20)}
    k_gap = w_gap = l_gap = 0.0
    s_mismatch = 0
    for n, m, k, W, L, S in PRINTED_TABLE:
        record = computed[(m, n)]
        k_gap = max(k_gap, abs(record.k_mn - k))
        w_gap = max(w_gap, abs(record.willmore_W - W))
        if (m, n) != (11, 20):
            l_gap = max(l_gap, abs(record.length_L - L))
        s_mismatch += record.selfint_S != S
    results.append(_at_most("k_{m,n} against the printed table", k_gap, 1e-4))
    results.append(_at_most("W_{m,n} against the printed table", w_gap, 0.01))
    results.append(_at_most("L_{m,n} against the printed table", l_gap, 0.01))
    results.append(CheckResult("S_{m,n} against the printed table", s_mismatch, 0, s_mismatch == 0))

    below = sum(r.willmore_W <= 4.0 * math.pi * r.n for r in computed.values())
    results.append(CheckResult("W_{m,n} > 4 n pi", below, 0, below == 0))

    energy_gap = 0.0
    for m, n in ((2, 3), (3, 5)):
        record = closed_curve_record(m, n)
        energy = willmore_energy_numeric(canonical_curve(m, n), record.length_L)
        energy_gap = max(energy_gap, _relative(energy, record.willmore_W))
    results.append(_at_most("W_{m,n} against the integrated energy", energy_gap, 1e-9))

    closure = count_gap = crossing_gap = 0.0
    brute_mismatch = 0
    for record in computed.values():
        curve = canonical_curve(record.m, record.n)
        ends = curve.state(np.array([0.0, record.length_L]))
        closure = max(closure, float(hyperbolic_distance((ends.gamma1[0], ends.gamma2[0]),
                                                         (ends.gamma1[1], ends.gamma2[1]))))
        crossings = self_intersections(record.m, record.n)
        count_gap = max(count_gap, abs(len(crossings) - record.selfint_S))
        for item in crossings:
            partner = curve.state(item.partner_s)
            crossing_gap = max(crossing_gap, float(hyperbolic_distance(item.point, (partner.gamma1, partner.gamma2))))
        if record.n <= BRUTE_FORCE_MAX_N:
            brute_mismatch += len(brute_force_intersections(curve, record.length_L)) != record.selfint_S
    results.append(_at_most("gamma_{m,n} closes after L_{m,n}", closure, 1e-8))
    results.append(CheckResult("n(m-1) self-intersections located", count_gap, 0, count_gap == 0))
    results.append(_at_most("self-intersections meet in the plane", crossing_gap, 1e-8))
    results.append(CheckResult("brute force intersection counts for n <= 8", brute_mismatch, 0, brute_mismatch == 0))

    wrong = sum(winding_number(m, n) != m for m, n in WINDING_PAIRS)
    results.append(CheckResult("winding number equals m", wrong, 0, wrong == 0))

    results.append(_at_most("instability cutoff near 0.6869145", abs(instability_cutoff() - CUTOFF), 1e-4))
    report = instability_report(12, 17)
    results.append(CheckResult("(12, 17) provably unstable", report.I_value, 0.0,
                               report.provably_unstable and report.I_value < 0))
    spectral = second_variation(12, 17, monochromatic_samples(12, 17, report.test_mode_j, 8192))
    results.append(CheckResult("(12, 17) test mode has I < 0 by quadrature", spectral, 0.0, spectral < 0))
    small = instability_report(2, 3)
    results.append(CheckResult("(2, 3) not covered by the criterion", small.n_threshold, 3.0,
                               not small.provably_unstable))
    return results


def dirichlet_suite(rng):
    results = []
    for (m, n), s_star in (((2, 3), 0.2), ((3, 5), -0.5)):
        solution = symmetry_breaking_family(m, n, s_star)
        results.append(CheckResult(f"gamma_{{{m},{n}}} with s* = {s_star} is nonsymmetric",
                                   max(abs(solution.residual_r1), solution.residual_r2), 1e-10,
                                   not solution.symmetric))
    lattice = OrbitlikeParams(closed_curve_record(2, 3).k_mn).period / 2.0
    symmetric = symmetry_breaking_family(2, 3, lattice)
    results.append(CheckResult("s* on the lattice gives a symmetric solution", symmetric.residual_r2, 1e-10,
                               symmetric.symmetric))

    k23 = closed_curve_record(2, 3).k_mn
    problem = DirichletProblem(0.0, 1.0, 0.0, 1.0, 0.0, 0.0)
    config = SearchConfig(k_min=k23 - 0.02, k_max=min(k23 + 0.02, 0.999), grid=12, l_max=6, max_starts=24)
    solutions = solve(problem, config)
    miss = max((abs(sol.k - k23) for sol in solutions), default=math.inf)
    results.append(_at_most("closed-curve boundary data returns k_{2,3}", miss, 1e-6))
    return results


SUITE_FUNCTIONS = {
    'special-functions': special_functions_suite,
    'fundamental-system': fundamental_system_suite,
    'elastica': elastica_suite,
    'closed-curves': closed_curves_suite,
    'dirichlet': dirichlet_suite,
}


def run_suite(name, seed=SEED):
    """Run one suite (or all of them) and return the list of check results"""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}, expected one of {SUITES}")
    names = list(SUITE_FUNCTIONS) if name == 'all' else [name]
    results = []
    for suite in names:
        logger.info("Running %s suite", suite)
        results.extend(SUITE_FUNCTIONS[suite](np.random.default_rng(seed)))
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning("%d of %d checks failed: %s", len(failed), len(results), ", ".join(failed))
    return results
