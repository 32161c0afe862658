"""
Symmetry of Dirichlet solutions and the closed-curve family of nonsymmetric solutions
"""

import logging
import math
from dataclasses import dataclass, replace

import numpy as np

from closed_curves import closed_curve_record, solve_k_mn
from fundamental_system import OrbitlikeParams
from utils import NumericalFailure, validate_coprime_pair
from .problem import DirichletProblem, DirichletSolution, assemble

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-7
SYMMETRY_SAMPLES = 64


def _is_closed_curve_data(problem):
    return (problem.A1 == 0 and problem.B1 == 0 and problem.A2 == problem.B2
            and math.isclose(math.cos(problem.phiA), 1.0) and math.isclose(math.cos(problem.phiB), 1.0))


def classify_symmetry(solution: DirichletSolution, problem: DirichletProblem = None):
    """
    True iff gamma1(L/2 + s) = -gamma1(L/2 - s) and gamma2(L/2 + s) = gamma2(L/2 - s) on (0, L/2]
    """
    half = 0.5 * solution.length_L
    offsets = half * np.arange(1, SYMMETRY_SAMPLES + 1) / SYMMETRY_SAMPLES
    ahead = solution.state(half + offsets)
    behind = solution.state(half - offsets)
    mismatch = max(float(np.max(np.abs(ahead.gamma1 + behind.gamma1))),
                   float(np.max(np.abs(ahead.gamma2 - behind.gamma2))))
    symmetric = mismatch <= SYMMETRY_TOL
    if problem is not None and _is_closed_curve_data(problem):
        lattice = OrbitlikeParams(solution.k).period / 2.0
        turns = solution.s_star / lattice
        on_lattice = abs(turns - round(turns)) * lattice <= SYMMETRY_TOL
        if on_lattice != symmetric:
            logger.warning("sampled symmetry (%s) disagrees with the s* lattice test (%s)", symmetric, on_lattice)
    return symmetric


@dataclass(frozen=True)
class HypothesisReport:
    mirrored_endpoints: bool
    equal_heights: bool
    angles_cancel: bool
    positive_covered: bool
    negative_covered: bool

    @property
    def holds(self):
        return self.mirrored_endpoints and self.equal_heights and self.angles_cancel

    @property
    def orientations_covered(self):
        """Orientations for which every orbitlike solution is symmetric"""
        if not self.holds:
            return ()
        return tuple(name for name, flag in (('positive', self.positive_covered),
                                             ('negative', self.negative_covered)) if flag)


def symmetry_hypothesis_check(problem: DirichletProblem):
    """A1 = -B1 != 0, A2 = B2 > 0, phiA + phiB in 2 pi Z, and +-(A2/A1 sin phiA + cos phiA) outside (0, 2)"""
    mirrored = problem.A1 != 0 and math.isclose(problem.A1, -problem.B1, rel_tol=1e-12, abs_tol=1e-12)
    heights = problem.A2 > 0 and math.isclose(problem.A2, problem.B2, rel_tol=1e-12, abs_tol=1e-12)
    turns = (problem.phiA + problem.phiB) / (2.0 * math.pi)
    angles = abs(turns - round(turns)) < 1e-12
    if problem.A1 == 0:
        return HypothesisReport(False, heights, angles, False, False)
    value = problem.A2 / problem.A1 * math.sin(problem.phiA) + math.cos(problem.phiA)
    return HypothesisReport(mirrored, heights, angles,
                            not (0.0 < value < 2.0), not (0.0 < -value < 2.0))


def symmetry_breaking_family(m, n, s_star, A2=1.0, tol=1e-10):
    """The closed curve gamma_{m,n} with shift s* as a solution of the data A = B = (0, A2), phi = 0"""
    m, n = validate_coprime_pair(m, n)
    k = solve_k_mn(m, n)
    record = closed_curve_record(m, n)
    problem = DirichletProblem(0.0, A2, 0.0, A2, 0.0, 0.0)
    best, branch = None, n
    for l in range(n - 2, n + 3):
        result = assemble(problem, s_star, k, l)
        if not result.feasible:
            continue
        if abs(result.L - record.length_L) <= 1e-8 * record.length_L:
            best, branch = result, l
            break
    if best is None or abs(best.r1) > tol or best.r2 > tol:
        raise NumericalFailure(f"closed curve ({m}, {n}) with s* = {s_star} does not solve its own boundary problem")
    solution = DirichletSolution(k, float(s_star), branch, best.L, best.coeffs, best.r1, best.r2,
                                 sigma_sign=best.sigma_sign)
    return replace(solution, symmetric=classify_symmetry(solution, problem))
