"""
Multi-start search for orbitlike solutions of the Dirichlet problem
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np
import pandas as pd
from scipy import optimize

from elastica import hyperbolic_distance
from fundamental_system import OrbitlikeParams
from utils import DomainError, UnsupportedFamily, default_threads, load_config
from .problem import DirichletProblem, DirichletSolution, assemble, assemble_from, endpoint_data
from .symmetry import classify_symmetry

logger = logging.getLogger(__name__)

CONFIG = load_config()['dirichlet']

ORIENTATIONS = ('positive', 'negative')
ENDPOINT_TOL = 1e-8
DEDUP_TOL = 1e-6


@dataclass(frozen=True)
class SearchConfig:
    k_min: float = field(default=CONFIG['k_min'])
    k_max: float = field(default=CONFIG['k_max'])
    grid: int = field(default=CONFIG['grid'])
    l_max: int = field(default=CONFIG['l_max'])
    tol: float = field(default=CONFIG['tol'])
    max_starts: int = field(default=CONFIG['max_starts'])
    threads: int = field(default_factory=default_threads)

    def __post_init__(self):
        if not (0.0 < self.k_min < self.k_max < 1.0):
            raise DomainError(f"need 0 < k_min < k_max < 1, got ({self.k_min}, {self.k_max})")
        if self.grid < 2 or self.l_max < 0 or self.max_starts < 1 or self.threads < 1:
            raise DomainError("grid >= 2, l_max >= 0, max_starts >= 1 and threads >= 1 are required")
        if not self.tol > 0:
            raise DomainError(f"tolerance must be positive, got {self.tol}")


def sample_path(solution: DirichletSolution, count=200):
    """Sampled curve s, gamma1, gamma2, phi, kappa on [0, L]"""
    s = np.linspace(0.0, solution.length_L, count)
    state = solution.state(s)
    return pd.DataFrame({'s': s, 'gamma1': state.gamma1, 'gamma2': state.gamma2,
                         'phi': state.phi, 'kappa': state.kappa})


def _period(k):
    return OrbitlikeParams(k).period


def _residuals(x, problem, l, k_bounds):
    s_star, k = x
    k = min(max(k, k_bounds[0]), k_bounds[1])
    data = endpoint_data(problem, s_star, k)
    best = None
    for sigma in ((1, -1) if abs(data.kappap_twice) < 1e-12 else (1 if data.kappap_twice > 0 else -1,)):
        candidate = assemble_from(data, l, sigma, clip=True)
        if math.isnan(candidate.L) or candidate.L <= 0:
            vector = np.array([data.r1, 2.0, 2.0, 10.0 * data.dn_excess])
        else:
            vector = np.append(candidate.residual_vector, 10.0 * data.dn_excess)
        if best is None or np.linalg.norm(vector) < np.linalg.norm(best):
            best = vector
    return best


def _grid_starts(problem, config):
    """Feasible (s*, k, l) grid points ranked by residual size"""
    scored = []
    for k in np.linspace(config.k_min, config.k_max, config.grid):
        for s_star in np.linspace(0.0, _period(k), config.grid, endpoint=False):
            try:
                data = endpoint_data(problem, s_star, k)
            except (ValueError, ArithmeticError) as exc:
                logger.debug("grid point (s*=%g, k=%g) skipped: %s", s_star, k, exc)
                continue
            if data.dn_excess > 0:
                continue
            for l in range(-config.l_max, config.l_max + 1):
                candidate = assemble_from(data, l)
                if candidate.feasible:
                    scored.append((float(np.linalg.norm(candidate.residual_vector)), s_star, k, l))
    scored.sort()
    logger.info("Dirichlet grid: %d feasible cells, refining %d", len(scored), min(len(scored), config.max_starts))
    return scored[:config.max_starts]


def _normalize(s_star, k, l):
    period = _period(k)
    turns = math.floor(s_star / period)
    return s_star - turns * period, l - turns


def _refine(problem, config, start):
    _, s_star, k, l = start
    bounds = ([-np.inf, config.k_min * 0.5], [np.inf, 0.5 * (1.0 + config.k_max)])
    k_bounds = (bounds[0][1], bounds[1][1])
    try:
        fit = optimize.least_squares(_residuals, [s_star, k], args=(problem, l, k_bounds), bounds=bounds,
                                     xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400)
    except (ValueError, ArithmeticError) as exc:
        logger.debug("refinement from (s*=%g, k=%g, l=%d) failed: %s", s_star, k, l, exc)
        return None
    s_star, k = fit.x
    s_star, l = _normalize(s_star, k, l)
    result = assemble(problem, s_star, k, l)
    if not result.feasible or abs(result.r1) > config.tol or not result.r2 <= config.tol:
        logger.debug("start l=%d did not converge (r1=%.2e, r2=%.2e)", l, result.r1, result.r2)
        return None
    return DirichletSolution(float(k), float(s_star), int(l), float(result.L), result.coeffs,
                             float(result.r1), float(result.r2), sigma_sign=result.sigma_sign)


def reproduces_boundary(problem: DirichletProblem, solution: DirichletSolution, tol=ENDPOINT_TOL):
    """gamma(0) = A, gamma(L) = B and matching exp(i phi) at both ends"""
    ends = solution.state(np.array([0.0, solution.length_L]))
    for index, (x1, x2, phi) in enumerate(((problem.A1, problem.A2, problem.phiA),
                                           (problem.B1, problem.B2, problem.phiB))):
        point = ends.at(index)
        if hyperbolic_distance((point.gamma1, point.gamma2), (x1, x2)) > tol:
            return False
        if abs(np.exp(1j * float(point.phi)) - np.exp(1j * phi)) > tol:
            return False
    return True


def _deduplicate(solutions):
    unique = []
    for sol in solutions:
        if not any(abs(sol.k - kept.k) < DEDUP_TOL and sol.branch_l == kept.branch_l
                   and abs(sol.s_star - kept.s_star) < DEDUP_TOL for kept in unique):
            unique.append(sol)
    return sorted(unique, key=lambda s: (s.k, s.branch_l, s.s_star))


def _solve_positive(problem, config):
    starts = _grid_starts(problem, config)
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        refined = list(pool.map(lambda start: _refine(problem, config, start), starts))
    return _deduplicate([sol for sol in refined if sol is not None])


def solve(problem: DirichletProblem, config: SearchConfig = None, orientation='positive', family='orbitlike'):
    """
    Orbitlike solutions found from a grid over (s*, k, l) refined by least squares.
    An empty list means no solution in the searched region.
    """
    if family != 'orbitlike':
        raise UnsupportedFamily(f"Dirichlet problem is only solved for orbitlike elasticae, not {family!r}")
    if orientation not in ORIENTATIONS:
        raise DomainError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    config = config or SearchConfig()
    reduced = problem if orientation == 'positive' else problem.mirrored()
    solutions = []
    for sol in _solve_positive(reduced, config):
        if orientation == 'negative':
            sol = replace(sol, orientation='negative')
        if not reproduces_boundary(problem, sol):
            logger.warning("discarding root k=%.8f s*=%.8f l=%d: boundary data not reproduced",
                           sol.k, sol.s_star, sol.branch_l)
            continue
        solutions.append(replace(sol, symmetric=classify_symmetry(sol, problem)))
    logger.info("Dirichlet search found %d %sly oriented solutions", len(solutions), orientation)
    return solutions
