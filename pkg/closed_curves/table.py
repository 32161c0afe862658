"""
Closed orbitlike elasticae gamma_{m,n}: moduli, table quantities and canonical curves
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from elastica import CurveState, Elastica
from fundamental_system import OrbitlikeParams, solve_k_for_rotation
from special_functions import complete_E, complete_K
from utils import default_threads, validate_coprime_pair

logger = logging.getLogger(__name__)

# (n, m, k, W, L, S) as printed; the L entry of (20, 11) repeats W
PRINTED_TABLE = [
    (3, 2, 0.9362, 39.96, 15.77, 3),
    (5, 3, 0.9918, 63.83, 34.80, 10),
    (7, 4, 0.9972, 88.58, 55.81, 21),
    (8, 5, 0.9819, 103.35, 49.96, 32),
    (9, 5, 0.9986, 113.54, 78.23, 36),
    (10, 7, 0.7463, 138.23, 45.78, 60),
    (11, 6, 0.9992, 138.57, 101.73, 55),
    (11, 7, 0.9745, 143.08, 65.50, 66),
    (12, 7, 0.9954, 152.33, 90.20, 72),
    (13, 7, 0.9995, 163.63, 126.12, 78),
    (13, 8, 0.9865, 167.09, 84.57, 91),
    (13, 9, 0.8349, 177.95, 61.46, 104),
    (14, 9, 0.9691, 182.90, 81.15, 112),
    (15, 8, 0.9997, 188.72, 151.24, 105),
    (16, 9, 0.9981, 202.09, 133.74, 128),
    (16, 11, 0.8664, 217.77, 77.18, 160),
    (17, 9, 0.9998, 213.82, 177.00, 136),
    (17, 10, 0.9945, 216.13, 124.86, 153),
    (17, 11, 0.9650, 222.77, 96.85, 170),
    (17, 12, 0.5327, 236.87, 75.92, 187),
    (18, 11, 0.9881, 230.89, 119.28, 180),
    (19, 10, 0.9998, 238.93, 203.32, 171),
    (19, 11, 0.9961, 240.90, 145.89, 190),
    (19, 12, 0.9779, 246.39, 115.42, 209),
    (19, 13, 0.8829, 257.64, 92.90, 228),
    (20, 11, 0.9990, 252.08, 252.09, 200),
]

PRINTED_PAIRS = frozenset((m, n) for n, m, *_ in PRINTED_TABLE)


@dataclass(frozen=True)
class ClosedCurveRecord:
    m: int
    n: int
    k_mn: float
    length_L: float
    willmore_W: float
    selfint_S: int

    def as_row(self):
        return {'n': self.n, 'm': self.m, 'k': self.k_mn, 'W': self.willmore_W,
                'L': self.length_L, 'S': self.selfint_S}


def solve_k_mn(m, n):
    """Modulus with Delta theta_k = 2 pi m / n"""
    m, n = validate_coprime_pair(m, n)
    return solve_k_for_rotation(2.0 * math.pi * m / n)


def closed_curve_record(m, n):
    """Length 2n sqrt(2-k^2) K, Willmore energy 4n pi E / sqrt(2-k^2), n(m-1) self-intersections"""
    m, n = validate_coprime_pair(m, n)
    k = solve_k_mn(m, n)
    root = math.sqrt(2.0 - k * k)
    length = 2.0 * n * root * float(complete_K(k))
    energy = 4.0 * n * math.pi * float(complete_E(k)) / root
    return ClosedCurveRecord(m, n, k, length, energy, n * (m - 1))


def admissible_pairs(max_n):
    """All coprime (m, n) with 1 < 2m/n < sqrt(2) and n <= max_n, sorted by (n, m)"""
    pairs = []
    for n in range(1, int(max_n) + 1):
        for m in range(n // 2 + 1, n):
            if math.gcd(m, n) == 1 and 1.0 < 2.0 * m / n < math.sqrt(2.0):
                pairs.append((m, n))
    return pairs


def build_table(max_n=20, threads=None, printed_only=False):
    """Records for every admissible pair up to max_n, computed in parallel"""
    pairs = admissible_pairs(max_n)
    if printed_only:
        pairs = [pair for pair in pairs if pair in PRINTED_PAIRS]
    threads = threads or default_threads()
    logger.info("Building closed curve table for %d pairs on %d threads", len(pairs), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        records = list(pool.map(lambda pair: closed_curve_record(*pair), pairs))
    return records


def canonical_curve(m, n, s_star=0.0):
    """gamma_{m,n} with gamma(0) = (0, 1) and phi(0) = 0"""
    k = solve_k_mn(m, n)
    params = OrbitlikeParams(k, s_star)
    return Elastica.from_initial_state(params, CurveState(0.0, 1.0, 0.0))
