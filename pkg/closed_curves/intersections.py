"""
Self-intersections of the closed elasticae gamma_{m,n}
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from elastica import HyperbolicPoint, hyperbolic_distance
from utils import NumericalFailure, load_config
from .table import canonical_curve, closed_curve_record

logger = logging.getLogger(__name__)

CONFIG = load_config()['closed_curves']


@dataclass(frozen=True)
class SelfIntersection:
    l: int
    p: int
    s: float
    point: HyperbolicPoint
    partner_s: float

    def as_row(self):
        return {'l': self.l, 'p': self.p, 's': self.s, 'partner_s': self.partner_s,
                'x': float(self.point.x1), 'y': float(self.point.x2)}


def _ceil_div(a, b):
    return -(-a // b)


def intersection_labels(m, n):
    """Admissible (l, p): 1 <= l <= 2n-1, 1 <= p <= ceil(min(l, 2n-l) m / n) - 1"""
    labels = []
    for l in range(1, 2 * n):
        top = _ceil_div(min(l, 2 * n - l) * m, n) - 1
        labels.extend((l, p) for p in range(1, top + 1))
    return labels


def self_intersections(m, n):
    """
    The n(m-1) self-intersections of gamma_{m,n}: s solves theta(s) = pi ((l-1) m/n - p)
    and the partner parameter is 2l sqrt(2-k^2) K - s
    """
    record = closed_curve_record(m, n)
    curve = canonical_curve(m, n)
    length = record.length_L
    half_step = 0.5 * length / n  # sqrt(2-k^2) K

    def theta(s):
        return float(curve.frame(s).theta)

    results = []
    for l, p in intersection_labels(m, n):
        target = math.pi * ((l - 1) * m / n - p)
        s = optimize.brentq(lambda x: theta(x) - target, 0.0, length, xtol=1e-14, rtol=1e-15, maxiter=200)
        partner = math.fmod(2.0 * l * half_step - s, length)
        if partner < 0:
            partner += length
        both = curve.state(np.array([s, partner]))
        first, second = both.at(0), both.at(1)
        gap = hyperbolic_distance((first.gamma1, first.gamma2), (second.gamma1, second.gamma2))
        if gap > 1e-8:
            logger.warning("intersection (l=%d, p=%d) closes only to %.3e", l, p, gap)
        results.append(SelfIntersection(l, p, s, HyperbolicPoint(float(first.gamma1), float(first.gamma2)), partner))
    results.sort(key=lambda item: item.s)
    return results


def _segment_crossing(p0, p1, q0, q1):
    """Parameters (t, u) in [0, 1] of the crossing of p0p1 and q0q1, or None"""
    r = p1 - p0
    d = q1 - q0
    denom = r[0] * d[1] - r[1] * d[0]
    if denom == 0.0:
        return None
    w = q0 - p0
    t = (w[0] * d[1] - w[1] * d[0]) / denom
    u = (w[0] * r[1] - w[1] * r[0]) / denom
    if 0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
        return t, u
    return None


def _candidate_pairs(points, cell):
    buckets = defaultdict(list)
    count = len(points) - 1
    for i in range(count):
        lo = np.floor(np.minimum(points[i], points[i + 1]) / cell).astype(int)
        hi = np.floor(np.maximum(points[i], points[i + 1]) / cell).astype(int)
        for cx in range(lo[0], hi[0] + 1):
            for cy in range(lo[1], hi[1] + 1):
                buckets[(cx, cy)].append(i)
    pairs = set()
    for members in buckets.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                i, j = members[a], members[b]
                if j - i <= 1 or (i == 0 and j == count - 1):
                    continue
                pairs.add((i, j))
    return pairs


def brute_force_intersections(curve, length, samples=None):
    """
    Self-intersections of a closed curve found geometrically: sampled polyline, grid hashing,
    segment crossing tests and least-squares refinement. Returns sorted (s, t) pairs, s < t.
    """
    samples = samples or CONFIG['brute_force_samples']
    grid = np.linspace(0.0, length, samples + 1)
    state = curve.state(grid)
    points = np.column_stack([state.gamma1, state.gamma2])
    steps = np.hypot(*np.diff(points, axis=0).T)
    cell = 2.0 * float(np.max(steps))
    h = length / samples

    def gap(x):
        pair = curve.state(np.asarray(x))
        scale = np.sqrt(pair.gamma2[0] * pair.gamma2[1])
        return np.array([pair.gamma1[0] - pair.gamma1[1], pair.gamma2[0] - pair.gamma2[1]]) / scale

    found = []
    for i, j in sorted(_candidate_pairs(points, cell)):
        hit = _segment_crossing(points[i], points[i + 1], points[j], points[j + 1])
        if hit is None:
            continue
        guess = np.array([grid[i] + hit[0] * h, grid[j] + hit[1] * h])
        fit = optimize.least_squares(gap, guess, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        if not fit.success or np.max(np.abs(fit.fun)) > 1e-8:
            raise NumericalFailure(f"refinement of crossing near s = {guess[0]:.6f} failed")
        s, t = (float(v) % length for v in fit.x)
        s, t = min(s, t), max(s, t)
        if t - s < 4.0 * h or length - (t - s) < 4.0 * h:
            logger.debug("crossing candidate (%d, %d) collapsed onto a single point", i, j)
            continue
        if all(abs(s - a) > 1e-6 * length or abs(t - b) > 1e-6 * length for a, b in found):
            found.append((s, t))
    found.sort()
    return found
