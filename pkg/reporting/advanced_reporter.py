import logging
import math
import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np

from closed_curves import (
    PRINTED_PAIRS,
    build_table,
    canonical_curve,
    instability_report,
    self_intersections,
    torus_convergence_gap,
)
from elastica import enclosure
from utils import load_config
from .report import csv_text, json_text, svg_text, to_frame

logger = logging.getLogger(__name__)

CONFIG = load_config()
FIGURE_PAIRS = ((2, 3), (3, 5), (5, 8), (7, 10))
CURVE_SAMPLES_PER_PERIOD = 400


class ElasticaReporter:
    def __init__(self, threads=None):
        self.threads = threads

    def generate_comprehensive_report(self, max_n=20, output_dir=None, figure_pairs=FIGURE_PAIRS):
        """Closed-curve table, curve figures, stability and convergence summaries"""
        output_dir = output_dir or CONFIG['reporting']['output_dir']
        os.makedirs(output_dir, exist_ok=True)
        records = build_table(max_n, threads=self.threads)

        # 1. Table of closed curves
        table = to_frame(records, columns=('n', 'm', 'k', 'W', 'L', 'S'))
        table['printed'] = [(r.m, r.n) in PRINTED_PAIRS for r in records]
        self._write(os.path.join(output_dir, 'closed_curves.csv'), csv_text(table))

        # 2. Energy and length against n
        self._plot_table(records, os.path.join(output_dir, 'energy_length.png'))

        # 3. Curves with enclosure and self-intersections
        for m, n in figure_pairs:
            self._plot_closed_curve(m, n, os.path.join(output_dir, f'gamma_{m}_{n}.svg'))

        # 4. Instability criterion for every row
        reports = [instability_report(r.m, r.n) for r in records]
        self._write(os.path.join(output_dir, 'instability.csv'), csv_text(to_frame([vars(r) for r in reports])))

        # 5. Enclosure gap shrinking along m/n -> 1/sqrt(2)
        gaps = self._convergence_rows(records)
        self._write(os.path.join(output_dir, 'torus_gap.csv'), csv_text(to_frame(gaps)))

        summary = self._generate_summary_stats(records, reports)
        self._write(os.path.join(output_dir, 'summary.json'), json_text(summary))
        print(f"📊 Report generated in '{output_dir}' directory")
        return summary

    def _write(self, path, text):
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(text)
        logger.info("wrote %s", path)

    def _plot_table(self, records, filename):
        """W and L of gamma_{m,n} against n, with the lower bound 4 n pi"""
        n = np.array([r.n for r in records])
        fig, axes = plt.subplots(1, 2, figsize=(12, 5))

        axes[0].scatter(n, [r.willmore_W for r in records], color='navy', s=18, label='W')
        grid = np.linspace(n.min(), n.max(), 50)
        axes[0].plot(grid, 4.0 * math.pi * grid, color='gray', linestyle='--', label='4 n pi')
        axes[0].set_xlabel('n')
        axes[0].set_ylabel('Willmore energy')
        axes[0].legend()
        axes[0].grid(True, alpha=0.3)

        axes[1].scatter(n, [r.length_L for r in records], c=[r.k_mn for r in records], cmap='viridis', s=18)
        axes[1].set_xlabel('n')
        axes[1].set_ylabel('Hyperbolic length')
        axes[1].grid(True, alpha=0.3)

        plt.tight_layout()
        plt.savefig(filename, dpi=CONFIG['reporting']['dpi'], bbox_inches='tight', metadata={'Software': None})
        plt.close()

    def _plot_closed_curve(self, m, n, filename):
        curve = canonical_curve(m, n)
        length = n * curve.period
        state = curve.state(np.linspace(0.0, length, CURVE_SAMPLES_PER_PERIOD * n + 1))
        region = enclosure(curve)
        crossings = self_intersections(m, n)
        markers = [(float(c.point.x1), float(c.point.x2)) for c in crossings]
        text = svg_text([(state.gamma1, state.gamma2)], region.bounds(), region.circles(), markers,
                        title=f'gamma_{m},{n}')
        self._write(filename, text)

    def _convergence_rows(self, records):
        rows = []
        for r in sorted(records, key=lambda r: abs(r.m / r.n - 1.0 / math.sqrt(2.0)), reverse=True):
            gap = torus_convergence_gap(r.m, r.n)
            rows.append({'m': r.m, 'n': r.n, 'ratio_gap': abs(r.m / r.n - 1.0 / math.sqrt(2.0)),
                         'annulus_width': gap.annulus_width, 'center_separation': gap.center_separation})
        return rows

    def _generate_summary_stats(self, records, reports):
        unstable = [(r.m, r.n) for r in reports if r.provably_unstable]
        return {
            'pairs': len(records),
            'printed_pairs': sum((r.m, r.n) in PRINTED_PAIRS for r in records),
            'missing_from_printed': [[r.m, r.n] for r in records if (r.m, r.n) not in PRINTED_PAIRS],
            'min_energy_over_4n_pi': min(r.willmore_W / (4.0 * math.pi * r.n) for r in records),
            'provably_unstable': [list(pair) for pair in unstable],
            'self_intersections_total': sum(r.selfint_S for r in records),
        }
