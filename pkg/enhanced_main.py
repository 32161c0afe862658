#!/usr/bin/env python3
"""
Closed Elastica Report Pipeline
Table of closed curves gamma_(m,n), curve figures, instability and enclosure-gap summaries
"""

import argparse
import os
import sys

import matplotlib
matplotlib.use('Agg')  # Use non-interactive backend

# Add project root to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from reporting.advanced_reporter import FIGURE_PAIRS, ElasticaReporter
from utils import load_config


def main(argv=None):
    """Full report over all admissible pairs with n <= max_n"""
    parser = argparse.ArgumentParser(description='Closed elastica report')
    parser.add_argument('--max-n', type=int, default=20)
    parser.add_argument('--output-dir', default=load_config()['reporting']['output_dir'])
    parser.add_argument('--threads', type=int, default=None)
    args = parser.parse_args(argv)

    print("🚀 Starting Closed Elastica Report Pipeline...")
    print(f"📊 Computing gamma_(m,n) for n <= {args.max_n} and figures for {len(FIGURE_PAIRS)} pairs")
    reporter = ElasticaReporter(threads=args.threads)
    summary = reporter.generate_comprehensive_report(args.max_n, args.output_dir)

    print("\n" + "=" * 60)
    print("CLOSED ELASTICA SUMMARY")
    print("=" * 60)
    print(f"Admissible pairs: {summary['pairs']} ({summary['printed_pairs']} in the printed table)")
    if summary['missing_from_printed']:
        print(f"Not printed: {', '.join(f'({m},{n})' for m, n in summary['missing_from_printed'])}")
    print(f"Smallest W / (4 n pi): {summary['min_energy_over_4n_pi']:.6f}")
    print(f"Provably unstable: {len(summary['provably_unstable'])} curves")
    print(f"Self-intersections in total: {summary['self_intersections_total']}")

    print(f"\n📁 Reports generated in '{args.output_dir}' directory:")
    print("   - closed_curves.csv (n, m, k, W, L, S)")
    print("   - energy_length.png (energy and length against n)")
    print("   - gamma_m_n.svg (curves with enclosure and crossings)")
    print("   - instability.csv (second variation criterion)")
    print("   - torus_gap.csv (enclosure width near m/n = 1/sqrt(2))")
    print("   - summary.json")

    print("\n✅ Report pipeline completed successfully!")
    return summary


if __name__ == "__main__":
    try:
        main()
    except Exception as e:
        print(f"❌ Error in report pipeline: {str(e)}")
        import traceback
        traceback.print_exc()
        sys.exit(1)
