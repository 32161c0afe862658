#!/usr/bin/env python3
"""
Hyperbolic Elastica Toolkit
Sample explicit elasticae, reproduce the closed-curve table, enumerate self-intersections,
solve the Dirichlet problem and run the verification suites
"""

import argparse
import dataclasses
import logging
import math
import os
import sys

import matplotlib
matplotlib.use('Agg')  # Use non-interactive backend
import numpy as np
import pandas as pd

# Add project root to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from closed_curves import build_table, canonical_curve, closed_curve_record, self_intersections
from dirichlet import DirichletProblem, SearchConfig, sample_path, solve, symmetry_hypothesis_check
from elastica import (
    SPECIAL_KINDS,
    HyperbolicPoint,
    CurveCoefficients,
    CurveState,
    Elastica,
    enclosure,
    evaluate_special,
    special_period,
)
from fundamental_system import OrbitlikeParams, WavelikeParams, solve_k_for_rotation
from oracle import SUITES, run_suite
from reporting import FORMATS, csv_text, json_text, svg_text, to_frame, write_output
from utils import DomainError, load_config, parse_number, parse_rotation, parse_vector

logger = logging.getLogger('elastica')

CONFIG = load_config()
FAMILIES = ('orbitlike', 'wavelike') + tuple(SPECIAL_KINDS)
SAMPLE_COLUMNS = ('s', 'gamma1', 'gamma2', 'phi', 'kappa')
SPECIAL_WINDOW = 3.0
COMMANDS = ('sample', 'table', 'intersections', 'dirichlet', 'verify')


def progress(message):
    """Progress lines go to stderr so that data on stdout stays clean"""
    print(message, file=sys.stderr)


def _number(text):
    try:
        return parse_number(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(args, payload, frame=None, svg=None):
    if args.format == 'csv':
        text = csv_text(frame if frame is not None else to_frame(payload))
    elif args.format == 'json':
        text = json_text(payload)
    else:
        if svg is None:
            raise DomainError(f"svg output is only available for sample and intersections, not {args.command}")
        text = svg()
    target = write_output(text, args.out)
    if target:
        progress(f"📁 Output written to {target}")


def _region_dict(region):
    return {'kind': region.kind, **dataclasses.asdict(region)}


def _sample_curve(args):
    """Elastica or special-curve evaluator plus the default parameter window"""
    family = args.family
    if family in SPECIAL_KINDS:
        period = special_period(family)
        window = (0.0, period) if math.isfinite(period) else (-SPECIAL_WINDOW, SPECIAL_WINDOW)
        return None, (lambda s: evaluate_special(family, s)), window

    if args.rotation is not None:
        if family != 'orbitlike':
            raise DomainError("--rotation only applies to orbitlike elasticae")
        m, n, target = parse_rotation(args.rotation)
        k = solve_k_for_rotation(target)
        progress(f"🔍 Rotation {m}/{n} gives k = {k:.12f}")
    elif args.k is not None:
        k = args.k
    else:
        raise DomainError(f"{family} sampling needs --k or --rotation")

    params = (OrbitlikeParams if family == 'orbitlike' else WavelikeParams)(k, args.s_star)
    if args.coeffs is not None and args.initial is not None:
        raise DomainError("give either --coeffs or --initial, not both")
    if args.coeffs is not None:
        a1, a3, b3 = parse_vector(args.coeffs, 3)
        if family == 'orbitlike':
            if not a3 > abs(a1):
                raise DomainError(f"orbitlike coefficients need a3 > |a1|, got a1={a1}, a3={a3}")
            coeffs = CurveCoefficients.orbitlike(a1, math.sqrt(a3 * a3 - a1 * a1), b3, params.mu)
        else:
            if a3 == 0:
                raise DomainError("wavelike curves with a3 = 0 are sampled from --initial")
            coeffs = CurveCoefficients.wavelike(a1, a3, b3, params.mu)
        curve = Elastica(params, coeffs)
    elif args.initial is not None:
        x1, x2, phi = parse_vector(args.initial, 3)
        curve = Elastica.from_initial_state(params, CurveState(x1, x2, phi))
    else:
        curve = Elastica.unit(params)
    return curve, curve.state, (0.0, 2.0 * curve.period)


def cmd_sample(args):
    curve, evaluate, (s_min, s_max) = _sample_curve(args)
    s_min = args.s_min if args.s_min is not None else s_min
    s_max = args.s_max if args.s_max is not None else s_max
    if not s_max >= s_min:
        raise DomainError(f"need s_min <= s_max, got [{s_min}, {s_max}]")
    if args.count < 0:
        raise DomainError(f"count must be non-negative, got {args.count}")

    progress(f"📊 Sampling {args.family} elastica at {args.count} points on [{s_min:g}, {s_max:g}]")
    if args.count == 0:
        frame = pd.DataFrame({column: pd.Series(dtype=float) for column in SAMPLE_COLUMNS})
        state = None
    else:
        s = np.linspace(s_min, s_max, args.count)
        state = evaluate(s)
        frame = pd.DataFrame({'s': s, 'gamma1': np.broadcast_to(state.gamma1, s.shape),
                              'gamma2': np.broadcast_to(state.gamma2, s.shape),
                              'phi': np.broadcast_to(state.phi, s.shape),
                              'kappa': np.broadcast_to(state.kappa, s.shape)})
    region = enclosure(curve) if curve is not None and args.enclosure else None

    def svg():
        paths = [] if state is None else [(frame['gamma1'].to_numpy(), frame['gamma2'].to_numpy())]
        if region is not None:
            bounds = region.bounds(HyperbolicPoint(*paths[0])) if region.kind == 'cone' and paths else region.bounds()
            return svg_text(paths, bounds, region.circles())
        if state is None:
            raise DomainError("an empty sample has no view box; add --enclosure")
        bounds = (frame['gamma1'].min(), frame['gamma1'].max(), frame['gamma2'].min(), frame['gamma2'].max())
        return svg_text(paths, bounds)

    payload = {'family': args.family, 'samples': frame.to_dict(orient='records')}
    if curve is not None:
        payload.update({'k': curve.params.k, 's_star': curve.params.s_star, 'mu': curve.mu,
                        'coefficients': dict(zip(('a1', 'a2', 'a3', 'b1', 'b2', 'b3'), curve.coeffs.as_tuple()))})
    if region is not None:
        payload['enclosure'] = _region_dict(region)
    _emit(args, payload, frame, svg)
    return 0


def cmd_table(args):
    progress(f"📊 Computing closed curves gamma_(m,n) for n <= {args.max_n}")
    records = build_table(args.max_n, threads=args.threads, printed_only=args.printed_only)
    progress(f"✅ {len(records)} closed curves")
    frame = to_frame(records, columns=('n', 'm', 'k', 'W', 'L', 'S'))
    _emit(args, frame.to_dict(orient='records'), frame)
    return 0


def cmd_intersections(args):
    record = closed_curve_record(args.m, args.n)
    progress(f"🔍 Locating the {record.selfint_S} self-intersections of gamma_({args.m},{args.n})")
    crossings = self_intersections(args.m, args.n)
    frame = to_frame(crossings)

    def svg():
        curve = canonical_curve(args.m, args.n)
        state = curve.state(np.linspace(0.0, record.length_L, 400 * args.n + 1))
        region = enclosure(curve)
        markers = [(float(c.point.x1), float(c.point.x2)) for c in crossings]
        return svg_text([(state.gamma1, state.gamma2)], region.bounds(), region.circles(), markers)

    _emit(args, frame.to_dict(orient='records'), frame, svg)
    return 0


def cmd_dirichlet(args):
    problem = DirichletProblem(args.a1, args.a2, args.b1, args.b2, args.phi_a, args.phi_b)
    defaults = CONFIG['dirichlet']
    config = SearchConfig(
        k_min=args.k_min if args.k_min is not None else defaults['k_min'],
        k_max=args.k_max if args.k_max is not None else defaults['k_max'],
        grid=args.grid if args.grid is not None else defaults['grid'],
        l_max=args.l_max if args.l_max is not None else defaults['l_max'],
        tol=args.tol if args.tol is not None else defaults['tol'],
        threads=args.threads or CONFIG['cli']['threads'],
    )
    orientations = ('positive', 'negative') if args.orientation == 'both' else (args.orientation,)
    hypothesis = symmetry_hypothesis_check(problem)
    if hypothesis.holds:
        progress(f"🔍 Symmetry hypothesis holds for orientations {hypothesis.orientations_covered}")

    solutions = []
    for orientation in orientations:
        progress(f"🚀 Searching {orientation}ly oriented orbitlike solutions")
        solutions.extend(solve(problem, config, orientation))
    progress(f"✅ {len(solutions)} solutions found")
    if not solutions:
        progress("⚠️ No solution in the searched region")

    frame = to_frame([{key: value for key, value in sol.as_dict().items() if key != 'coeffs'}
                      for sol in solutions],
                     columns=('k', 's_star', 'branch_l', 'length_L', 'residual_r1', 'residual_r2',
                              'symmetric', 'orientation'))
    count = args.count if args.count is not None else CONFIG['cli']['sample_count']
    payload = {
        'problem': dataclasses.asdict(problem),
        'solutions': [dict(sol.as_dict(), path=sample_path(sol, count).to_dict(orient='records'))
                      for sol in solutions],
    }
    _emit(args, payload, frame)
    return 0


def cmd_verify(args):
    progress(f"🔍 Running verification suite '{args.suite}'")
    results = run_suite(args.suite)
    for result in results:
        mark = '✅' if result.passed else '❌'
        progress(f"   {mark} {result.name}: {result.value:.3e} (tolerance {result.tolerance:.1e})")
    frame = to_frame(results)
    _emit(args, frame.to_dict(orient='records'), frame)
    failed = sum(not r.passed for r in results)
    print("\n" + "=" * 60, file=sys.stderr)
    progress(f"{len(results) - failed} passed, {failed} failed")
    print("=" * 60, file=sys.stderr)
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(description='Explicit elasticae in the hyperbolic plane')
    parser.add_argument('--format', choices=FORMATS, default='csv')
    parser.add_argument('--out', default=None, help='Output file (default: stdout)')
    parser.add_argument('--tol', type=float, default=None, help='Residual tolerance for the Dirichlet solver')
    parser.add_argument('--threads', type=int, default=None,
                        help='Worker threads (default: ELASTICA_THREADS or the CPU count)')
    parser.add_argument('--verbose', action='store_true')
    commands = parser.add_subparsers(dest='command', required=True)

    sample = commands.add_parser('sample', help='Sample an elastica')
    sample.add_argument('--family', choices=FAMILIES, default='orbitlike')
    sample.add_argument('--k', type=_number, default=None)
    sample.add_argument('--s-star', type=_number, default=0.0)
    sample.add_argument('--coeffs', default=None, help='a1,a3,b3')
    sample.add_argument('--initial', default=None, help='x1,x2,phi at s = 0')
    sample.add_argument('--rotation', default=None, help='m/n; solves Delta theta_k = 2 pi m/n')
    sample.add_argument('--s-min', type=_number, default=None)
    sample.add_argument('--s-max', type=_number, default=None)
    sample.add_argument('--count', type=int, default=CONFIG['cli']['sample_count'])
    sample.add_argument('--enclosure', action='store_true', help='Include the enclosing circles or cone')
    sample.set_defaults(handler=cmd_sample)

    table = commands.add_parser('table', help='Closed curves gamma_(m,n)')
    table.add_argument('--max-n', type=int, default=20)
    table.add_argument('--printed-only', action='store_true', help='Only the pairs of the reference table')
    table.set_defaults(handler=cmd_table)

    intersections = commands.add_parser('intersections', help='Self-intersections of gamma_(m,n)')
    intersections.add_argument('--m', type=int, required=True)
    intersections.add_argument('--n', type=int, required=True)
    intersections.set_defaults(handler=cmd_intersections)

    dirichlet = commands.add_parser('dirichlet', help='Orbitlike solutions of the Dirichlet problem')
    for name in ('--a1', '--a2', '--b1', '--b2', '--phi-a', '--phi-b'):
        dirichlet.add_argument(name, type=_number, required=True)
    dirichlet.add_argument('--k-min', type=_number, default=None)
    dirichlet.add_argument('--k-max', type=_number, default=None)
    dirichlet.add_argument('--l-max', type=int, default=None)
    dirichlet.add_argument('--grid', type=int, default=None)
    dirichlet.add_argument('--count', type=int, default=None, help='Samples per solution path in JSON output')
    dirichlet.add_argument('--orientation', choices=('positive', 'negative', 'both'), default='positive')
    dirichlet.set_defaults(handler=cmd_dirichlet)

    verify = commands.add_parser('verify', help='Run a verification suite')
    verify.add_argument('suite', choices=SUITES)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    if args.threads is not None and args.threads < 1:
        raise DomainError(f"--threads must be positive, got {args.threads}")
    return args.handler(args)


def run(argv=None):
    """Exit code 2 for invalid parameters, 1 for numerical failures"""
    argv = sys.argv[1:] if argv is None else list(argv)
    command = next((word for word in argv if word in COMMANDS), 'elastica toolkit')
    try:
        return main(argv)
    except ValueError as e:
        print(f"❌ Invalid parameters for {command}: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        print(f"❌ Error in {command}: {str(e)}", file=sys.stderr)
        if '--verbose' in argv:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(run())
