"""
Closed orbitlike elasticae: table, self-intersections, winding numbers and stability
"""

from .table import (
    PRINTED_TABLE,
    PRINTED_PAIRS,
    ClosedCurveRecord,
    admissible_pairs,
    build_table,
    canonical_curve,
    closed_curve_record,
    solve_k_mn,
)
from .intersections import SelfIntersection, brute_force_intersections, intersection_labels, self_intersections
from .winding import auxiliary_winding, winding_number, winding_number_about
from .stability import (
    InstabilityReport,
    StabilityCoefficients,
    TorusGap,
    instability_cutoff,
    instability_report,
    monochromatic_samples,
    monochromatic_second_variation,
    second_variation,
    stability_coefficients,
    torus_convergence_gap,
)
