"""Numerics for Teichmuller spaces of hyperbolic surfaces with boundary.

Builds surfaces from Fenchel-Nielsen coordinates, computes geodesic lengths
of closed curves and orthogeodesic arcs, estimates the curve-ratio, arc,
and quasiconformal metrics over certified curve families, and provides the
closed-form comparison constants relating them.
"""

from .asymptotics import (
    bmms_dilation,
    comparison_bounds,
    cusp_radius,
    cusp_truncation_constant,
    halpern_bracket,
    nielsen_k_infinity,
)
from .curves import (
    CurveClass,
    arc_length_formula,
    curve_length_at,
    enumerate_arcs,
    enumerate_curves,
    family_lengths,
    pants_neighborhood_boundaries,
)
from .harness import (
    AlmostIsometryReport,
    ExperimentConfig,
    almost_isometry_report,
    compare_metrics,
    phi_experiment,
    sample_point,
    verify_arc_construction,
)
from .metrics import (
    MetricEstimate,
    arc_lower,
    ext_annulus,
    ext_cylinder,
    ext_sum_bracket,
    maskit_bracket,
    symmetrize,
    teich_interval,
    thurston_lower,
)
from .pants_trig import (
    BetweenArcConstants,
    DomainError,
    GapConstants,
    Interval,
    between_arc_constants,
    gap_constants,
    min_between_arc_length,
    orthogeodesic_between,
    orthogeodesic_self,
    self_arc_constant,
    third_boundary_from_arc,
)
from .surface import (
    ArcClass,
    DoubleData,
    FNPoint,
    Holonomy,
    Marking,
    arc_length,
    build_marking,
    curve_length,
    double,
    holonomy,
    phi_gamma,
)

__version__ = "0.1.0"
