"""Metric estimators and extremal-length bracket arithmetic.

The curve-ratio (Thurston) and arc metrics are suprema of length ratios
over infinite families; this module evaluates the suprema over the finite
nested twist-orbit families of :mod:`teichspace.curves`, which yields
certified lower bounds, monotone nondecreasing in the family depth.  Each
estimate carries the witness class attaining it.

Exact extremal lengths are out of reach without quadratic differentials,
so the quasiconformal-deformation metric is reported as an interval only:
two-sided bounds for the extremal length of a closed geodesic in terms of
its hyperbolic length (Maskit's inequalities on cusped surfaces, doubled
across the boundary for bordered ones) are combined conservatively over
the curve family, and the upper end absorbs the additive defect
``log(n + 2)`` of restricting the supremum to simple closed curves.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .curves import (
    arc_length_formula,
    enumerate_arcs,
    enumerate_curves,
    family_lengths,
)
from .pants_trig import DomainError, Interval
from .surface import FNPoint, Marking

__all__ = [
    "MetricEstimate",
    "TeichIntervalReport",
    "arc_lower",
    "bordered_ext_bracket",
    "ext_annulus",
    "ext_cylinder",
    "ext_sum_bracket",
    "maskit_bracket",
    "symmetrize",
    "teich_interval",
    "teich_interval_report",
    "thurston_lower",
]


@dataclass(frozen=True)
class MetricEstimate:
    """Family lower bound for an asymmetric metric, with its witness."""

    value: float
    depth: int
    witness: str
    family_size: int

    def to_json(self) -> str:
        return json.dumps({"value": self.value, "depth": self.depth,
                           "witness": self.witness,
                           "family_size": self.family_size})


def _require_same_space(x1: FNPoint, x2: FNPoint) -> None:
    if (x1.g, x1.n) != (x2.g, x2.n):
        raise DomainError(
            f"points live on different surfaces: ({x1.g},{x1.n}) vs ({x2.g},{x2.n})")
    if x1.boundary != x2.boundary:
        raise DomainError(
            f"boundary lengths differ: {x1.boundary} vs {x2.boundary}")


def thurston_lower(x1: FNPoint, x2: FNPoint, m: Marking,
                   depth: int) -> MetricEstimate:
    """Best log length ratio over the essential curve family.

    A lower bound for the curve-ratio metric from ``x1`` to ``x2``; both
    points must have identical boundary lengths (all zero is allowed).
    """
    _require_same_space(x1, x2)
    classes = [c for c in enumerate_curves(m, depth) if c.essential]
    l1 = family_lengths(x1, m, classes)
    l2 = family_lengths(x2, m, classes)
    best, witness = None, None
    for c, a, b in zip(classes, l1, l2):
        val = math.log(b / a)
        if best is None or val > best:
            best, witness = val, c
    return MetricEstimate(value=best, depth=depth, witness=witness.label(),
                          family_size=len(classes))


def arc_lower(x1: FNPoint, x2: FNPoint, m: Marking, depth: int) -> MetricEstimate:
    """Best log length ratio over arcs, boundaries, and the curve family.

    Defined only for positive boundary lengths (arcs degenerate at cusps).
    Always at least :func:`thurston_lower` at equal depth, since the family
    is a superset.
    """
    _require_same_space(x1, x2)
    if any(v == 0.0 for v in x1.boundary):
        raise DomainError("arc metric needs strictly positive boundary lengths")
    classes = enumerate_curves(m, depth)
    l1 = family_lengths(x1, m, classes)
    l2 = family_lengths(x2, m, classes)
    best, witness = None, None
    for c, a, b in zip(classes, l1, l2):
        val = math.log(b / a)
        if best is None or val > best:
            best, witness = val, c.label()
    arcs = enumerate_arcs(m, depth)
    for arc in arcs:
        val = math.log(arc_length_formula(x2, m, arc)
                       / arc_length_formula(x1, m, arc))
        if val > best:
            best, witness = val, arc.label()
    return MetricEstimate(value=best, depth=depth, witness=witness,
                          family_size=len(classes) + len(arcs))


def symmetrize(d_xy: float, d_yx: float) -> float:
    """Symmetrised metric value: the larger of the two one-sided values."""
    return max(d_xy, d_yx)


# ---------------------------------------------------------------------------
# extremal-length brackets


def maskit_bracket(l: float) -> Interval:
    """Two-sided bound ``[l/pi, (l/2) exp(l/2)]`` for the extremal length
    of a closed geodesic of hyperbolic length ``l`` on a cusped surface."""
    if not (l > 0.0) or not math.isfinite(l):
        raise DomainError(f"length must be positive, got {l!r}")
    return Interval(l / math.pi, 0.5 * l * math.exp(0.5 * l))


def bordered_ext_bracket(l: float) -> Interval:
    """Extremal-length bound for a closed geodesic on a bordered surface.

    Doubling halves both the extremal length and the doubled geodesic
    length, so the bordered bracket is half the bracket of the doubled
    curve: ``maskit_bracket(2 l) / 2 = [l/pi, (l/2) exp(l)]``.
    """
    return maskit_bracket(2.0 * l).scale(0.5)


def ext_sum_bracket(parts) -> Interval:
    """Bound for the extremal length of a ``k``-part lamination sum:
    ``[max lo_j, k^2 max hi_j]`` over the per-part intervals."""
    parts = list(parts)
    if not parts:
        raise DomainError("need at least one component interval")
    k = len(parts)
    return Interval(max(p.lo for p in parts), k * k * max(p.hi for p in parts))


def ext_annulus(r_in: float, r_out: float) -> float:
    """Extremal length ``2 pi / log(r_out/r_in)`` of the core curve of a
    round annulus ``r_in < |z| < r_out``."""
    if not (0.0 < r_in < r_out):
        raise DomainError(f"need 0 < r_in < r_out, got {r_in!r}, {r_out!r}")
    return 2.0 * math.pi / math.log(r_out / r_in)


def ext_cylinder(circumference: float, height: float) -> float:
    """Extremal length ``c/h`` of the core curve of a flat cylinder."""
    if not (circumference > 0.0 and height > 0.0):
        raise DomainError("cylinder dimensions must be positive")
    return circumference / height


# ---------------------------------------------------------------------------
# bracketed quasiconformal metric


@dataclass(frozen=True)
class TeichIntervalReport:
    """Interval estimate with the witness of its upper end."""

    interval: Interval
    depth: int
    witness: str
    witness_max_log_width: float
    family_size: int

    def to_json(self) -> str:
        return json.dumps({
            "interval": [self.interval.lo, self.interval.hi],
            "depth": self.depth, "witness": self.witness,
            "witness_max_log_width": self.witness_max_log_width,
            "family_size": self.family_size})


def _curve_ext_bracket(l: float, bordered: bool) -> Interval:
    return bordered_ext_bracket(l) if bordered else maskit_bracket(l)


def teich_interval_report(x1: FNPoint, x2: FNPoint, m: Marking,
                          depth: int) -> TeichIntervalReport:
    """Interval bracketing the quasiconformal metric between two points.

    Both points must be punctured, or both bordered with equal boundary
    lengths.  For every essential curve the extremal-length ratio is
    bracketed through the hyperbolic-length brackets; the lower end pairs
    bracket ends so the value can only shrink, the upper end so it can
    only grow, and the additive defect ``log(n+2)`` of the simple-curve
    restriction widens the top.
    """
    _require_same_space(x1, x2)
    punctured = x1.is_punctured()
    if not punctured and any(v == 0.0 for v in x1.boundary):
        raise DomainError("points must be fully punctured or fully bordered")
    classes = [c for c in enumerate_curves(m, depth) if c.essential]
    l1 = family_lengths(x1, m, classes)
    l2 = family_lengths(x2, m, classes)
    s_lo = 0.0
    s_hi, witness, wit_width = None, None, 0.0
    for c, a, b in zip(classes, l1, l2):
        b1 = _curve_ext_bracket(a, not punctured)
        b2 = _curve_ext_bracket(b, not punctured)
        la1, lb1 = math.log(b1.lo), math.log(b1.hi)
        la2, lb2 = math.log(b2.lo), math.log(b2.hi)
        v_lo = 0.5 * max(0.0, la2 - lb1, la1 - lb2)
        v_hi = 0.5 * max(lb2 - la1, lb1 - la2)
        s_lo = max(s_lo, v_lo)
        if s_hi is None or v_hi > s_hi:
            s_hi, witness = v_hi, c.label()
            wit_width = max(lb1 - la1, lb2 - la2)
    defect = math.log(x1.n + 2)
    return TeichIntervalReport(interval=Interval(s_lo, s_hi + defect),
                               depth=depth, witness=witness,
                               witness_max_log_width=wit_width,
                               family_size=len(classes))


def teich_interval(x1: FNPoint, x2: FNPoint, m: Marking, depth: int) -> Interval:
    """Interval bracketing the quasiconformal metric; see
    :func:`teich_interval_report` for the witness data."""
    return teich_interval_report(x1, x2, m, depth).interval
