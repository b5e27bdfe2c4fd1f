"""Closed-form hyperbolic trigonometry of pairs of pants.

A hyperbolic pair of pants with geodesic boundary is determined by its three
boundary lengths.  Every essential arc meeting the boundary orthogonally at
both endpoints has a length given in closed form by right-angled hexagon
identities.  This module implements those identities together with the
explicit comparison constants that control how much longer or shorter a
boundary curve of a tubular neighbourhood of an arc can be, relative to the
arc itself.

Two arc configurations occur:

* an arc joining two *different* boundary components ``beta_i``, ``beta_j``;
  the neighbourhood of ``beta_i + beta_j + arc`` is a pants whose third
  boundary is a single curve ``alpha``:

      cosh l(arc) = (cosh(li/2) cosh(lj/2) + cosh(la/2))
                    / (sinh(li/2) sinh(lj/2))

* an arc joining a boundary component ``beta_i`` of length ``li`` to itself;
  the neighbourhood is a pants with two other boundary curves ``alpha``,
  ``delta`` of lengths ``la``, ``ld``:

      cosh^2(l(arc)/2) = [cosh(ld/2) + cosh(la/2 + li/2)]
                         * [cosh(ld/2) + cosh(la/2 - li/2)]
                         / sinh^2(li/2)

Comparison constants (derivation of the self-arc constant)
-----------------------------------------------------------

Write ``x = li/2`` and ``m = max(la, ld)``.  From the factored identity and
the elementary bounds ``exp(-x) cosh(a) <= cosh(a +- x) <= exp(x) cosh(a)``,
``cosh(m/2) <= cosh(la/2) + cosh(ld/2) <= 2 cosh(m/2)`` and
``exp(u)/2 <= cosh(u) <= exp(u)`` one obtains the two-sided bound

    B_lo <= l(arc) - m <= B_hi,
    B_lo = 2 log( exp(-x) / (2 sinh x) ),   B_hi = 2 log( 4 exp(x) / sinh x ).

(The factor 2 in front of the logarithms is forced by the half-length
arguments; dropping it produces a bound that fails numerically, e.g. at
``li = 0.1, la = ld = 1``.)  The identity also gives the floor

    l(arc) >= g0 := 2 arcsinh( 1 / sinh x ),

because ``sinh^2(x) sinh^2(l/2) = cosh^2(ld/2) + cosh^2(la/2)
+ 2 cosh(la/2) cosh(ld/2) cosh(x) >= cosh^2(la/2) >= 1``.

For two hyperbolic structures with the same boundary lengths, let
``r = l_2(arc) / l_1(arc) > 1`` and ``m_k = max(l_k(alpha), l_k(delta))``.
Since ``max(ratio_alpha, ratio_delta) >= m_2/m_1``, a comparison constant
``c`` with ``m_2/m_1 >= c * r`` follows from the bracket by the three-zone
argument with threshold ``t0 = 2 B_hi`` (note ``B_hi > log 8 > 0``):

* ``l_1 >= t0``:   ``m_2 >= l_2 - B_hi >= l_2/2`` and
  ``m_1 <= l_1 + max(0, -B_lo) <= l_1 (1 + max(0, -B_lo)/t0)``, giving
  ``c_a = 1 / (2 (1 + max(0, -B_lo)/t0))``.
* ``l_2 >= t0 >= l_1``:  ``m_2 >= l_2/2`` and
  ``m_1 <= t0 + max(0, -B_lo)``, giving ``c_b = g0 / (2 (t0 + max(0,-B_lo)))``
  via the floor ``l_1 >= g0``.
* ``l_2 <= t0``:  ``r <= t0/g0``, giving ``c_c = g0/t0`` against a curve of
  ratio at least 1.

The exported constant is ``min(c_a, c_b, c_c)`` minimised over the boundary
components, so the certified inequality holds in every zone.

All formulas are evaluated in double precision; cross-validation against an
independent holonomy computation holds to a relative tolerance of about 1e-9.
Boundary components of length 0 (cusps) are rejected here: the hexagon
identities degenerate, and cusped surfaces only ever need closed-curve
lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement


class DomainError(ValueError):
    """Raised when an input lies outside the validity domain of a formula."""


def _require_positive(**values: float) -> None:
    for name, v in values.items():
        if not (v > 0.0) or not math.isfinite(v):
            raise DomainError(f"{name} must be a positive finite length, got {v!r}")


def orthogeodesic_between(li: float, lj: float, la: float) -> float:
    """Length of the orthogeodesic arc joining two distinct boundaries.

    ``li``, ``lj`` are the lengths of the two boundary components the arc
    connects, ``la`` the length of the third boundary of the pants the arc
    determines.  Symmetric in ``(li, lj)`` and strictly increasing in ``la``.
    ``la = 0`` is allowed (the third boundary degenerates to a cusp).
    """
    _require_positive(li=li, lj=lj)
    if la < 0 or not math.isfinite(la):
        raise DomainError(f"la must be a nonnegative finite length, got {la!r}")
    num = math.cosh(li / 2) * math.cosh(lj / 2) + math.cosh(la / 2)
    den = math.sinh(li / 2) * math.sinh(lj / 2)
    return math.acosh(num / den)


def min_between_arc_length(li: float, lj: float) -> float:
    """Infimum of feasible arc lengths between boundaries ``li`` and ``lj``.

    Attained exactly when the third boundary of the pants shrinks to zero;
    below this value no pants exists and :func:`third_boundary_from_arc`
    has no solution.
    """
    _require_positive(li=li, lj=lj)
    num = math.cosh(li / 2) * math.cosh(lj / 2) + 1.0
    den = math.sinh(li / 2) * math.sinh(lj / 2)
    return math.acosh(num / den)


def third_boundary_from_arc(li: float, lj: float, lg: float) -> float:
    """Invert :func:`orthogeodesic_between`: third boundary from arc length.

    Returns ``la >= 0`` with ``orthogeodesic_between(li, lj, la) == lg``.
    Raises :class:`DomainError` when ``lg`` is shorter than the minimal
    feasible arc length for the given pair, reporting that minimum.
    """
    _require_positive(li=li, lj=lj, lg=lg)
    arg = (math.cosh(lg) * math.sinh(li / 2) * math.sinh(lj / 2)
           - math.cosh(li / 2) * math.cosh(lj / 2))
    if arg < 1.0:
        # Tolerate roundoff at the boundary of the feasible region.
        if arg > 1.0 - 1e-12:
            arg = 1.0
        else:
            lo = min_between_arc_length(li, lj)
            raise DomainError(
                f"arc too short for these boundaries: lg={lg!r} but the "
                f"minimal feasible arc length for ({li!r}, {lj!r}) is {lo!r}")
    return 2.0 * math.acosh(arg)


def orthogeodesic_self(li: float, la: float, ld: float) -> float:
    """Length of the orthogeodesic arc joining boundary ``li`` to itself.

    ``la`` and ``ld`` are the lengths of the two other boundary curves of
    the pants the arc determines; the formula is symmetric in ``(la, ld)``.
    """
    _require_positive(li=li, la=la, ld=ld)
    x = li / 2
    f1 = math.cosh(ld / 2) + math.cosh(la / 2 + x)
    f2 = math.cosh(ld / 2) + math.cosh(la / 2 - x)
    val = math.sqrt(f1 * f2) / math.sinh(x)
    return 2.0 * math.acosh(max(val, 1.0))


def self_arc_floor(li: float) -> float:
    """Lower bound ``2 arcsinh(1/sinh(li/2))`` for any self-arc at ``li``."""
    _require_positive(li=li)
    return 2.0 * math.asinh(1.0 / math.sinh(li / 2))


def self_arc_bracket(li: float) -> "Interval":
    """Two-sided bound for ``l(arc) - max(la, ld)`` over self-arcs at ``li``.

    See the module docstring for the derivation; the bounds are
    ``2 log(exp(-x)/(2 sinh x))`` and ``2 log(4 exp(x)/sinh x)`` with
    ``x = li/2``.
    """
    _require_positive(li=li)
    x = li / 2
    lo = 2.0 * (-x - math.log(2.0 * math.sinh(x)))
    hi = 2.0 * (x + math.log(4.0 / math.sinh(x)))
    return Interval(lo, hi)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with finite endpoints."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"interval endpoints must be finite: {self}")
        if self.lo > self.hi:
            raise DomainError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack

    def scale(self, factor: float) -> "Interval":
        if factor < 0:
            raise DomainError("interval scale factor must be nonnegative")
        return Interval(self.lo * factor, self.hi * factor)


@dataclass(frozen=True)
class BetweenArcConstants:
    """Constants controlling arcs that join two distinct boundaries.

    ``lam``       bounds the coefficient in the arc/curve identity:
                  ``exp(la/2)/(2 lam) <= cosh l(arc) <= lam exp(la/2)``.
    ``threshold`` equals ``log(2 lam)``; arcs longer than twice this value
                  have ``1 <= la/l(arc) <= 3``.
    ``arc_floor`` lower bound for every between-arc length.
    ``curve_cap`` upper bound for the curve length when the arc is shorter
                  than ``threshold``.
    ``ratio_const`` the reported comparison constant
                  ``max(1/3, arc_floor/curve_cap, arc_floor/threshold)``.
    """

    lam: float
    threshold: float
    arc_floor: float
    curve_cap: float
    ratio_const: float

    def __post_init__(self) -> None:
        for name in ("lam", "threshold", "arc_floor", "curve_cap", "ratio_const"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise DomainError(f"{name} must be positive and finite, got {v!r}")


def _boundary_pairs(boundary_lengths):
    lam = tuple(float(v) for v in boundary_lengths)
    if not lam:
        raise DomainError("need at least one boundary length")
    for v in lam:
        if not (v > 0.0 and math.isfinite(v)):
            raise DomainError(f"boundary lengths must be positive, got {v!r}")
    return list(combinations_with_replacement(lam, 2))


def between_arc_constants(boundary_lengths) -> BetweenArcConstants:
    """Comparison constants for arcs between two distinct boundaries.

    Extremised over all ordered pairs of entries of ``boundary_lengths``
    (pairs with repetition: two distinct boundary components may have equal
    lengths).  All entries must be strictly positive.
    """
    pairs = _boundary_pairs(boundary_lengths)
    lam = 0.0
    for (u, v) in pairs:
        ss = math.sinh(u / 2) * math.sinh(v / 2)
        cc = math.cosh(u / 2) * math.cosh(v / 2)
        lam = max(lam, ss, (cc + 1.0) / ss)
    threshold = math.log(2.0 * lam)
    arc_floor = min(
        math.acosh((math.cosh(u / 2) * math.cosh(v / 2))
                   / (math.sinh(u / 2) * math.sinh(v / 2)))
        for (u, v) in pairs)
    # Cap on the curve length while the arc stays below the threshold:
    # cosh(la/2) = cosh(l_arc) ss - cc <= exp(l_arc) ss - cc <= 2 lam ss - cc.
    # Since lam >= (cc+1)/ss for every pair, the acosh argument is >= cc + 2.
    curve_cap = 0.0
    for (u, v) in pairs:
        ss = math.sinh(u / 2) * math.sinh(v / 2)
        cc = math.cosh(u / 2) * math.cosh(v / 2)
        arg = 2.0 * lam * ss - cc
        if arg < 1.0:
            raise DomainError(
                f"curve cap undefined for boundary pair ({u!r}, {v!r})")
        curve_cap = max(curve_cap, 2.0 * math.acosh(arg))
    ratio_const = max(1.0 / 3.0, arc_floor / curve_cap, arc_floor / threshold)
    return BetweenArcConstants(lam=lam, threshold=threshold,
                               arc_floor=arc_floor, curve_cap=curve_cap,
                               ratio_const=ratio_const)


def self_arc_constant(boundary_lengths) -> float:
    """Comparison constant for self-arcs, minimised over the boundaries.

    For each boundary length the constant is ``min(c_a, c_b, c_c)`` from the
    three-zone argument documented in the module docstring; the result is
    the minimum over all boundary components, so a single constant certifies
    every self-arc on the surface.  Always lies in ``(0, 1]``.
    """
    lam = tuple(float(v) for v in boundary_lengths)
    if not lam:
        raise DomainError("need at least one boundary length")
    best = 1.0
    for li in lam:
        if not (li > 0.0 and math.isfinite(li)):
            raise DomainError(f"boundary lengths must be positive, got {li!r}")
        bracket = self_arc_bracket(li)
        b_lo, b_hi = bracket.lo, bracket.hi
        g0 = self_arc_floor(li)
        t0 = 2.0 * b_hi
        slack = max(0.0, -b_lo)
        c_a = 1.0 / (2.0 * (1.0 + slack / t0))
        c_b = g0 / (2.0 * (t0 + slack))
        c_c = g0 / t0
        best = min(best, c_a, c_b, c_c)
    return best


@dataclass(frozen=True)
class GapConstants:
    """Certified arc-vs-curve comparison constant and the induced gap.

    ``c_between`` and ``c_self`` are the two per-configuration constants;
    ``c = min(c_between, c_self)`` is the constant actually used in the
    certified per-arc check (the minimum is required for the inequality to
    hold in both configurations), and ``gap = -log c >= 0`` bounds the
    difference between the arc metric and the curve-ratio metric.
    """

    c_between: float
    c_self: float
    c: float
    gap: float

    def __post_init__(self) -> None:
        if not (0.0 < self.c <= 1.0):
            raise DomainError(f"comparison constant must lie in (0, 1]: {self.c!r}")
        if self.gap < 0.0:
            raise DomainError(f"gap must be nonnegative: {self.gap!r}")


def gap_constants(boundary_lengths) -> GapConstants:
    """Combined comparison constant ``min(c_between, c_self)`` and its gap.

    ``c_between`` is reported as computed (it may exceed 1 on surfaces with
    short boundaries); the certified constant ``c`` is clamped into ``(0, 1]``
    since a ratio bound with constant above 1 is never needed.
    """
    c_between = between_arc_constants(boundary_lengths).ratio_const
    c_self = self_arc_constant(boundary_lengths)
    c = min(c_between, c_self, 1.0)
    return GapConstants(c_between=c_between, c_self=c_self,
                        c=c, gap=-math.log(c))
