"""Asymptotic comparison constants for cusped and bordered surfaces.

Collects the closed-form constants used when comparing a bordered hyperbolic
surface with its cusped counterpart: the conformal radius of a horocyclic
cusp neighbourhood, the distortion constant for truncating cusps, the
quasiconformal dilation of the pants straightening map, the additive bounds
appearing in the extremal-length comparison, and the length-contraction
factor of the infinite Nielsen extension.
"""

from __future__ import annotations

import math

from .pants_trig import DomainError, Interval

# Truncation distortion is max((1 - 2 n pi sqrt(2) e^(1/4))^-2,
#                              1 + sqrt(32 pi exp(2 pi)) e^(1/4)).
# The derivation uses an intermediate factor (1 - n sqrt(2) e^(1/4)); the
# final squared constant with the extra 2 pi is the one implemented here.
_TRUNCATION_COEFF = math.sqrt(32.0 * math.pi * math.exp(2.0 * math.pi))


def cusp_radius(eps: float) -> float:
    """Euclidean radius ``exp(-2 pi / eps)`` of the punctured-disc model
    of the cusp neighbourhood bounded by a horocycle of length ``eps``.

    Valid for horocycle lengths in ``(0, 1]``; strictly increasing.
    """
    if not (0.0 < eps <= 1.0):
        raise DomainError(f"horocycle length must lie in (0, 1], got {eps!r}")
    return math.exp(-2.0 * math.pi / eps)


def cusp_truncation_constant(eps: float, n: int) -> float:
    """Distortion bound for extremal lengths under truncating ``n`` cusps
    along horocycles of length ``eps``.

    Only defined while ``1 - 2 n pi sqrt(2) eps^(1/4) > 0``; outside that
    range the underlying estimate is vacuous and a :class:`DomainError`
    is raised.  Tends to 1 as ``eps`` tends to 0 and is decreasing in
    ``eps`` on its whole domain.
    """
    if n < 1:
        raise DomainError(f"cusp count must be at least 1, got {n!r}")
    if not (eps > 0.0):
        raise DomainError(f"horocycle length must be positive, got {eps!r}")
    root = eps ** 0.25
    margin = 1.0 - 2.0 * n * math.pi * math.sqrt(2.0) * root
    if margin <= 0.0:
        raise DomainError(
            f"eps too large for the truncation constant: need "
            f"1 - 2*n*pi*sqrt(2)*eps^(1/4) > 0, got {margin!r} at eps={eps!r}, n={n}")
    return max(margin ** -2, 1.0 + _TRUNCATION_COEFF * root)


def bmms_dilation(eps) -> float:
    """Quasiconformal dilation bound ``prod_j (1 + 2 eps_j^2)`` for
    straightening pants boundaries of lengths ``eps_j`` into cusps.

    Each entry must lie in ``(0, 1/2)``; the empty product is 1.
    """
    total = 1.0
    for e in eps:
        e = float(e)
        if not (0.0 < e < 0.5):
            raise DomainError(f"boundary lengths must lie in (0, 1/2), got {e!r}")
        total *= 1.0 + 2.0 * e * e
    return total


def bmms_horocycle_lengths(eps) -> list:
    """Horocycle lengths ``(2/pi) eps_j`` of the truncation matched to the
    straightening map of :func:`bmms_dilation`."""
    return [2.0 / math.pi * float(e) for e in eps]


def comparison_bounds(n: int) -> dict:
    """Additive and multiplicative constants for ``n`` boundary components:
    the extremal-ratio defect ``log(n+2)``, the coordinatewise comparison
    bound ``log(n+3)``, and the lamination-splitting factor ``(n+1)^2``.
    """
    if n < 1:
        raise DomainError(f"boundary count must be at least 1, got {n!r}")
    return {
        "sup_defect": math.log(n + 2),
        "coordinate_bound": math.log(n + 3),
        "split_factor": float((n + 1) ** 2),
    }


def _nielsen_factor(lam: float, i: int, alt_parsing: bool) -> float:
    arg = (2.0 * math.sinh(lam)) / 2.0 ** i if alt_parsing else 2.0 * math.sinh(lam / 2.0 ** i)
    return 1.0 - (2.0 / math.pi) * math.atan(arg)


def nielsen_truncation_index(lam: float, tol: float) -> int:
    """Smallest truncation index whose tail error provably stays below tol.

    With ``a_i = (2/pi) atan(2 sinh(lam / 2^i))`` the tail product beyond
    index ``m`` satisfies ``1 >= prod_{i>m} (1 - a_i) >= 1 - sum_{i>m} a_i``.
    For ``2^i >= lam`` convexity gives ``sinh(lam/2^i) <= sinh(1) lam/2^i``,
    and ``atan(x) <= x``, so ``sum_{i>m} a_i <= (4 sinh(1)/pi) lam 2^-m``.
    The returned index makes that geometric tail smaller than ``tol``.
    """
    if tol <= 0.0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    if lam == 0.0:
        return 1
    m = max(1, math.ceil(math.log2(max(lam, 1.0))))
    bound = 4.0 * math.sinh(1.0) / math.pi * lam
    while bound * 2.0 ** -m >= tol:
        m += 1
    return m


def nielsen_k_infinity(lam: float, tol: float = 1e-12, *,
                       alt_parsing: bool = False,
                       terms: int | None = None) -> float:
    """Length-contraction factor of the infinite Nielsen extension.

    Evaluates ``prod_{i>=1} (1 - (2/pi) atan(2 sinh(lam / 2^i)))`` truncated
    at :func:`nielsen_truncation_index`, whose tail bound keeps the result
    within ``tol`` of the full product.  Every factor lies in ``(0, 1]``
    because ``atan < pi/2``, so the product is well defined for all
    ``lam >= 0`` and equals 1 at ``lam = 0``.

    ``alt_parsing`` switches the factor argument to ``(2 sinh lam) / 2^i``,
    the other reading of the product; the default argument grouping is
    ``2 sinh(lam / 2^i)``.  ``terms`` overrides the truncation index.
    """
    if lam < 0.0 or not math.isfinite(lam):
        raise DomainError(f"boundary length must be nonnegative, got {lam!r}")
    if lam == 0.0 and not alt_parsing:
        return 1.0
    m = terms if terms is not None else nielsen_truncation_index(lam, tol)
    product = 1.0
    for i in range(1, m + 1):
        f = _nielsen_factor(lam, i, alt_parsing)
        assert f > 0.0, "factors stay positive since atan < pi/2"
        product *= f
    return product


def halpern_bracket(l_x: float, lam: float, tol: float = 1e-12) -> Interval:
    """Open bracket ``(k_inf * l, l)`` for the geodesic length on the
    infinite Nielsen extension of a surface with boundary lengths at most
    ``lam``; degenerate at ``lam = 0``.  Boundary-parallel classes collapse
    to length 0 on the extension and are not covered by this bracket.
    """
    if not (l_x > 0.0):
        raise DomainError(f"length must be positive, got {l_x!r}")
    k = nielsen_k_infinity(lam, tol)
    return Interval(k * l_x, l_x)
