"""Volume-gap verification: no Q-Fano SO4 polytope with p0 >= 3 shares a
volume with the two smooth non-KE Gorenstein cases."""

from __future__ import annotations

import logging
from fractions import Fraction as Q
from math import gcd
from typing import Callable, Optional

from ...core.errors import DomainError, InputError
from ..criterion.models import Existence
from .enumeration import enumerate_polytopes
from .models import EnumerationResult, Line, VolumeGapReport, VolumeGapRow

logger = logging.getLogger(__name__)

# volumes of {(1,0),(1,1)} and {(2,1),(1,0),(1,1)}
TARGET_VOLUMES: tuple[Q, Q] = (Q(1701, 20), Q(10751, 180))
LARGE_P0_BOUND = Q(224755712, 4100625)

Enumerator = Callable[[int, Optional[Line], bool], EnumerationResult]


def vol_bound(p0: int, q0: object) -> Q:
    """Weighted volume of the chamber triangle cut by l_{p0,q0} >= 0."""

    q = Q(q0)  # type: ignore[arg-type]
    if not 0 < q < p0:
        raise DomainError(f"vol_bound needs 0 < q0 < p0, got p0={p0}, q0={q}")
    return 8 * Q(1 + 2 * p0) ** 6 / (45 * (p0 * p0 - q * q) ** 3)


def q_upper(p0: int) -> Q:
    return Q(p0, 2) + Q(3, 4)


def q_admissible(p0: int) -> list[int]:
    return [q for q in range(1, p0) if gcd(p0, q) == 1 and q < q_upper(p0)]


def _kb(p0: int, q0: int) -> tuple[Q, Q]:
    k = Q(q0 - p0, p0 + q0)
    b = Q(2 * p0 + 1, p0 + q0)
    return k, b


def barc_rational_term(p0: int, q0: int, t: object) -> Q:
    k, b = _kb(p0, q0)
    t = Q(t)  # type: ignore[arg-type]
    numerator = 3 * b * b * (10 * b * b + 10 * b * k * t + 3 * k * k * t * t)
    denominator = 20 * b**3 + 45 * b * b * k * t + 36 * b * k * k * t * t + 10 * k**3 * t**3
    if denominator == 0:
        raise DomainError("rational term has a vanishing denominator")
    return numerator / denominator


def barc_formula(p0: int, q0: int, t: object) -> Q:
    """x + y barycenter of {l_{p0,q0} >= 0, 0 <= x - y <= 2t, y >= -x}.

    At t = 0 this is the limit 3b/2 of the shrinking strip.
    """

    t = Q(t)  # type: ignore[arg-type]
    k, b = _kb(p0, q0)
    if t < 0 or b + k * t <= 0:
        raise DomainError(f"clipped region is degenerate for p0={p0}, q0={q0}, t={t}")
    return Q(3, 35) * (15 * k * t + 16 * b + barc_rational_term(p0, q0, t))


def barc_cell_vertices(p0: int, q0: int, t: object) -> list[tuple[Q, Q]]:
    """Counterclockwise vertices of the clipped region, for cross-checks."""

    t = Q(t)  # type: ignore[arg-type]
    k, b = _kb(p0, q0)
    s = b + k * t
    return [(Q(0), Q(0)), (t, -t), (t + s, s - t), (b, b)]


def symmetric_barx_bound(p0: int) -> Q:
    if p0 < 1:
        raise InputError("p0 must be positive")
    return Q(6, 7) * (2 + Q(1, p0))


def max_symmetric_p0() -> int:
    """Largest p0 whose symmetric barycenter bound still reaches 2."""

    p0 = 1
    while symmetric_barx_bound(p0 + 1) >= 2:
        p0 += 1
    return p0


def verify_thm13(
    p0_min: int,
    p0_max: int,
    bound_only: bool = False,
    enumerate_fn: Optional[Enumerator] = None,
    full_p0_max: int = 8,
    bound_p0_max: int = 12,
) -> VolumeGapReport:
    if p0_min < 3:
        raise InputError("the volume-gap argument starts at p0 = 3")
    if p0_max < p0_min:
        raise InputError("p0_max must not be below p0_min")
    limit = bound_p0_max if bound_only else full_p0_max
    if p0_max > limit:
        raise InputError(f"p0_max={p0_max} exceeds the guard {limit} for this mode")

    run = enumerate_fn or (lambda p_max, required, lattice: enumerate_polytopes(p_max, required, lattice))
    smaller_target = min(TARGET_VOLUMES)
    report = VolumeGapReport(p0_min=p0_min, p0_max=p0_max, bound_only=bound_only, targets=TARGET_VOLUMES)

    for p0 in range(p0_min, p0_max + 1):
        real_q = q_upper(p0)
        if real_q < p0:
            report.real_bounds[p0] = vol_bound(p0, real_q)
        for q0 in q_admissible(p0):
            bound = vol_bound(p0, q0)
            below = bound < smaller_target
            if below or bound_only:
                report.rows.append(VolumeGapRow(p0=p0, q0=q0, bound=bound, bound_below_target=below))
                continue
            result = run(p0, (p0, q0), False)
            volumes = tuple(result.volumes)
            report.rows.append(
                VolumeGapRow(
                    p0=p0,
                    q0=q0,
                    bound=bound,
                    bound_below_target=False,
                    enumerated=True,
                    volumes=volumes,
                    exceptional=tuple(v for v in volumes if v >= smaller_target),
                    matches=tuple(v for v in volumes if v in TARGET_VOLUMES),
                )
            )
            logger.info("p0=%d q0=%d: %d polytopes enumerated", p0, q0, len(volumes))

    if not bound_only:
        low = run(2, None, False)
        report.low_p0_checked = True
        report.low_p0_target_entries = [e for e in low.entries if e.volume in TARGET_VOLUMES]
        for entry in report.low_p0_target_entries:
            if entry.ke is Existence.YES:
                logger.warning("target volume %s admits KE at p0=%d", entry.volume, entry.p0)
    return report
