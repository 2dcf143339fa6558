from __future__ import annotations

import logging
from fractions import Fraction as Q

from ...core.errors import ConsistencyError, InputError
from ..polytope import service as polytopes
from ..polytope.models import GroupPolytope
from ..quadrature.exact import barycenter, weighted_volume
from ..quadrature.piecewise import PLFunction, integrate_pl
from ..rootsys import linalg as la
from ..rootsys.models import ConeVerdict, in_shifted_cone
from .models import Convention, Existence, KEVerdict

logger = logging.getLogger(__name__)

_EXISTENCE = {
    ConeVerdict.INTERIOR: Existence.YES,
    ConeVerdict.BOUNDARY: Existence.BOUNDARY,
    ConeVerdict.OUTSIDE: Existence.NO,
}


def linear_functional_L(p: GroupPolytope, u: PLFunction, convention: Convention = Convention.P) -> Q:
    """(1/V) int u pi - u(2 k rho) over k P+, k = 1 or 2 by convention."""

    target = polytopes.scale(p, convention.factor)
    volume = weighted_volume(target.cell, p.rs)
    if volume == 0:
        raise InputError("polytope has zero weighted volume")
    shifted_rho = la.scale(Q(2 * convention.factor), p.rs.rho)
    return integrate_pl(target.cell, u, p.rs) / volume - u(shifted_rho)


def witness(p: GroupPolytope, root_index: int) -> PLFunction:
    return PLFunction.orbit_max(p.rs, p.rs.witness_direction(root_index))


def destabilizer_L(p: GroupPolytope, root_index: int) -> Q:
    """L of the orbit-max witness for one simple root, checked against the barycenter."""

    if root_index not in (0, 1):
        raise InputError(f"root index must be 0 or 1, got {root_index}")
    u = witness(p, root_index)
    value = linear_functional_L(p, u, Convention.P)

    direction = p.rs.witness_direction(root_index)
    bar = barycenter(p.cell, p.rs)
    expected = la.dot(direction, bar) - la.dot(direction, la.scale(Q(2), p.rs.rho))
    if value != expected:
        raise ConsistencyError(
            f"witness identity failed for root {root_index}: integral gives {value}, barycenter gives {expected}"
        )
    return value


def ke_test(p: GroupPolytope) -> KEVerdict:
    rs = p.rs
    bar = barycenter(p.cell, rs)
    bar_2p = la.scale(Q(2), bar)

    verdict = in_shifted_cone(rs, bar, Q(1))
    if in_shifted_cone(rs, bar_2p, Q(2)) is not verdict:
        raise ConsistencyError("criterion disagrees between the P and 2P conventions")

    margins = rs.simple_coordinates(la.sub(bar, la.scale(Q(2), rs.rho)))
    exists = _EXISTENCE[verdict]
    if exists is Existence.YES:
        return KEVerdict(exists=exists, barycenter_P=bar, barycenter_2P=bar_2p, margins=margins)

    violated = 0 if margins[0] <= margins[1] else 1
    value = destabilizer_L(p, violated)
    logger.debug("barycenter %s misses the cone along root %d (L = %s)", la.fmt(bar), violated, value)
    return KEVerdict(
        exists=exists,
        barycenter_P=bar,
        barycenter_2P=bar_2p,
        margins=margins,
        violated_root=violated,
        margin=margins[violated],
        witness=witness(p, violated),
        witness_L=value,
    )
