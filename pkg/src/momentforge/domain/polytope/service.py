from __future__ import annotations

import logging
import math
from fractions import Fraction as Q
from functools import reduce
from typing import Iterable, Optional, Sequence, Union

from ...core.errors import InputError, RedundantFacetError, UnboundedPolytopeError
from ..rootsys import linalg as la
from ..rootsys.linalg import Vector
from ..rootsys.models import RootSystem
from .clipping import Constraint, clip_all
from .models import ChamberCell, FacetEdge, GroupPolytope, HalfPlane, WallEdge

logger = logging.getLogger(__name__)

AUTO_TOKENS = frozenset({"auto", "fano"})

LambdaSpec = Union[Q, int, str, None]
FacetSpec = tuple[Sequence[object], LambdaSpec]


def fano_lambda(rs: RootSystem, u: Vector) -> Q:
    """Anticanonical facet constant 1 + 2 rho(u) for a dominant normal."""

    return 1 + 2 * rs.rho_pairing(u)


def _primitive_normal(raw: Sequence[object]) -> Vector:
    if len(raw) != 2:
        raise InputError(f"facet normal must have two entries, got {list(raw)!r}")
    try:
        u = la.as_vector(raw)
    except (TypeError, ValueError) as exc:
        raise InputError(f"facet normal {list(raw)!r} is not rational") from exc
    if any(c.denominator != 1 for c in u):
        raise InputError(f"non-primitive normal {la.fmt(u)}: entries must be integers")
    if math.gcd(int(u[0]), int(u[1])) != 1:
        raise InputError(f"non-primitive normal {la.fmt(u)}")
    return u


def _resolve_lambda(rs: RootSystem, u: Vector, spec: LambdaSpec) -> Q:
    if spec is None or (isinstance(spec, str) and spec.strip().lower() in AUTO_TOKENS):
        return fano_lambda(rs, u)
    try:
        lam = Q(spec)  # type: ignore[arg-type]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid facet constant {spec!r}") from exc
    if lam <= 0:
        raise InputError(f"facet constant must be positive, got {lam}")
    return lam


def _check_bounded(rs: RootSystem, facets: Sequence[HalfPlane]) -> None:
    """Every direction of the closed chamber must be cut by some facet."""

    r0, r1 = rs.chamber_rays()
    left: list[Q] = []
    right: list[Q] = []
    for facet in facets:
        a, b = la.dot(facet.u, r0), la.dot(facet.u, r1)
        if a > 0 and b > 0:
            return
        # facet cuts the ray (1 - s) r0 + s r1 for s in a half-open interval
        if a > 0:
            left.append(a / (a - b))
        elif b > 0:
            right.append(a / (a - b))
    if left and right and min(right) < max(left):
        return
    raise UnboundedPolytopeError()


def _enclosing_scale(rs: RootSystem, facets: Sequence[HalfPlane]) -> Q:
    r0, r1 = rs.chamber_rays()
    lines: list[tuple[Vector, Q]] = [(f.u, f.lam) for f in facets]
    lines += [(rs.wall_normal(0), Q(0)), (rs.wall_normal(1), Q(0))]
    reach = Q(0)
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            (u, c), (v, d) = lines[i], lines[j]
            if la.cross(u, v) == 0:
                continue
            point = la.solve(((u[0], v[0]), (u[1], v[1])), (c, d))
            a, b = la.solve((r0, r1), point)
            if a >= 0 and b >= 0:
                reach = max(reach, a + b)
    return reach + 1


def _clip_chamber(rs: RootSystem, facets: Sequence[HalfPlane]) -> ChamberCell:
    r0, r1 = rs.chamber_rays()
    scale = _enclosing_scale(rs, facets)
    origin = (Q(0), Q(0))
    far0, far1 = la.scale(scale, r0), la.scale(scale, r1)
    if la.cross(r0, r1) > 0:
        vertices = [origin, far0, far1]
        labels: list[object] = [WallEdge(0), "enclosure", WallEdge(1)]
    else:
        vertices = [origin, far1, far0]
        labels = [WallEdge(1), "enclosure", WallEdge(0)]

    constraints = [Constraint(f.u, f.lam, FacetEdge(i, f)) for i, f in enumerate(facets)]
    verts, labs = clip_all(vertices, labels, constraints)
    if "enclosure" in labs or len(verts) < 3:
        raise UnboundedPolytopeError()

    supported = {lab.index for lab in labs if isinstance(lab, FacetEdge)}
    for i in range(len(facets)):
        if i not in supported:
            raise RedundantFacetError(i)
    return ChamberCell(tuple(verts), tuple(labs))  # type: ignore[arg-type]


def from_chamber_facets(rs: RootSystem, facets: Iterable[FacetSpec]) -> GroupPolytope:
    """Validate chamber facets and build the polytope with its chamber cell."""

    halfplanes: list[HalfPlane] = []
    fano = True
    for raw_u, spec in facets:
        u = _primitive_normal(raw_u)
        if not rs.dual_dominant(u):
            raise InputError(f"non-dominant normal {la.fmt(u)}")
        lam = _resolve_lambda(rs, u, spec)
        fano = fano and lam == fano_lambda(rs, u)
        halfplanes.append(HalfPlane(u, lam))
    if not halfplanes:
        raise UnboundedPolytopeError()

    _check_bounded(rs, halfplanes)
    cell = _clip_chamber(rs, halfplanes)
    logger.debug("built polytope %s with %d cell vertices", [h.normal_ints() for h in halfplanes], len(cell))
    return GroupPolytope(rs=rs, chamber_facets=tuple(halfplanes), fano_normalized=fano, cell=cell)


def positive_part(p: GroupPolytope) -> ChamberCell:
    return p.cell


def scale(p: GroupPolytope, t: object) -> GroupPolytope:
    factor = Q(t)  # type: ignore[arg-type]
    if factor <= 0:
        raise InputError("scale factor must be positive")
    if factor == 1:
        return p
    facets = tuple(f.scaled(factor) for f in p.chamber_facets)
    return GroupPolytope(rs=p.rs, chamber_facets=facets, fano_normalized=False, cell=p.cell.scaled(factor))


def _wall_of(rs: RootSystem, y: Vector) -> Optional[int]:
    for i in range(2):
        if la.dot(rs.wall_normal(i), y) == 0:
            return i
    return None


def p_vertices(p: GroupPolytope) -> list[Vector]:
    """Vertices of the full polytope lying in the closed chamber.

    A wall point whose incident facet is orthogonal to that wall sits in the
    interior of an edge of P and is skipped, as is the origin.
    """

    found: list[Vector] = []
    for index, vertex in enumerate(p.cell.vertices):
        if vertex == (0, 0):
            continue
        wall = _wall_of(p.rs, vertex)
        if wall is not None:
            arriving, leaving = p.cell.incident_labels(index)
            facet = arriving if isinstance(arriving, FacetEdge) else leaving
            if isinstance(facet, FacetEdge) and la.dot(p.rs.simple_roots[wall], facet.facet.u) == 0:
                continue
        found.append(vertex)
    return found


def vertex_orbit(p: GroupPolytope) -> list[Vector]:
    orbit: list[Vector] = []
    for vertex in p_vertices(p):
        for w in p.rs.weyl:
            image = la.apply(w, vertex)
            if image not in orbit:
                orbit.append(image)
    return orbit


def full_polygon(p: GroupPolytope) -> list[Vector]:
    """Counterclockwise vertex cycle of the whole polytope."""

    return sorted(vertex_orbit(p), key=lambda v: math.atan2(float(v[1]), float(v[0])))


def is_fine(p: GroupPolytope) -> bool:
    facets = p.facet_orbit()
    for vertex in full_polygon(p):
        incident = sum(1 for f in facets if f.value(vertex) == 0)
        if incident != p.rs.rank:
            return False
    return True


def multiple(p: GroupPolytope) -> int:
    """Smallest m such that m*P is a lattice polytope."""

    denominators = [c.denominator for v in p_vertices(p) for c in v]
    return reduce(lambda a, b: a * b // math.gcd(a, b), denominators, 1)


def p_zero(p: GroupPolytope) -> int:
    """rho-pairing of the facet cutting the ray through rho."""

    best: Optional[tuple[Q, HalfPlane]] = None
    for facet in p.chamber_facets:
        pairing = p.rs.rho_pairing(facet.u)
        if pairing <= 0:
            continue
        reach = facet.lam / pairing
        if best is None or reach < best[0] or (reach == best[0] and pairing > p.rs.rho_pairing(best[1].u)):
            best = (reach, facet)
    if best is None:
        raise UnboundedPolytopeError()
    return int(p.rs.rho_pairing(best[1].u))


def _sort_key(facet: HalfPlane) -> tuple[Q, Q, Q]:
    return (facet.u[0], -facet.u[1], facet.lam)


def canonical_form(p: GroupPolytope) -> GroupPolytope:
    """Sorted facet set, replaced by its diagram mirror when that sorts lower."""

    own = sorted(p.chamber_facets, key=_sort_key)
    choice = own
    sym = p.rs.diagram_sym
    if sym is not None:
        mirrored = sorted((HalfPlane(p.rs.act_dual(sym, f.u), f.lam) for f in p.chamber_facets), key=_sort_key)
        if [_sort_key(f) for f in mirrored] < [_sort_key(f) for f in own]:
            choice = mirrored
    if tuple(choice) == p.chamber_facets:
        return p
    return from_chamber_facets(p.rs, [(f.u, f.lam) for f in choice])


def canonical_key(p: GroupPolytope) -> tuple[HalfPlane, ...]:
    return canonical_form(p).chamber_facets
