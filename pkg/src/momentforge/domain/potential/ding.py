"""Reduced Ding functional D = L + F for piecewise-linear potentials on 2P.

F(u) = -log int_{a+} exp(-psi_u) J dx + u(4 rho) is evaluated through the
equivalent form -log int exp(-phi) prod_alpha ((1 - exp(-2 alpha)) / 2)^2 dx
with phi = psi_u - <4 rho, x> + u(4 rho) >= 0, which never overflows.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction as Q
from typing import Iterable, Sequence

import numpy as np

from ...core.errors import IntegrabilityError
from ..criterion.models import Convention
from ..criterion.service import linear_functional_L
from ..polytope import service as polytopes
from ..polytope.clipping import Constraint, clip_all
from ..polytope.models import GroupPolytope
from ..quadrature.piecewise import PLFunction, crease_regions, integrate_pl
from ..rootsys import linalg as la
from ..rootsys.linalg import Vector
from .gauss import integrate_triangles
from .models import DingValue, FhatReport, FValue, ProperRatio

logger = logging.getLogger(__name__)


def _closed(p: GroupPolytope, u: PLFunction) -> PLFunction:
    return u if u.is_w_closed(p.rs) else u.w_closure(p.rs)


def crease_vertices(p: GroupPolytope, u: PLFunction) -> list[Vector]:
    """Vertices of the subdivision of 2P into linearity regions of u."""

    outline = polytopes.full_polygon(polytopes.scale(p, 2))
    found: list[Vector] = []
    for _, region in crease_regions(outline, u):
        for vertex in region:
            if vertex not in found:
                found.append(vertex)
    return found


def legendre_pl_exact(p: GroupPolytope, u: PLFunction, x: Sequence[object]) -> Q:
    point = la.as_vector(x)
    return max(la.dot(point, v) - u(v) for v in crease_vertices(p, u))


def legendre_pl(p: GroupPolytope, u: PLFunction, x: Sequence[float]) -> float:
    """sup over 2P of <x, y> - u(y); attained on the crease subdivision vertices."""

    verts = crease_vertices(p, u)
    xf = (float(x[0]), float(x[1]))
    return max(xf[0] * float(v[0]) + xf[1] * float(v[1]) - float(u(v)) for v in verts)


def _four_rho(p: GroupPolytope) -> Vector:
    return la.scale(Q(4), p.rs.rho)


def _inradius(p: GroupPolytope) -> float:
    """Distance from 4 rho to the boundary of 2P; positive iff F is finite."""

    center = _four_rho(p)
    facets = polytopes.scale(p, 2).facet_orbit()
    slack = [f.value(center) for f in facets]
    if min(slack) <= 0:
        raise IntegrabilityError("4rho is not an interior point of 2P")
    return min(float(s) / math.hypot(float(f.u[0]), float(f.u[1])) for s, f in zip(slack, facets))


def _tail_bound(radius: float, inradius: float, growth: float, roots: int) -> float:
    return math.exp(growth) * 4.0**-roots * 2 * math.pi * math.exp(-inradius * radius) * (
        radius / inradius + 1 / inradius**2
    )


def _truncation_radius(inradius: float, growth: float, roots: int, tail_tol: float) -> int:
    radius = 1
    while _tail_bound(radius, inradius, growth, roots) > tail_tol:
        radius += 1
    return radius


def _region_triangles(
    p: GroupPolytope, pieces: list[tuple[Vector, Q]], radius: int
) -> list[tuple[tuple[Vector, Q], list[np.ndarray]]]:
    r0, r1 = p.rs.dual_chamber_rays()
    spread = math.hypot(float(r1[0] - r0[0]), float(r1[1] - r0[1])) / abs(float(la.cross(r0, r1)))
    reach = Q(math.ceil(radius * spread))
    outline = [(Q(0), Q(0)), la.scale(reach, r0), la.scale(reach, r1)]
    if la.cross(outline[1], outline[2]) < 0:
        outline = [outline[0], outline[2], outline[1]]

    out = []
    for k, (b_k, e_k) in enumerate(pieces):
        constraints = [
            Constraint(la.sub(b_j, b_k), e_k - e_j, j) for j, (b_j, e_j) in enumerate(pieces) if j != k
        ]
        region, _ = clip_all(outline, list(range(3)), constraints)
        if len(region) < 3:
            continue
        pts = np.array([[float(v[0]), float(v[1])] for v in region])
        tris = [np.array([pts[0], pts[i], pts[i + 1]]) for i in range(1, len(pts) - 1)]
        tris = [t for t in tris if abs((t[1] - t[0])[0] * (t[2] - t[0])[1] - (t[1] - t[0])[1] * (t[2] - t[0])[0]) > 0]
        if tris:
            out.append(((b_k, e_k), tris))
    return out


def _log_integral(
    p: GroupPolytope,
    u: PLFunction,
    order: int,
    rtol: float,
    max_depth: int,
    tail_tol: float,
) -> FValue:
    u = _closed(p, u)
    inradius = _inradius(p)
    four_rho = _four_rho(p)
    verts = crease_vertices(p, u)
    base = u(four_rho)

    # phi(x) = max_v <x, v - 4rho> + u(4rho) - u(v)
    pieces: list[tuple[Vector, Q]] = []
    for v in verts:
        piece = (la.sub(v, four_rho), base - u(v))
        if piece not in pieces:
            pieces.append(piece)
    growth = float(max(u(v) for v in verts) - base)
    roots = np.array([[float(a[0]), float(a[1])] for a in p.rs.positive_roots])
    radius = _truncation_radius(inradius, growth, len(roots), tail_tol)
    tail = _tail_bound(radius, inradius, growth, len(roots))

    value = 0.0
    error = 0.0
    leaves = 0
    for (b, e), tris in _region_triangles(p, pieces, radius):
        bx, by, ef = float(b[0]), float(b[1]), float(e)

        def integrand(xs: np.ndarray, ys: np.ndarray, bx=bx, by=by, ef=ef) -> np.ndarray:
            damp = np.exp(-(bx * xs + by * ys + ef))
            pairings = roots[:, 0:1] * xs[None, :] + roots[:, 1:2] * ys[None, :]
            weight = np.prod(((1.0 - np.exp(-2.0 * pairings)) / 2.0) ** 2, axis=0)
            return damp * weight

        result = integrate_triangles(integrand, tris, order=order, rtol=rtol, max_depth=max_depth)
        value += result.value
        error += result.error
        leaves += result.leaves
        if result.max_depth_hit:
            logger.warning("ding quadrature hit the refinement depth limit in one region")

    if value <= 0:
        raise IntegrabilityError("integral of exp(-psi) J vanished numerically")
    logger.debug("F quadrature: radius=%d, leaves=%d, integral=%.12g", radius, leaves, value)
    return FValue(
        value=-math.log(value),
        error=(error + tail) / value,
        radius=float(radius),
        integral=value,
        tail_bound=tail,
        leaves=leaves,
    )


def F_eval(
    p: GroupPolytope,
    u: PLFunction,
    order: int = 10,
    rtol: float = 1e-8,
    max_depth: int = 12,
    tail_tol: float = 1e-14,
) -> FValue:
    """Nonlinear part of the reduced Ding functional in the 2P convention."""

    return _log_integral(p, u, order, rtol, max_depth, tail_tol)


def fhat(p: GroupPolytope, u: PLFunction, **quad: object) -> FValue:
    """-log int exp(-psi_u) J dx, i.e. F(u) - u(4 rho)."""

    value = F_eval(p, u, **quad)  # type: ignore[arg-type]
    shift = float(_closed(p, u)(_four_rho(p)))
    return FValue(
        value=value.value - shift,
        error=value.error,
        radius=value.radius,
        integral=value.integral,
        tail_bound=value.tail_bound,
        leaves=value.leaves,
    )


def ding(p: GroupPolytope, u: PLFunction, **quad: object) -> DingValue:
    closed = _closed(p, u)
    L = linear_functional_L(p, closed, Convention.TWO_P)
    F = F_eval(p, closed, **quad)  # type: ignore[arg-type]
    return DingValue(L=L, F=F.value, F_error=F.error)


def fhat_convexity(p: GroupPolytope, u0: PLFunction, u1: PLFunction, samples: int = 11, **quad: object) -> FhatReport:
    """F-hat along u_t = t u1 + (1 - t) u0 with psi recomputed from each u_t."""

    if samples < 2:
        raise ValueError("need at least two samples along the path")
    u0, u1 = _closed(p, u0), _closed(p, u1)
    ts = [Q(k, samples - 1) for k in range(samples)]
    values: list[float] = []
    errors: list[float] = []
    for t in ts:
        result = fhat(p, u1.combine(u0, t), **quad)
        values.append(result.value)
        errors.append(result.error)
    return FhatReport(ts=ts, values=values, errors=errors)


def properness_ratios(
    p: GroupPolytope, us: Iterable[PLFunction], scales: Sequence[object] = (1, 2, 4), **quad: object
) -> list[ProperRatio]:
    """D(k u) against int_{2P+} k u pi for normalized W-invariant u."""

    cell = polytopes.scale(p, 2).cell
    ratios: list[ProperRatio] = []
    for u in us:
        closed = _closed(p, u)
        base = integrate_pl(cell, closed, p.rs)
        for k in scales:
            factor = Q(k)  # type: ignore[arg-type]
            if base * factor < 1:
                continue
            value = ding(p, closed.scaled(factor), **quad)
            ratios.append(ProperRatio(k=factor, integral=base * factor, ding=value.D))
    return ratios
