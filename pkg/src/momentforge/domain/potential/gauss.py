"""Adaptive collapsed Gauss-Legendre quadrature on triangles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


@lru_cache(maxsize=None)
def _unit_rule(order: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes (s, t) and weights on the standard triangle via the Duffy collapse."""

    nodes, weights = leggauss(order)
    xi = 0.5 * (nodes + 1.0)
    w = 0.5 * weights
    a, b = np.meshgrid(xi, xi, indexing="ij")
    wa, wb = np.meshgrid(w, w, indexing="ij")
    s = a.ravel()
    t = (b * (1.0 - a)).ravel()
    return s, t, (wa * wb * (1.0 - a)).ravel()


def triangle_rule(f: Integrand, tri: np.ndarray, order: int) -> float:
    s, t, w = _unit_rule(order)
    a, b, c = tri
    e1, e2 = b - a, c - a
    jac = abs(e1[0] * e2[1] - e1[1] * e2[0])
    xs = a[0] + s * e1[0] + t * e2[0]
    ys = a[1] + s * e1[1] + t * e2[1]
    return float(jac * np.dot(w, f(xs, ys)))


def _area(tri: np.ndarray) -> float:
    e1, e2 = tri[1] - tri[0], tri[2] - tri[0]
    return 0.5 * abs(float(e1[0] * e2[1] - e1[1] * e2[0]))


def _split(tri: np.ndarray) -> list[np.ndarray]:
    a, b, c = tri
    ab, bc, ca = (a + b) / 2, (b + c) / 2, (c + a) / 2
    return [np.array([a, ab, ca]), np.array([ab, b, bc]), np.array([ca, bc, c]), np.array([ab, bc, ca])]


@dataclass
class QuadratureResult:
    value: float
    error: float
    leaves: int
    max_depth_hit: bool = False


def integrate_triangles(
    f: Integrand,
    triangles: list[np.ndarray],
    order: int = 10,
    rtol: float = 1e-8,
    max_depth: int = 12,
) -> QuadratureResult:
    """Integrate f over a union of triangles with local dyadic refinement.

    A triangle is accepted when its rule and the sum over its four children
    agree to within its area share of rtol times the coarse total.
    """

    if not triangles:
        return QuadratureResult(0.0, 0.0, 0)
    areas = [_area(t) for t in triangles]
    total_area = sum(areas) or 1.0
    coarse = [triangle_rule(f, t, order) for t in triangles]
    scale = max(abs(sum(coarse)), np.finfo(float).tiny)

    value = 0.0
    error = 0.0
    leaves = 0
    depth_hit = False
    stack = [(t, c, area, 0) for t, c, area in zip(triangles, coarse, areas)]
    while stack:
        tri, estimate, area, depth = stack.pop()
        children = _split(tri)
        parts = [triangle_rule(f, child, order) for child in children]
        refined = sum(parts)
        diff = abs(refined - estimate)
        if diff <= rtol * scale * (area / total_area) or depth >= max_depth:
            depth_hit = depth_hit or (depth >= max_depth and diff > rtol * scale * (area / total_area))
            value += refined
            error += diff
            leaves += 1
            continue
        stack.extend((child, part, area / 4, depth + 1) for child, part in zip(children, parts))
    return QuadratureResult(value=value, error=error, leaves=leaves, max_depth_hit=depth_hit)
