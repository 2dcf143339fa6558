"""Exact integration of polynomials over convex polygons against pi(y) dy."""

from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache
from math import factorial
from typing import Sequence

from ...core.errors import DegenerateCellError
from ..polytope.models import ChamberCell
from ..rootsys import linalg as la
from ..rootsys.linalg import Vector
from ..rootsys.models import RootSystem, weight_poly
from ..rootsys.polynomial import Polynomial2


@lru_cache(maxsize=None)
def simplex_monomial(a: int, b: int) -> Q:
    """Integral of s^a t^b over the standard triangle s, t >= 0, s + t <= 1."""

    return Q(factorial(a) * factorial(b), factorial(a + b + 2))


def integrate_triangle(a: Vector, b: Vector, c: Vector, f: Polynomial2) -> Q:
    jacobian = abs(la.cross(la.sub(b, a), la.sub(c, a)))
    if jacobian == 0 or not f:
        return Q(0)
    px = Polynomial2.linear(b[0] - a[0], c[0] - a[0], a[0])
    py = Polynomial2.linear(b[1] - a[1], c[1] - a[1], a[1])
    pulled = f.substitute(px, py)
    return jacobian * sum((coeff * simplex_monomial(i, j) for (i, j), coeff in pulled), Q(0))


def integrate_polygon(vertices: Sequence[Vector], f: Polynomial2) -> Q:
    """Fan-triangulate a convex polygon from its first vertex and integrate."""

    if len(vertices) < 3:
        return Q(0)
    apex = vertices[0]
    return sum(
        (integrate_triangle(apex, vertices[i], vertices[i + 1], f) for i in range(1, len(vertices) - 1)),
        Q(0),
    )


def integrate_poly(cell: ChamberCell, f: Polynomial2) -> Q:
    return integrate_polygon(cell.vertices, f)


def moments(cell: ChamberCell, rs: RootSystem) -> tuple[Q, Q, Q]:
    """(int pi, int y1 pi, int y2 pi) over the cell."""

    pi = weight_poly(rs).poly
    return (
        integrate_poly(cell, pi),
        integrate_poly(cell, Polynomial2.x() * pi),
        integrate_poly(cell, Polynomial2.y() * pi),
    )


def weighted_volume(cell: ChamberCell, rs: RootSystem) -> Q:
    return integrate_poly(cell, weight_poly(rs).poly)


def barycenter(cell: ChamberCell, rs: RootSystem) -> Vector:
    volume, mx, my = moments(cell, rs)
    if volume == 0:
        raise DegenerateCellError("cell has zero weighted volume")
    return (mx / volume, my / volume)
