"""Exact 2x2 rational linear algebra on tuples."""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

Vector = tuple[Q, Q]
Matrix = tuple[tuple[Q, Q], tuple[Q, Q]]

IDENTITY: Matrix = ((Q(1), Q(0)), (Q(0), Q(1)))


def vec(x: object, y: object) -> Vector:
    return (Q(x), Q(y))  # type: ignore[arg-type]


def as_vector(values: Sequence[object]) -> Vector:
    if len(values) != 2:
        raise ValueError(f"expected a 2-vector, got {values!r}")
    return vec(values[0], values[1])


def mat(rows: Iterable[Iterable[object]]) -> Matrix:
    a, b = (tuple(Q(v) for v in row) for row in rows)  # type: ignore[arg-type]
    return ((a[0], a[1]), (b[0], b[1]))


def dot(u: Sequence[Q], v: Sequence[Q]) -> Q:
    return u[0] * v[0] + u[1] * v[1]


def add(u: Vector, v: Vector) -> Vector:
    return (u[0] + v[0], u[1] + v[1])


def sub(u: Vector, v: Vector) -> Vector:
    return (u[0] - v[0], u[1] - v[1])


def scale(t: Q, v: Vector) -> Vector:
    return (t * v[0], t * v[1])


def apply(m: Matrix, v: Vector) -> Vector:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def compose(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def transpose(m: Matrix) -> Matrix:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def det(m: Matrix) -> Q:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def inverse(m: Matrix) -> Matrix:
    d = det(m)
    if d == 0:
        raise ValueError("singular matrix")
    return ((m[1][1] / d, -m[0][1] / d), (-m[1][0] / d, m[0][0] / d))


def solve(columns: tuple[Vector, Vector], target: Vector) -> Vector:
    """Coordinates (s, t) with s*columns[0] + t*columns[1] == target."""

    a, b = columns
    d = a[0] * b[1] - a[1] * b[0]
    if d == 0:
        raise ValueError("dependent columns")
    s = (target[0] * b[1] - target[1] * b[0]) / d
    t = (a[0] * target[1] - a[1] * target[0]) / d
    return (s, t)


def cross(u: Vector, v: Vector) -> Q:
    return u[0] * v[1] - u[1] * v[0]


def fmt(v: Sequence[Q]) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"
