"""Labeled Sutherland-Hodgman clipping of convex polygons by half-planes.

Works on any ordered field: Fractions give exact cells, floats are accepted
for quick plotting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Sequence

Point = tuple[Any, Any]


@dataclass(frozen=True)
class Constraint:
    """c - <a, y> >= 0, with the label carried by the edge it creates."""

    a: Point
    c: Any
    label: Hashable

    def value(self, y: Point) -> Any:
        return self.c - (self.a[0] * y[0] + self.a[1] * y[1])


def clip(
    vertices: Sequence[Point], labels: Sequence[Hashable], constraint: Constraint
) -> tuple[list[Point], list[Hashable]]:
    """Intersect a convex labeled polygon with one half-plane.

    ``labels[i]`` is the label of the edge from ``vertices[i]`` to
    ``vertices[i + 1]``. New edges lying on the clipping line receive
    ``constraint.label``.
    """

    out: list[tuple[Point, Hashable]] = []
    n = len(vertices)
    for i in range(n):
        cur, nxt, label = vertices[i], vertices[(i + 1) % n], labels[i]
        fc, fn = constraint.value(cur), constraint.value(nxt)
        if fc >= 0:
            out.append((cur, label))
            if fn < 0:
                if fc > 0:
                    out.append((_crossing(cur, nxt, fc, fn), constraint.label))
                else:
                    out[-1] = (cur, constraint.label)
        elif fn > 0:
            out.append((_crossing(cur, nxt, fc, fn), label))
    return _dedupe(out)


def clip_all(
    vertices: Sequence[Point], labels: Sequence[Hashable], constraints: Sequence[Constraint]
) -> tuple[list[Point], list[Hashable]]:
    verts, labs = list(vertices), list(labels)
    for constraint in constraints:
        if len(verts) < 3:
            break
        verts, labs = clip(verts, labs, constraint)
    return verts, labs


def _crossing(cur: Point, nxt: Point, fc: Any, fn: Any) -> Point:
    t = fc / (fc - fn)
    return (cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1]))


def _dedupe(pairs: list[tuple[Point, Hashable]]) -> tuple[list[Point], list[Hashable]]:
    # a zero-length edge v_i -> v_{i+1} is dropped together with its label
    kept: list[tuple[Point, Hashable]] = []
    n = len(pairs)
    for i, (point, label) in enumerate(pairs):
        if n > 1 and point == pairs[(i + 1) % n][0]:
            continue
        kept.append((point, label))
    return [p for p, _ in kept], [lab for _, lab in kept]
