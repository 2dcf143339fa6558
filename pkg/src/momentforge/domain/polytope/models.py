from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterator, Union

from ..rootsys import linalg as la
from ..rootsys.linalg import Vector
from ..rootsys.models import RootSystem


@dataclass(frozen=True)
class HalfPlane:
    """Facet inequality l(y) = lam - <u, y> >= 0."""

    u: Vector
    lam: Q

    @property
    def p(self) -> Q:
        return self.u[0]

    @property
    def q(self) -> Q:
        return self.u[1]

    def value(self, y: Vector) -> Q:
        return self.lam - la.dot(self.u, y)

    def scaled(self, t: Q) -> "HalfPlane":
        return HalfPlane(self.u, self.lam * t)

    def normal_ints(self) -> tuple[int, int]:
        return (int(self.u[0]), int(self.u[1]))

    def __str__(self) -> str:
        return f"{self.lam} - ({self.u[0]}*x + {self.u[1]}*y) >= 0"


@dataclass(frozen=True)
class WallEdge:
    index: int

    kind = "wall"


@dataclass(frozen=True)
class FacetEdge:
    index: int
    facet: HalfPlane

    kind = "facet"


EdgeLabel = Union[WallEdge, FacetEdge]


@dataclass(frozen=True)
class ChamberCell:
    """Counterclockwise vertex cycle of P+ starting at the origin.

    ``edge_labels[i]`` describes the edge from ``vertices[i]`` to
    ``vertices[i + 1]`` (cyclically).
    """

    vertices: tuple[Vector, ...]
    edge_labels: tuple[EdgeLabel, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[tuple[Vector, Vector, EdgeLabel]]:
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n], self.edge_labels[i]

    def area(self) -> Q:
        twice = sum((la.cross(a, b) for a, b, _ in self.edges()), Q(0))
        return twice / 2

    def scaled(self, t: Q) -> "ChamberCell":
        t = Q(t)
        labels = tuple(
            FacetEdge(label.index, label.facet.scaled(t)) if isinstance(label, FacetEdge) else label
            for label in self.edge_labels
        )
        return ChamberCell(tuple(la.scale(t, v) for v in self.vertices), labels)

    def incident_labels(self, index: int) -> tuple[EdgeLabel, EdgeLabel]:
        """Labels of the edges arriving at and leaving ``vertices[index]``."""

        n = len(self.vertices)
        return self.edge_labels[(index - 1) % n], self.edge_labels[index]

    def bounding_box(self) -> tuple[Vector, Vector]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys)), (max(xs), max(ys))


@dataclass(frozen=True)
class GroupPolytope:
    """W-invariant polytope given by its chamber facets.

    Instances are built by :func:`polytope.service.from_chamber_facets`,
    which validates the facets and stores the clipped chamber cell.
    """

    rs: RootSystem
    chamber_facets: tuple[HalfPlane, ...]
    fano_normalized: bool
    cell: ChamberCell = field(compare=False, repr=False)

    @property
    def normals(self) -> tuple[tuple[int, int], ...]:
        return tuple(f.normal_ints() for f in self.chamber_facets)

    def facet_orbit(self) -> list[HalfPlane]:
        """All facets of the full polytope, the W-orbit of the chamber facets."""

        seen: list[HalfPlane] = []
        for facet in self.chamber_facets:
            for image in self.rs.normal_orbit(facet.u):
                candidate = HalfPlane(image, facet.lam)
                if candidate not in seen:
                    seen.append(candidate)
        return seen

    def contains(self, y: Vector, strict: bool = False) -> bool:
        values = [f.value(y) for f in self.facet_orbit()]
        if strict:
            return all(v > 0 for v in values)
        return all(v >= 0 for v in values)
