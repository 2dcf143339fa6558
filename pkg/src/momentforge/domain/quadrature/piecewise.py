from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

import numpy as np

from ..polytope.clipping import Constraint, clip_all
from ..polytope.models import ChamberCell
from ..rootsys import linalg as la
from ..rootsys.linalg import Vector
from ..rootsys.models import RootSystem, weight_poly
from ..rootsys.polynomial import Polynomial2
from .exact import integrate_polygon

Piece = tuple[Vector, Q]


@dataclass(frozen=True)
class PLFunction:
    """Convex piecewise-linear function y -> max_k (<a_k, y> + c_k)."""

    pieces: tuple[Piece, ...]
    winvariant: bool = False

    def __post_init__(self) -> None:
        unique: list[Piece] = []
        for a, c in self.pieces:
            piece = (la.as_vector(a), Q(c))
            if piece not in unique:
                unique.append(piece)
        if not unique:
            raise ValueError("a piecewise-linear function needs at least one piece")
        object.__setattr__(self, "pieces", tuple(unique))

    @classmethod
    def from_pieces(cls, pieces: Iterable[tuple[Sequence[object], object]], winvariant: bool = False) -> "PLFunction":
        return cls(tuple((la.as_vector(a), Q(c)) for a, c in pieces), winvariant)  # type: ignore[arg-type]

    @classmethod
    def zero(cls) -> "PLFunction":
        return cls((((Q(0), Q(0)), Q(0)),), winvariant=True)

    @classmethod
    def orbit_max(cls, rs: RootSystem, a: Sequence[object], c: object = 0) -> "PLFunction":
        """max over w of <w a, y> + c, e.g. |alpha(y)| for a root alpha."""

        base = la.as_vector(a)
        pieces = tuple((rs.act_dual(w, base), Q(c)) for w in rs.weyl)  # type: ignore[arg-type]
        return cls(pieces, winvariant=True)

    def w_closure(self, rs: RootSystem) -> "PLFunction":
        pieces = tuple((rs.act_dual(w, a), c) for a, c in self.pieces for w in rs.weyl)
        return PLFunction(pieces, winvariant=True)

    def is_w_closed(self, rs: RootSystem) -> bool:
        current = set(self.pieces)
        return all((rs.act_dual(w, a), c) in current for a, c in self.pieces for w in rs.weyl)

    def __call__(self, y: Sequence[object]) -> Q:
        point = la.as_vector(y)
        return max(la.dot(a, point) + c for a, c in self.pieces)

    def evaluate(self, y: Sequence[object]) -> Q:
        return self(y)

    def evaluate_array(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        values = [float(a[0]) * xs + float(a[1]) * ys + float(c) for a, c in self.pieces]
        return np.max(np.stack(values), axis=0)

    def shift(self, c: object) -> "PLFunction":
        delta = Q(c)  # type: ignore[arg-type]
        return PLFunction(tuple((a, k + delta) for a, k in self.pieces), self.winvariant)

    def scaled(self, k: object) -> "PLFunction":
        factor = Q(k)  # type: ignore[arg-type]
        if factor < 0:
            raise ValueError("scaling by a negative factor breaks convexity")
        return PLFunction(tuple((la.scale(factor, a), factor * c) for a, c in self.pieces), self.winvariant)

    def combine(self, other: "PLFunction", t: object) -> "PLFunction":
        """Pointwise t*self + (1 - t)*other as a single max of affine pieces."""

        weight = Q(t)  # type: ignore[arg-type]
        rest = 1 - weight
        if weight == 1:
            return self
        if weight == 0:
            return other
        pieces = tuple(
            (la.add(la.scale(weight, a), la.scale(rest, b)), weight * c + rest * d)
            for a, c in self.pieces
            for b, d in other.pieces
        )
        return PLFunction(pieces, self.winvariant and other.winvariant)


def crease_regions(vertices: Sequence[Vector], u: PLFunction) -> list[tuple[int, list[Vector]]]:
    """Split a convex polygon into the linearity regions of ``u``.

    Returns (piece index, region vertices) for every region of positive area.
    """

    regions: list[tuple[int, list[Vector]]] = []
    base_labels = list(range(len(vertices)))
    for k, (a_k, c_k) in enumerate(u.pieces):
        constraints = [
            Constraint(la.sub(a_j, a_k), c_k - c_j, ("crease", k, j))
            for j, (a_j, c_j) in enumerate(u.pieces)
            if j != k
        ]
        region, _ = clip_all(list(vertices), base_labels, constraints)
        if len(region) < 3:
            continue
        area = sum((la.cross(region[i], region[(i + 1) % len(region)]) for i in range(len(region))), Q(0))
        if area != 0:
            regions.append((k, region))
    return regions


def integrate_pl(cell: ChamberCell, u: PLFunction, rs: RootSystem) -> Q:
    """Exact integral of u * pi over the cell."""

    pi = weight_poly(rs).poly
    total = Q(0)
    for k, region in crease_regions(cell.vertices, u):
        a, c = u.pieces[k]
        total += integrate_polygon(region, Polynomial2.linear(a[0], a[1], c) * pi)
    return total
