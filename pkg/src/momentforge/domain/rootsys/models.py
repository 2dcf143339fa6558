from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction as Q
from functools import lru_cache, reduce
from math import gcd
from typing import Optional, Sequence

from ...core.errors import InputError
from . import linalg as la
from .linalg import Matrix, Vector
from .polynomial import Polynomial2

logger = logging.getLogger(__name__)


class ConeVerdict(StrEnum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class RootSystem:
    """Rank-2 root datum in explicit coordinates on the weight space.

    ``gram`` is the inner product on the weight space used for reflections,
    Weyl walls and the weight polynomial. Facet normals and points of the
    Cartan subalgebra pair with weights through the plain coordinate dot
    product.
    """

    name: str
    simple_roots: tuple[Vector, Vector]
    positive_roots: tuple[Vector, ...]
    weyl: tuple[Matrix, ...]
    rho: Vector
    gram: Matrix
    diagram_sym: Optional[Matrix] = None

    rank: int = 2

    def inner(self, a: Sequence[Q], b: Sequence[Q]) -> Q:
        ga = la.apply(self.gram, (a[0], a[1]))
        return la.dot(ga, b)

    def wall_normal(self, index: int) -> Vector:
        """Coordinate vector n with n . y == <alpha_index, y>."""
        return la.apply(la.transpose(self.gram), self.simple_roots[index])

    def root_form(self, root: Vector) -> Vector:
        return la.apply(la.transpose(self.gram), root)

    def coroot_pairing(self, root: Vector, y: Vector) -> Q:
        return 2 * self.inner(root, y) / self.inner(root, root)

    def reflection(self, root: Vector) -> Matrix:
        form = self.root_form(root)
        norm = self.inner(root, root)
        return tuple(
            tuple((Q(1) if i == j else Q(0)) - 2 * root[i] * form[j] / norm for j in range(2))
            for i in range(2)
        )  # type: ignore[return-value]

    def chamber_contains(self, y: Vector, strict: bool = False) -> bool:
        values = [la.dot(self.wall_normal(i), y) for i in range(2)]
        if strict:
            return all(v > 0 for v in values)
        return all(v >= 0 for v in values)

    def chamber_rays(self) -> tuple[Vector, Vector]:
        """Extreme rays of the closed positive chamber; ray i lies on wall i."""

        n0, n1 = self.wall_normal(0), self.wall_normal(1)
        # the ray on wall j points into the half-plane of the other wall
        r_on_1 = (n1[1], -n1[0])
        if la.dot(n0, r_on_1) < 0:
            r_on_1 = la.scale(Q(-1), r_on_1)
        r_on_0 = (n0[1], -n0[0])
        if la.dot(n1, r_on_0) < 0:
            r_on_0 = la.scale(Q(-1), r_on_0)
        return (r_on_0, r_on_1)

    def dual_dominant(self, u: Sequence[Q]) -> bool:
        return all(la.dot(alpha, u) >= 0 for alpha in self.simple_roots)

    def dual_chamber_rays(self) -> tuple[Vector, Vector]:
        """Extreme rays of {x : alpha_i . x >= 0}, the positive chamber of the Cartan side."""

        a0, a1 = self.simple_roots
        r_on_0 = (a0[1], -a0[0])
        if la.dot(a1, r_on_0) < 0:
            r_on_0 = la.scale(Q(-1), r_on_0)
        r_on_1 = (a1[1], -a1[0])
        if la.dot(a0, r_on_1) < 0:
            r_on_1 = la.scale(Q(-1), r_on_1)
        return (r_on_0, r_on_1)

    def act_dual(self, w: Matrix, u: Vector) -> Vector:
        """Contragredient action on the Cartan subalgebra (facet normals)."""
        return la.apply(la.transpose(la.inverse(w)), u)

    def normal_orbit(self, u: Vector) -> list[Vector]:
        seen: list[Vector] = []
        for w in self.weyl:
            image = self.act_dual(w, u)
            if image not in seen:
                seen.append(image)
        return seen

    def simple_coordinates(self, v: Vector) -> Vector:
        return la.solve(self.simple_roots, v)

    def rho_pairing(self, u: Sequence[Q]) -> Q:
        return la.dot(self.rho, u)

    def witness_direction(self, index: int) -> Vector:
        """Primitive integral multiple of the index-th fundamental coweight."""

        a, b = self.simple_roots
        target = (Q(1), Q(0)) if index == 0 else (Q(0), Q(1))
        # solve a . w = target[0], b . w = target[1]
        w = la.solve(((a[0], b[0]), (a[1], b[1])), target)
        denominators = reduce(lambda m, n: m * n // gcd(m, n), (c.denominator for c in w), 1)
        integral = [int(c * denominators) for c in w]
        g = gcd(*integral) or 1
        return (Q(integral[0] // g), Q(integral[1] // g))

    def cone_verdict(self, point: Vector, scale: Q = Q(1)) -> ConeVerdict:
        if scale <= 0:
            raise InputError("scale must be positive")
        shifted = la.sub(point, la.scale(2 * scale, self.rho))
        coords = self.simple_coordinates(shifted)
        if all(c > 0 for c in coords):
            return ConeVerdict.INTERIOR
        if all(c >= 0 for c in coords):
            return ConeVerdict.BOUNDARY
        return ConeVerdict.OUTSIDE


def _close_group(generators: Sequence[Matrix], limit: int = 48) -> list[Matrix]:
    elements: list[Matrix] = [la.IDENTITY]
    frontier = [la.IDENTITY]
    while frontier:
        fresh: list[Matrix] = []
        for element in frontier:
            for generator in generators:
                product = la.compose(generator, element)
                if product not in elements:
                    elements.append(product)
                    fresh.append(product)
        if len(elements) > limit:
            raise InputError("reflections do not generate a finite group")
        frontier = fresh
    return elements


def _build(
    name: str,
    simple: tuple[Vector, Vector],
    gram: Matrix,
    diagram_sym: Optional[Matrix] = None,
) -> RootSystem:
    skeleton = RootSystem(
        name=name,
        simple_roots=simple,
        positive_roots=simple,
        weyl=(la.IDENTITY,),
        rho=(Q(0), Q(0)),
        gram=gram,
        diagram_sym=diagram_sym,
    )
    reflections = [skeleton.reflection(alpha) for alpha in simple]
    weyl = _close_group(reflections)

    positive: list[Vector] = []
    for w in weyl:
        for alpha in simple:
            image = la.apply(w, alpha)
            coords = la.solve(simple, image)
            if all(c >= 0 for c in coords) and image not in positive:
                positive.append(image)

    def _order(root: Vector) -> tuple[Q, Q]:
        s, t = la.solve(simple, root)
        return (s + t, -s)

    positive.sort(key=_order)
    rho = la.scale(Q(1, 2), reduce(la.add, positive, (Q(0), Q(0))))
    rs = RootSystem(
        name=name,
        simple_roots=simple,
        positive_roots=tuple(positive),
        weyl=tuple(weyl),
        rho=rho,
        gram=gram,
        diagram_sym=diagram_sym,
    )
    validate(rs)
    logger.debug("built root system %s: |W|=%d, |Phi+|=%d", name, len(weyl), len(positive))
    return rs


def validate(rs: RootSystem) -> None:
    """Check the group, root and rho invariants; raise InputError on failure."""

    if la.IDENTITY not in rs.weyl:
        raise InputError(f"{rs.name}: Weyl group lacks the identity")
    for a in rs.weyl:
        for b in rs.weyl:
            if la.compose(a, b) not in rs.weyl:
                raise InputError(f"{rs.name}: Weyl group not closed under composition")
    signed = set(rs.positive_roots) | {la.scale(Q(-1), r) for r in rs.positive_roots}
    for w in rs.weyl:
        images = {la.apply(w, r) for r in rs.positive_roots}
        if not images <= signed:
            raise InputError(f"{rs.name}: Weyl element does not permute the roots")
    half_sum = la.scale(Q(1, 2), reduce(la.add, rs.positive_roots, (Q(0), Q(0))))
    if half_sum != rs.rho:
        raise InputError(f"{rs.name}: rho is not the half-sum of positive roots")


_IDENTITY_GRAM = la.mat([[1, 0], [0, 1]])

_PRESETS = {
    "A1xA1": lambda: _build(
        "A1xA1",
        (la.vec(1, -1), la.vec(1, 1)),
        _IDENTITY_GRAM,
        diagram_sym=la.mat([[1, 0], [0, -1]]),
    ),
    # weight-lattice coordinates (fundamental weights), Killing-form Gram matrix
    "A2": lambda: _build(
        "A2",
        (la.vec(2, -1), la.vec(-1, 2)),
        la.mat([[Q(2, 3), Q(1, 3)], [Q(1, 3), Q(2, 3)]]),
        diagram_sym=la.mat([[0, 1], [1, 0]]),
    ),
    "B2": lambda: _build("B2", (la.vec(1, -1), la.vec(0, 1)), _IDENTITY_GRAM),
    "G2": lambda: _build("G2", (la.vec(2, -1), la.vec(-3, 2)), la.mat([[2, 3], [3, 6]])),
}

PRESET_NAMES = tuple(_PRESETS)


@lru_cache(maxsize=None)
def preset(name: str) -> RootSystem:
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise InputError(f"unknown root system {name!r}; expected one of {', '.join(PRESET_NAMES)}") from None
    return builder()


def in_shifted_cone(rs: RootSystem, point: Vector, scale: Q = Q(1)) -> ConeVerdict:
    """Locate ``point`` relative to scale*2rho + Xi (Xi the open cone of positive roots)."""

    return rs.cone_verdict(point, Q(scale))


@dataclass(frozen=True)
class WeightPolynomial:
    """The product of squared positive roots, pi(y)."""

    poly: Polynomial2
    root_system: str

    def __call__(self, x, y):
        return self.poly(x, y)

    @property
    def degree(self) -> int:
        return self.poly.degree


@lru_cache(maxsize=None)
def weight_poly(rs: RootSystem) -> WeightPolynomial:
    poly = Polynomial2.constant(1)
    for alpha in rs.positive_roots:
        form = rs.root_form(alpha)
        poly = poly * Polynomial2.linear(form[0], form[1]) ** 2
    return WeightPolynomial(poly=poly, root_system=rs.name)
