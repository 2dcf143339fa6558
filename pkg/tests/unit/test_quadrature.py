from __future__ import annotations

from fractions import Fraction as Q

import numpy as np
import pytest

from momentforge.core.errors import DegenerateCellError
from momentforge.domain.classify.enumeration import candidate_lines
from momentforge.domain.polytope import service as polytopes
from momentforge.domain.polytope.clipping import Constraint, clip
from momentforge.domain.polytope.models import ChamberCell, WallEdge
from momentforge.domain.quadrature.exact import (
    barycenter,
    integrate_polygon,
    moments,
    simplex_monomial,
    weighted_volume,
)
from momentforge.domain.quadrature.montecarlo import mc_integrate_pl, mc_weighted_volume
from momentforge.domain.quadrature.piecewise import PLFunction, crease_regions, integrate_pl
from momentforge.domain.rootsys.models import weight_poly
from momentforge.domain.rootsys.polynomial import Polynomial2


def test_simplex_monomials():
    assert simplex_monomial(0, 0) == Q(1, 2)
    assert simplex_monomial(1, 0) == Q(1, 6)
    assert simplex_monomial(1, 1) == Q(1, 24)


def test_simplex_monomials_match_symbolic_integration():
    sympy = pytest.importorskip("sympy")
    s, t = sympy.symbols("s t")

    for a, b in [(0, 3), (2, 2), (4, 1)]:
        exact = sympy.integrate(sympy.integrate(s**a * t**b, (t, 0, 1 - s)), (s, 0, 1))
        assert simplex_monomial(a, b) == Q(int(exact.p), int(exact.q))


@pytest.mark.parametrize("a, expected", [(3, Q(648, 5)), (2, Q(16, 90) * 2**6), (Q(5, 2), Q(16, 90) * Q(5, 2) ** 6)])
def test_chamber_triangle_closed_form(so4, a, expected):
    p = polytopes.from_chamber_facets(so4, [((1, 0), a)])

    assert weighted_volume(p.cell, so4) == expected


def test_single_facet_barycenter(make_polytope, so4):
    p = make_polytope((1, 0))

    assert barycenter(p.cell, so4) == (Q(18, 7), Q(0))


def test_moments_are_consistent(make_polytope, so4):
    p = make_polytope((2, 1), (1, 1))
    volume, mx, my = moments(p.cell, so4)

    assert volume == Q(411, 4)
    assert barycenter(p.cell, so4) == (mx / volume, my / volume)


def test_integration_does_not_depend_on_the_fan_apex():
    square = [(Q(0), Q(0)), (Q(2), Q(0)), (Q(2), Q(1)), (Q(0), Q(1))]
    rotated = square[2:] + square[:2]
    f = Polynomial2.x() ** 2 + Polynomial2.y()

    assert integrate_polygon(square, f) == integrate_polygon(rotated, f)
    assert integrate_polygon(square, Polynomial2.constant(1)) == 2


def test_degenerate_cell_has_no_barycenter(so4):
    flat = ChamberCell(
        vertices=((Q(0), Q(0)), (Q(1), Q(1)), (Q(2), Q(2))),
        edge_labels=(WallEdge(0), WallEdge(0), WallEdge(0)),
    )

    with pytest.raises(DegenerateCellError):
        barycenter(flat, so4)


def test_integrate_pl_constant_and_linear(make_polytope, so4):
    p = make_polytope((1, 0))
    one = PLFunction.from_pieces([((0, 0), 1)])
    first = PLFunction.from_pieces([((1, 0), 0)])

    assert integrate_pl(p.cell, PLFunction.zero(), so4) == 0
    assert integrate_pl(p.cell, one, so4) == Q(648, 5)
    assert integrate_pl(p.cell, first, so4) == Q(18, 7) * Q(648, 5)


def test_crease_regions_split_along_the_kink(make_polytope, so4):
    p = make_polytope((1, 0))
    u = PLFunction.from_pieces([((0, 1), 0), ((0, -1), 0)])

    regions = crease_regions(p.cell.vertices, u)

    assert len(regions) == 2
    pi = weight_poly(so4).poly
    volumes = [integrate_polygon(region, pi) for _, region in regions]
    assert volumes == [Q(324, 5), Q(324, 5)]
    total = sum(volumes)
    assert total == Q(648, 5)


def test_pl_combination_and_closure(so4):
    u0 = PLFunction.orbit_max(so4, (1, -1))
    u1 = PLFunction.from_pieces([((1, 1), 0)])
    mixed = u0.combine(u1, Q(1, 2))
    point = (Q(3), Q(1))

    assert mixed(point) == Q(1, 2) * u0(point) + Q(1, 2) * u1(point)
    assert not u1.is_w_closed(so4)
    assert u1.w_closure(so4).is_w_closed(so4)
    assert u0.shift(2)(point) == u0(point) + 2
    with pytest.raises(ValueError):
        u0.scaled(-1)




def _random_fano_polytopes(so4, count, seed):
    rng = np.random.default_rng(seed)
    lines = candidate_lines(3)
    found = []
    while len(found) < count:
        size = int(rng.integers(1, 4))
        picked = rng.choice(len(lines), size=size, replace=False)
        try:
            p = polytopes.from_chamber_facets(so4, [(lines[i], "fano") for i in sorted(picked)])
        except ValueError:
            continue
        if p.normals not in {q.normals for q in found}:
            found.append(p)
    return found


@pytest.mark.slow
def test_monte_carlo_agrees_with_exact_volume(so4):
    for p in _random_fano_polytopes(so4, 5, seed=11):
        exact = float(weighted_volume(p.cell, so4))

        estimate = mc_weighted_volume(p.cell, so4, samples=1_000_000)

        assert estimate.agrees_with(exact, sigmas=3.0), p.normals


@pytest.mark.slow
def test_monte_carlo_agrees_with_exact_pl_integral_across_a_crease(make_polytope, so4):
    p = make_polytope((1, 0))
    u = PLFunction.from_pieces([((1, 0), 0), ((0, 2), -1)])
    pi = weight_poly(so4).poly

    regions = crease_regions(p.cell.vertices, u)
    assert len(regions) == 2
    exact = integrate_pl(p.cell, u, so4)
    by_region = sum(
        integrate_polygon(region, Polynomial2.linear(u.pieces[k][0][0], u.pieces[k][0][1], u.pieces[k][1]) * pi)
        for k, region in regions
    )
    assert exact == by_region

    estimate = mc_integrate_pl(p.cell, u, so4, samples=1_000_000)

    assert estimate.agrees_with(float(exact), sigmas=3.0)


def test_integrals_add_up_over_random_chord_splits(make_polytope, so4):
    rng = np.random.default_rng(5)
    pi = weight_poly(so4).poly
    x_pi = Polynomial2.x() * pi

    for normals in [((1, 0),), ((2, 1), (1, -1)), ((2, 1), (2, -1), (1, 1), (1, -1))]:
        vertices = list(make_polytope(*normals).cell.vertices)
        labels = list(range(len(vertices)))
        for _ in range(4):
            ends = []
            for _ in range(2):
                weights = [Q(int(w)) for w in rng.integers(1, 10, size=len(vertices))]
                total = sum(weights)
                ends.append(tuple(sum(w * v[i] for w, v in zip(weights, vertices)) / total for i in range(2)))
            (ax, ay), (bx, by) = ends
            if (ax, ay) == (bx, by):
                continue
            normal = (by - ay, ax - bx)
            offset = normal[0] * ax + normal[1] * ay
            left, _ = clip(vertices, labels, Constraint(normal, offset, "chord"))
            right, _ = clip(vertices, labels, Constraint((-normal[0], -normal[1]), -offset, "chord"))

            for f in (pi, x_pi):
                assert integrate_polygon(left, f) + integrate_polygon(right, f) == integrate_polygon(vertices, f)
