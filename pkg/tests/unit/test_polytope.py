from __future__ import annotations

from fractions import Fraction as Q

import pytest

from momentforge.core.errors import InputError, RedundantFacetError, UnboundedPolytopeError
from momentforge.domain.polytope import service as polytopes
from momentforge.domain.polytope.clipping import Constraint, clip
from momentforge.domain.rootsys import linalg as la


def _points(*pairs):
    return {la.vec(x, y) for x, y in pairs}


def test_single_facet_cell(make_polytope):
    p = make_polytope((1, 0))

    assert set(p.cell.vertices) == _points((0, 0), (3, -3), (3, 3))
    assert p.chamber_facets[0].lam == 3
    assert p.fano_normalized
    assert set(polytopes.p_vertices(p)) == _points((3, -3), (3, 3))
    assert set(polytopes.full_polygon(p)) == _points((3, 3), (3, -3), (-3, 3), (-3, -3))


def test_orthogonal_wall_point_is_not_a_vertex(make_polytope):
    p = make_polytope((2, 1), (1, 1))

    assert set(p.cell.vertices) == _points((0, 0), (5, -5), (2, 1), (Q(3, 2), Q(3, 2)))
    assert set(polytopes.p_vertices(p)) == _points((5, -5), (2, 1))
    assert polytopes.multiple(p) == 1
    assert polytopes.p_zero(p) == 2
    assert polytopes.is_fine(p)


def test_multiple_of_non_lattice_polytope(make_polytope):
    assert polytopes.multiple(make_polytope((2, 1))) == 3
    assert polytopes.multiple(make_polytope((2, 1), (1, -1), (1, 1))) == 3
    assert polytopes.multiple(make_polytope((2, 1), (2, -1), (1, 1), (1, -1))) == 2


def test_explicit_constant_is_not_fano(so4):
    p = polytopes.from_chamber_facets(so4, [((1, 0), "2")])

    assert not p.fano_normalized
    assert set(p.cell.vertices) == _points((0, 0), (2, -2), (2, 2))


def test_scale_doubles_vertices(make_polytope):
    p = make_polytope((2, 1), (1, 1))
    doubled = polytopes.scale(p, 2)

    assert set(doubled.cell.vertices) == {la.scale(Q(2), v) for v in p.cell.vertices}
    assert [f.lam for f in doubled.chamber_facets] == [10, 6]


@pytest.mark.parametrize(
    "facets, message",
    [
        ([((2, 4), "fano")], "non-primitive normal"),
        ([((1, 2), "fano")], "non-dominant normal"),
        ([((1, 0), "-1")], "must be positive"),
        ([((1, 0), "abc")], "invalid facet constant"),
    ],
)
def test_invalid_facets_are_rejected(so4, facets, message):
    with pytest.raises(InputError, match=message):
        polytopes.from_chamber_facets(so4, facets)


def test_unbounded_polytope(so4):
    with pytest.raises(UnboundedPolytopeError):
        polytopes.from_chamber_facets(so4, [((1, 1), "fano")])


def test_redundant_facet(so4):
    with pytest.raises(RedundantFacetError) as excinfo:
        polytopes.from_chamber_facets(so4, [((1, 0), "fano"), ((2, 1), "100")])

    assert excinfo.value.index == 1
    assert str(excinfo.value) == "redundant facet 1"


def test_canonical_form_uses_the_diagram_mirror(make_polytope):
    mirrored = make_polytope((2, -1))
    original = make_polytope((2, 1))

    assert polytopes.canonical_key(mirrored) == polytopes.canonical_key(original)
    assert polytopes.canonical_form(mirrored).normals == ((2, 1),)


def test_facet_orbit_and_containment(make_polytope):
    p = make_polytope((2, 1))

    normals = {f.normal_ints() for f in p.facet_orbit()}
    assert normals == {(2, 1), (1, 2), (-1, -2), (-2, -1)}
    assert p.contains(la.vec(0, 0), strict=True)
    assert not p.contains(la.vec(3, 0))


def test_other_root_systems_build(make_polytope):
    from momentforge.domain.rootsys.models import preset

    b2 = preset("B2")
    p = make_polytope((1, 0), rs=b2)

    assert p.rs.name == "B2"
    assert len(p.cell.vertices) >= 3


def test_clip_labels_new_edge():
    square = [(Q(0), Q(0)), (Q(2), Q(0)), (Q(2), Q(2)), (Q(0), Q(2))]
    labels = ["bottom", "right", "top", "left"]

    verts, labs = clip(square, labels, Constraint((Q(1), Q(0)), Q(1), "cut"))

    assert set(verts) == {(0, 0), (1, 0), (1, 2), (0, 2)}
    assert "cut" in labs
    assert "right" not in labs


@pytest.mark.parametrize(
    "normals, expected",
    [
        (((2, 1), (1, -1)), ((0, 0), (Q(5, 3), Q(5, 3)), (Q(8, 3), Q(-1, 3)), (Q(3, 2), Q(-3, 2)))),
        (((1, 0), (1, 1)), ((0, 0), (Q(3, 2), Q(3, 2)), (3, 0), (3, -3))),
        (((1, -1), (1, 1)), ((0, 0), (Q(3, 2), Q(3, 2)), (3, 0), (Q(3, 2), Q(-3, 2)))),
    ],
)
def test_positive_part_vertices(make_polytope, normals, expected):
    cell = polytopes.positive_part(make_polytope(*normals))

    assert set(cell.vertices) == _points(*expected)
    assert len(cell.vertices) == len(expected)


@pytest.mark.parametrize("normals", [((2, 1),), ((2, -1), (2, 1)), ((2, 1), (1, -1), (1, 1)), ((1, 0),)])
def test_scaling_by_the_multiple_gives_a_lattice_polytope(make_polytope, normals):
    p = make_polytope(*normals)
    m = polytopes.multiple(p)

    assert polytopes.multiple(polytopes.scale(p, m)) == 1


def test_scaling_round_trip(make_polytope):
    p = make_polytope((2, 1), (1, -1))
    back = polytopes.scale(polytopes.scale(p, 2), Q(1, 2))

    assert polytopes.scale(p, 1) is p
    assert back.chamber_facets == p.chamber_facets
    assert back.cell.vertices == p.cell.vertices
    assert not back.fano_normalized
