from __future__ import annotations

from fractions import Fraction as Q

import pytest

from momentforge.core.errors import InputError
from momentforge.domain.rootsys import linalg as la
from momentforge.domain.rootsys.models import ConeVerdict, PRESET_NAMES, in_shifted_cone, preset, weight_poly
from momentforge.domain.rootsys.polynomial import Polynomial2


@pytest.mark.parametrize(
    "name, order, roots",
    [("A1xA1", 4, 2), ("A2", 6, 3), ("B2", 8, 4), ("G2", 12, 6)],
)
def test_presets_have_expected_sizes(name, order, roots):
    rs = preset(name)

    assert len(rs.weyl) == order
    assert len(rs.positive_roots) == roots
    assert weight_poly(rs).degree == 2 * roots


def test_so4_conventions(so4):
    assert set(so4.positive_roots) == {la.vec(1, -1), la.vec(1, 1)}
    assert so4.rho == la.vec(1, 0)
    assert set(so4.chamber_rays()) == {la.vec(1, 1), la.vec(1, -1)}
    assert so4.chamber_contains(la.vec(3, 1))
    assert not so4.chamber_contains(la.vec(1, 3))


def test_reflections_negate_their_root():
    for name in PRESET_NAMES:
        rs = preset(name)
        for alpha in rs.positive_roots:
            assert la.apply(rs.reflection(alpha), alpha) == la.scale(Q(-1), alpha)


def test_weight_polynomial_for_so4(so4):
    pi = weight_poly(so4).poly

    assert pi.is_homogeneous(4)
    assert pi.coefficient(4, 0) == 1
    assert pi.coefficient(2, 2) == -2
    assert pi.coefficient(0, 4) == 1
    assert pi(Q(3), Q(1)) == 64


def test_weight_polynomial_matches_symbolic_expansion(so4):
    sympy = pytest.importorskip("sympy")
    x, y = sympy.symbols("x y")

    expected = sympy.expand((x - y) ** 2 * (x + y) ** 2)

    assert sympy.expand(weight_poly(so4).poly.to_sympy() - expected) == 0


def test_polynomial_arithmetic():
    x, y = Polynomial2.x(), Polynomial2.y()
    f = (x + y) ** 2 - x * x

    assert f.coefficient(1, 1) == 2
    assert f.coefficient(0, 2) == 1
    assert f.coefficient(2, 0) == 0
    assert f.substitute(y, x) == (x + y) ** 2 - y * y


def test_witness_direction_for_so4_is_the_root(so4):
    assert so4.witness_direction(0) == la.vec(1, -1)
    assert so4.witness_direction(1) == la.vec(1, 1)


def test_shifted_cone_verdicts(so4):
    assert in_shifted_cone(so4, la.vec(Q(18, 7), 0)) is ConeVerdict.INTERIOR
    assert in_shifted_cone(so4, la.vec(2, 0)) is ConeVerdict.BOUNDARY
    assert in_shifted_cone(so4, la.vec(1, 0)) is ConeVerdict.OUTSIDE
    assert in_shifted_cone(so4, la.vec(4, 0), Q(2)) is ConeVerdict.BOUNDARY


def test_unknown_preset_is_rejected():
    with pytest.raises(InputError, match="unknown root system"):
        preset("E8")


def test_coroot_pairing(so4):
    assert so4.coroot_pairing(la.vec(1, -1), la.vec(1, 0)) == 1
    assert so4.coroot_pairing(la.vec(1, 1), la.vec(2, 1)) == 3
    assert so4.coroot_pairing(la.vec(1, -1), la.vec(1, 1)) == 0


@pytest.mark.parametrize(
    "point, verdict",
    [
        ((Q(18, 7), 0), ConeVerdict.INTERIOR),
        ((3, 1), ConeVerdict.BOUNDARY),
        ((2, 1), ConeVerdict.OUTSIDE),
    ],
)
def test_shifted_cone_reference_points(so4, point, verdict):
    assert in_shifted_cone(so4, la.vec(*point)) is verdict


def test_shifted_cone_is_invariant_under_scaling(so4):
    points = [la.vec(Q(i, 2), Q(j, 3)) for i in range(-2, 12) for j in range(-9, 10)]

    for t in (Q(1, 2), Q(2), Q(7, 3)):
        for s in (Q(1), Q(2)):
            for point in points:
                assert in_shifted_cone(so4, la.scale(t, point), t * s) is in_shifted_cone(so4, point, s)


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_weight_polynomial_is_weyl_invariant(name):
    rs = preset(name)
    pi = weight_poly(rs).poly

    for w in rs.weyl:
        moved = pi.substitute(
            Polynomial2.linear(w[0][0], w[0][1]),
            Polynomial2.linear(w[1][0], w[1][1]),
        )
        assert moved == pi
