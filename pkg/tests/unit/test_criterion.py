from __future__ import annotations

from fractions import Fraction as Q

import pytest

from momentforge.core.errors import InputError
from momentforge.domain.classify.golden import QFANO_TABLE
from momentforge.domain.criterion.models import Convention, Existence
from momentforge.domain.criterion.service import destabilizer_L, ke_test, linear_functional_L, witness
from momentforge.domain.polytope import service as polytopes
from momentforge.domain.quadrature.exact import barycenter
from momentforge.domain.quadrature.piecewise import PLFunction
from momentforge.domain.rootsys import linalg as la
from momentforge.domain.rootsys.models import ConeVerdict, in_shifted_cone


def test_single_facet_admits_ke(make_polytope):
    verdict = ke_test(make_polytope((1, 0)))

    assert verdict.exists is Existence.YES
    assert verdict.admits_ke
    assert verdict.barycenter_P == (Q(18, 7), Q(0))
    assert verdict.barycenter_2P == (Q(36, 7), Q(0))
    assert verdict.margins == (Q(2, 7), Q(2, 7))
    assert verdict.violated_root is None


def test_failing_polytope_carries_a_destabilizer(make_polytope):
    verdict = ke_test(make_polytope((2, 1), (1, 1)))

    assert verdict.exists is Existence.NO
    assert verdict.violated_root in (0, 1)
    assert verdict.margin is not None and verdict.margin < 0
    assert verdict.witness_L is not None and verdict.witness_L < 0


@pytest.mark.parametrize("row", QFANO_TABLE, ids=lambda row: f"row-{row.label}")
def test_destabilizer_identity_on_reference_polytopes(make_polytope, row):
    p = make_polytope(*row.facets)
    bar = barycenter(p.cell, p.rs)

    for index in (0, 1):
        direction = p.rs.witness_direction(index)
        expected = la.dot(direction, bar) - 2 * la.dot(direction, p.rs.rho)
        assert destabilizer_L(p, index) == expected

    verdict = ke_test(p)
    assert (verdict.exists is Existence.YES) == row.ke


def test_linear_functional_kills_constants(make_polytope):
    p = make_polytope((2, 1), (1, 1))
    constant = PLFunction.from_pieces([((0, 0), 5)])

    assert linear_functional_L(p, constant, Convention.P) == 0
    assert linear_functional_L(p, constant, Convention.TWO_P) == 0


def test_conventions_scale_together(make_polytope):
    p = make_polytope((2, 1), (1, 1))
    u = witness(p, 1)

    # L is degree one in the dilation for a homogeneous u
    assert linear_functional_L(p, u, Convention.TWO_P) == 2 * linear_functional_L(p, u, Convention.P)


def test_root_index_is_checked(make_polytope):
    with pytest.raises(InputError):
        destabilizer_L(make_polytope((1, 0)), 2)


@pytest.mark.parametrize("row", QFANO_TABLE, ids=lambda row: f"row-{row.label}")
def test_verdict_agrees_between_conventions(make_polytope, row):
    p = make_polytope(*row.facets)
    doubled = polytopes.scale(p, 2)
    bar = barycenter(p.cell, p.rs)
    bar_2p = barycenter(doubled.cell, p.rs)

    assert bar_2p == la.scale(Q(2), bar)
    assert in_shifted_cone(p.rs, bar_2p, Q(2)) is in_shifted_cone(p.rs, bar, Q(1))
    verdict = ke_test(p)
    assert verdict.barycenter_2P == bar_2p
    expected = ConeVerdict.INTERIOR if row.ke else ConeVerdict.OUTSIDE
    assert in_shifted_cone(p.rs, bar_2p, Q(2)) is expected
