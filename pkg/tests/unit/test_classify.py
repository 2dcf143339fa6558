from __future__ import annotations

from fractions import Fraction as Q

import numpy as np
import pytest

from momentforge.core.cache import JsonLinesStore
from momentforge.core.config import Settings
from momentforge.core.errors import DomainError, GuardExceededError, InputError
from momentforge.domain.classify import golden
from momentforge.domain.classify.enumeration import (
    brute_force,
    candidate_lines,
    classify_polytope,
    enumerate_polytopes,
)
from momentforge.domain.classify.models import EnumerationResult, SearchParams
from momentforge.domain.classify.repository import EnumerationRepository
from momentforge.domain.classify.service import ClassificationService
from momentforge.domain.classify.theorem import (
    LARGE_P0_BOUND,
    TARGET_VOLUMES,
    barc_cell_vertices,
    barc_formula,
    barc_rational_term,
    max_symmetric_p0,
    q_admissible,
    symmetric_barx_bound,
    verify_thm13,
    vol_bound,
)
from momentforge.domain.criterion.models import Existence
from momentforge.domain.polytope import service as polytopes
from momentforge.domain.quadrature.exact import integrate_polygon
from momentforge.domain.rootsys.models import weight_poly
from momentforge.domain.rootsys.polynomial import Polynomial2

EXCEPTIONAL = {
    Q(941192, 5625),
    Q(177064, 1875),
    Q(1771561, 23040),
    Q(383478671, 5000940),
    Q(567779, 7680),
    Q(92167583, 1250235),
}


def test_candidate_lines():
    assert set(candidate_lines(1)) == {(1, 1), (1, 0), (1, -1)}
    assert set(candidate_lines(2)) == {(1, 1), (1, 0), (1, -1), (2, 1), (2, -1)}
    assert {(5, 3), (5, -3), (4, 3), (2, 1)} <= set(candidate_lines(5))
    with pytest.raises(InputError):
        candidate_lines(0)


def test_qfano_table_reproduced():
    result = enumerate_polytopes(2)

    assert len(result) == 12
    assert golden.compare(result, golden.QFANO_TABLE) == []
    assert sorted(e.volume for e in result.entries if e.ke is Existence.YES) == [Q(81, 2), Q(648, 5)]


def test_gorenstein_table_reproduced():
    result = enumerate_polytopes(8, lattice_only=True)

    assert len(result) == 6
    assert golden.compare(result, golden.GORENSTEIN_TABLE) == []
    assert all(entry.gorenstein for entry in result.entries)


def test_walk_matches_brute_force():
    walked = enumerate_polytopes(2)
    brute = brute_force(2)

    assert {polytopes.canonical_key(e.polytope) for e in walked.entries} == {
        polytopes.canonical_key(e.polytope) for e in brute.entries
    }


def test_entries_are_sorted_and_fine():
    result = enumerate_polytopes(3)

    keys = [entry.sort_key() for entry in result.entries]
    assert keys == sorted(keys)
    assert len({polytopes.canonical_key(e.polytope) for e in result.entries}) == len(result)
    for entry in result.entries:
        assert polytopes.is_fine(entry.polytope)
        assert entry.gorenstein == (polytopes.multiple(entry.polytope) == 1)


def test_required_facet_is_present():
    result = enumerate_polytopes(3, required=(3, 2))

    assert len(result) > 0
    for entry in result.entries:
        normals = set(entry.normals) | {(p, -q) for p, q in entry.normals}
        assert (3, 2) in normals
    with pytest.raises(InputError):
        enumerate_polytopes(2, required=(3, 2))


def test_q_admissible():
    assert q_admissible(5) == [1, 2, 3]
    assert q_admissible(3) == [1, 2]
    assert q_admissible(2) == [1]


def test_vol_bound_exact_values():
    assert vol_bound(9, Q(21, 4)) == LARGE_P0_BOUND == Q(224755712, 4100625)
    assert vol_bound(5, 3) == Q(8 * 1771561, 184320)
    assert LARGE_P0_BOUND < min(TARGET_VOLUMES)
    with pytest.raises(DomainError):
        vol_bound(3, 3)


def test_vol_bound_decreasing_along_half_ratio():
    bounds = [vol_bound(p0, Q(p0, 2)) for p0 in range(3, 13)]

    assert all(a > b for a, b in zip(bounds, bounds[1:]))


def _random_strip_cases(count, seed):
    rng = np.random.default_rng(seed)
    cases = []
    while len(cases) < count:
        p0 = int(rng.integers(3, 13))
        q0 = int(rng.choice(q_admissible(p0)))
        # the strip closes at t = (2 p0 + 1) / (p0 - q0)
        t = Q(2 * p0 + 1, p0 - q0) * Q(int(rng.integers(1, 20)), 20)
        cases.append((p0, q0, t))
    return cases


@pytest.mark.parametrize("p0, q0, t", _random_strip_cases(20, seed=3))
def test_barc_formula_matches_integration(so4, p0, q0, t):
    vertices = barc_cell_vertices(p0, q0, t)
    pi = weight_poly(so4).poly
    volume = integrate_polygon(vertices, pi)
    first = integrate_polygon(vertices, (Polynomial2.x() + Polynomial2.y()) * pi)

    assert barc_formula(p0, q0, t) == first / volume


def test_barc_formula_limits():
    p0, q0 = 5, 3
    b = Q(2 * p0 + 1, p0 + q0)

    assert barc_formula(p0, q0, 0) == Q(3, 2) * b
    assert abs(float(barc_rational_term(p0, q0, 10**6))) < 1e-5
    with pytest.raises(DomainError):
        barc_formula(p0, q0, 100)


def test_barc_formula_stays_below_the_strip_limit():
    for p0 in range(3, 13):
        for q0 in q_admissible(p0):
            b = Q(2 * p0 + 1, p0 + q0)
            k = Q(q0 - p0, p0 + q0)
            t = Q(0)
            while b + k * t > 0:
                assert barc_formula(p0, q0, t) <= Q(3, 2) * b
                t += Q(1, 4)


def test_symmetric_bound():
    assert symmetric_barx_bound(1) == Q(18, 7)
    assert symmetric_barx_bound(3) == 2
    assert symmetric_barx_bound(4) == Q(27, 14)
    assert max_symmetric_p0() == 3


def test_bound_only_covers_large_p0():
    report = verify_thm13(9, 12, bound_only=True)

    assert report.passed
    assert all(row.bound_below_target for row in report.rows)
    assert all(bound <= LARGE_P0_BOUND for bound in report.real_bounds.values())


def test_low_p0_is_refused():
    with pytest.raises(InputError):
        verify_thm13(2, 8)
    with pytest.raises(InputError):
        verify_thm13(3, 9)


def test_verdict_fails_on_a_matching_volume(make_polytope):
    match = classify_polytope(make_polytope((1, 0), (1, 1)))
    assert match.volume == Q(1701, 20)

    def fake(p_max, required, lattice):
        return EnumerationResult(SearchParams(p_max, required, lattice), [match])

    report = verify_thm13(3, 3, enumerate_fn=fake)

    assert report.matches == [Q(1701, 20)]
    assert not report.passed


@pytest.mark.slow
def test_volume_gap_for_p0_three_to_eight():
    report = verify_thm13(3, 8)

    assert report.passed
    assert report.matches == []
    assert EXCEPTIONAL <= set(report.exceptional)
    enumerated = {(row.p0, row.q0) for row in report.rows if row.enumerated}
    assert enumerated == {(3, 2), (5, 3)}
    assert report.low_p0_checked and report.low_p0_ok


def test_repository_round_trip(tmp_path):
    repository = EnumerationRepository(JsonLinesStore(tmp_path / "cache.jsonl"))
    result = enumerate_polytopes(2)

    assert repository.get(result.params) is None
    repository.save(result)
    loaded = repository.get(SearchParams(p_max=2))

    assert loaded is not None
    assert loaded.volumes == result.volumes
    assert [e.multiple for e in loaded.entries] == [e.multiple for e in result.entries]
    assert [e.ke for e in loaded.entries] == [e.ke for e in result.entries]
    assert loaded.raw_count == result.raw_count


def test_service_reuses_the_cache(settings):
    service = ClassificationService(settings)
    first = service.classify_qfano(2)

    assert settings.cache_path.exists()
    cached = service.repository.get(SearchParams(p_max=2))
    assert cached is not None and cached.volumes == first.volumes
    assert service.classify_qfano(2).volumes == first.volumes
    assert service.golden_mismatches("qfano", first) == []


def test_service_guards(tmp_path):
    service = ClassificationService(Settings(cache_dir=tmp_path, use_cache=False))

    assert service.repository is None
    with pytest.raises(GuardExceededError):
        service.enumerate(13)
    with pytest.raises(InputError):
        service.classify_qfano(0)
