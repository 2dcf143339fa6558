from __future__ import annotations

import pytest

from momentforge.core.config import Settings
from momentforge.domain.polytope import service as polytopes
from momentforge.domain.rootsys.models import preset


@pytest.fixture
def so4():
    return preset("A1xA1")


@pytest.fixture
def make_polytope(so4):
    def _make(*normals, rs=None):
        return polytopes.from_chamber_facets(rs or so4, [(n, "fano") for n in normals])

    return _make


@pytest.fixture
def settings(tmp_path) -> Settings:
    settings = Settings(cache_dir=tmp_path / "cache")
    settings.ensure_directories()
    return settings
