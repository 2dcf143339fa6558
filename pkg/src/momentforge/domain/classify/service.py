from __future__ import annotations

import logging
from typing import Optional

from ...core.cache import JsonLinesStore
from ...core.config import Settings
from ...core.errors import GuardExceededError, InputError
from . import golden
from .enumeration import enumerate_polytopes
from .models import EnumerationResult, Line, SearchParams, VolumeGapReport
from .repository import EnumerationRepository
from .theorem import verify_thm13

logger = logging.getLogger(__name__)


class ClassificationService:
    """Application service running the polytope searches behind the cache."""

    def __init__(self, settings: Settings, repository: EnumerationRepository | None = None) -> None:
        self.settings = settings
        if repository is None and settings.use_cache:
            settings.ensure_directories()
            repository = EnumerationRepository(JsonLinesStore(settings.cache_path))
        self.repository = repository if settings.use_cache else None

    def enumerate(self, p_max: int, required: Optional[Line] = None, lattice_only: bool = False) -> EnumerationResult:
        if p_max < 1:
            raise InputError("p_max must be at least 1")
        if p_max > self.settings.p_max_guard:
            raise GuardExceededError(f"p_max={p_max} exceeds the guard {self.settings.p_max_guard}")

        params = SearchParams(
            p_max=p_max,
            required=(int(required[0]), int(required[1])) if required else None,
            lattice_only=lattice_only,
        )
        if self.repository is not None:
            cached = self.repository.get(params)
            if cached is not None:
                logger.info("reusing cached enumeration for %s", params)
                return cached

        result = enumerate_polytopes(p_max, params.required, lattice_only)
        if self.repository is not None:
            self.repository.save(result)
        return result

    def classify_gorenstein(self, p_max: int | None = None) -> EnumerationResult:
        return self.enumerate(p_max or self.settings.gorenstein_p_max, lattice_only=True)

    def classify_qfano(self, p0: int) -> EnumerationResult:
        """Every Q-Fano polytope whose facets have p <= p0 (so its own p0 is at most p0)."""

        if p0 < 1:
            raise InputError("p0 must be at least 1")
        return self.enumerate(p0)

    def golden_mismatches(self, kind: str, result: EnumerationResult) -> list[str]:
        return golden.compare(result, golden.table_for(kind))

    def verify_thm13(self, p0_min: int = 3, p0_max: int = 8, bound_only: bool = False) -> VolumeGapReport:
        return verify_thm13(
            p0_min,
            p0_max,
            bound_only=bound_only,
            enumerate_fn=lambda p_max, required, lattice: self.enumerate(p_max, required, lattice),
            full_p0_max=self.settings.gap_full_p0_max,
            bound_p0_max=self.settings.gap_bound_p0_max,
        )
