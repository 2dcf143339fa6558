from __future__ import annotations

import logging
from typing import Optional

from pydantic import ValidationError

from ...core.cache import JsonLinesStore
from ..criterion.models import Existence
from ..polytope import service as polytopes
from ..rootsys.models import preset
from .models import ClassifiedPolytope, EnumerationResult, SearchParams
from .schemas import ClassifiedEntry, EnumerationPayload, fraction_str, parse_fraction

logger = logging.getLogger(__name__)


class EnumerationRepository:
    """Cache of enumeration results keyed by their search parameters."""

    def __init__(self, store: JsonLinesStore) -> None:
        self.store = store

    def get(self, params: SearchParams) -> Optional[EnumerationResult]:
        raw = self.store.get(params.cache_key())
        if raw is None:
            logger.debug("cache miss for %s", params)
            return None
        try:
            payload = EnumerationPayload.model_validate(raw)
            result = self._to_domain(params, payload)
        except (ValidationError, ValueError) as exc:
            logger.warning("ignoring unreadable cache entry for %s: %s", params, exc)
            return None
        logger.debug("cache hit for %s", params)
        return result

    def save(self, result: EnumerationResult) -> EnumerationResult:
        payload = EnumerationPayload(
            p_max=result.params.p_max,
            required=list(result.params.required) if result.params.required else None,
            lattice_only=result.params.lattice_only,
            raw_count=result.raw_count,
            entries=[ClassifiedEntry.from_domain(entry) for entry in result.entries],
        )
        self.store.put(result.params.cache_key(), payload.model_dump())
        return result

    @staticmethod
    def _to_domain(params: SearchParams, payload: EnumerationPayload) -> EnumerationResult:
        rs = preset("A1xA1")
        entries = []
        for item in payload.entries:
            polytope = polytopes.from_chamber_facets(rs, [(facet, "auto") for facet in item.facets])
            entries.append(
                ClassifiedPolytope(
                    polytope=polytope,
                    volume=parse_fraction(item.volume),
                    barycenter=(parse_fraction(item.barycenter[0]), parse_fraction(item.barycenter[1])),
                    multiple=item.multiple,
                    p0=item.p0,
                    ke=Existence(item.ke),
                )
            )
        return EnumerationResult(params=params, entries=entries, raw_count=payload.raw_count)


__all__ = ["EnumerationRepository", "fraction_str"]
