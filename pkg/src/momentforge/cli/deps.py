from __future__ import annotations

from ..core.config import Settings, get_settings
from ..domain.analysis.service import AnalysisService
from ..domain.classify.service import ClassificationService

_classification_service: ClassificationService | None = None
_analysis_service: AnalysisService | None = None
_current_settings: Settings | None = None


def configure(settings: Settings | None = None) -> None:
    global _classification_service, _analysis_service, _current_settings
    _current_settings = settings or get_settings()
    _classification_service = ClassificationService(_current_settings)
    _analysis_service = AnalysisService(_current_settings)


def _ensure_configured() -> Settings:
    if _current_settings is None:
        configure()
    assert _current_settings is not None
    return _current_settings


def get_classification_service() -> ClassificationService:
    if _classification_service is None:
        configure()
    assert _classification_service is not None
    return _classification_service


def get_analysis_service() -> AnalysisService:
    if _analysis_service is None:
        configure()
    assert _analysis_service is not None
    return _analysis_service


def get_active_settings() -> Settings:
    return _ensure_configured()
