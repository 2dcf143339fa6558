from __future__ import annotations

import json
import tomllib
from functools import lru_cache
from pathlib import Path
from typing import Any

from pydantic import AliasChoices, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime configuration loaded from environment variables and an optional config file."""

    app_name: str = "MomentForge"
    version: str = "0.1.0"
    log_level: str = "WARNING"

    cache_dir: Path = Field(
        default=Path(".momentforge-cache"),
        validation_alias=AliasChoices("MPL_CACHE_DIR", "cache_dir"),
    )
    cache_file_name: str = "enumerations.jsonl"
    use_cache: bool = True

    # enumeration guards
    p_max_guard: int = 12
    gorenstein_p_max: int = 8
    gap_full_p0_max: int = 8
    gap_bound_p0_max: int = 12

    # Ricci potential sampling
    h0_grid_sizes: list[int] = Field(default_factory=lambda: [50, 100, 200])
    h0_margin: float = 1e-3

    # Ding functional quadrature
    quad_order: int = 10
    quad_rtol: float = 1e-8
    quad_max_depth: int = 12
    tail_tol: float = 1e-14

    monte_carlo_samples: int = 1_000_000

    model_config = SettingsConfigDict(
        env_file=".env",
        env_nested_delimiter="__",
        case_sensitive=False,
        populate_by_name=True,
    )

    @field_validator("cache_dir", mode="before")
    @classmethod
    def _convert_cache_dir(cls, value: Any) -> Path:
        if isinstance(value, Path):
            return value
        return Path(str(value))

    @property
    def cache_path(self) -> Path:
        return self.cache_dir / self.cache_file_name

    def ensure_directories(self) -> None:
        self.cache_dir.mkdir(parents=True, exist_ok=True)


def load_config_file(path: Path) -> dict[str, Any]:
    """Read a TOML or JSON config file into Settings init values."""

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read config file {path}: {exc.strerror or exc}") from exc
    if path.suffix.lower() == ".json":
        data = json.loads(text)
    else:
        data = tomllib.loads(text)
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must contain a table of settings")
    # a [momentforge] table is accepted as well as top-level keys
    return dict(data.get("momentforge", data))


def build_settings(config_path: Path | None = None, **overrides: Any) -> Settings:
    values: dict[str, Any] = {}
    if config_path is not None:
        values.update(load_config_file(config_path))
    values.update({key: value for key, value in overrides.items() if value is not None})
    return Settings(**values)


@lru_cache
def get_settings() -> Settings:
    """Return cached settings built from the environment only."""

    return Settings()
