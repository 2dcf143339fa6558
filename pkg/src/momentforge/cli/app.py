from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from ..core.config import Settings, build_settings
from ..core.logging import configure_logging
from . import deps
from .commands import analyze, classify, potential, verify
from .output import warn

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momentforge",
        description="Moment polytope analysis for rank-2 group compactifications.",
    )
    parser.add_argument("--config", type=Path, help="TOML or JSON settings file")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("--no-cache", action="store_true", help="ignore and do not write the enumeration cache")
    parser.add_argument("--cache-dir", type=Path, help="directory of the enumeration cache")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (analyze, classify, verify, potential):
        command.register(subparsers)
    return parser


def settings_from_args(args: argparse.Namespace) -> Settings:
    overrides: dict[str, object] = {"log_level": args.log_level, "cache_dir": args.cache_dir}
    if args.no_cache:
        overrides["use_cache"] = False
    return build_settings(args.config, **overrides)


def _log_level(args: argparse.Namespace, settings: Settings) -> str:
    if args.verbose >= 2:
        return "DEBUG"
    if args.verbose == 1:
        return "INFO"
    return settings.log_level


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; those are input errors here
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT

    try:
        settings = settings_from_args(args)
        configure_logging(_log_level(args, settings))
        deps.configure(settings)
        return args.handler(args)
    except (ValidationError, ValueError) as exc:
        warn(f"error: {exc}")
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - reported, not raised
        logger.debug("internal failure", exc_info=True)
        warn(f"internal error: {type(exc).__name__}: {exc}")
        return EXIT_INTERNAL
