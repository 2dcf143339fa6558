from __future__ import annotations

import logging
import sys

_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def configure_logging(level: str | int = "WARNING") -> logging.Logger:
    """Attach a single stderr handler to the package logger."""

    logger = logging.getLogger("momentforge")
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger.setLevel(level)

    handler = next((h for h in logger.handlers if getattr(h, "_momentforge", False)), None)
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT, datefmt="%H:%M:%S"))
        handler._momentforge = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
    else:
        # stderr may have been swapped since the last call
        handler.stream = sys.stderr  # type: ignore[attr-defined]
    logger.propagate = False
    return logger
