from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Optional


def emit(text: str, output: Optional[Path] = None) -> None:
    """Write a command result to ``output`` or stdout, newline terminated."""

    if not text.endswith("\n"):
        text += "\n"
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def key_value_lines(payload: dict[str, Any], skip: tuple[str, ...] = ()) -> str:
    lines = []
    for key, value in payload.items():
        if key in skip or value is None:
            continue
        if isinstance(value, list) and value and isinstance(value[0], list):
            value = " ".join("(" + ", ".join(str(c) for c in item) + ")" for item in value)
        elif isinstance(value, list):
            value = "(" + ", ".join(str(c) for c in value) + ")"
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def warn(message: str) -> None:
    sys.stderr.write(message.rstrip("\n") + "\n")
