from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Iterator

logger = logging.getLogger(__name__)


class JsonLinesStore:
    """Append-only JSON-lines file of ``{"key": ..., "value": ...}`` records.

    Later records win over earlier ones with the same key, so a rerun that
    saves again simply shadows the stale entry.
    """

    def __init__(self, path: Path) -> None:
        self.path = path

    def _records(self) -> Iterator[dict[str, Any]]:
        if not self.path.exists():
            return
        with self.path.open("r", encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError:
                    logger.warning("skipping corrupt cache line %d in %s", lineno, self.path)
                    continue
                if isinstance(record, dict) and "key" in record:
                    yield record

    def get(self, key: dict[str, Any]) -> Any | None:
        found = None
        for record in self._records():
            if record["key"] == key:
                found = record.get("value")
        return found

    def put(self, key: dict[str, Any], value: Any) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps({"key": key, "value": value}, sort_keys=True) + "\n")
