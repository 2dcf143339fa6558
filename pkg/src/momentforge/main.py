from __future__ import annotations

import sys

from .cli.app import main


def run() -> None:  # pragma: no cover - convenience wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    run()
