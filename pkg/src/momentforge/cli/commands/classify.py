from __future__ import annotations

import argparse
import logging

import pandas as pd

from ...domain.classify import golden
from ...domain.classify.models import EnumerationResult
from ...domain.classify.schemas import ClassifiedEntry
from .. import deps
from ..output import dumps, emit, warn

logger = logging.getLogger(__name__)

COLUMNS = ("label", "edges", "volume", "ke", "multiple", "p0", "smoothness")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("classify", help="enumerate Gorenstein or Q-Fano SO4 polytopes")
    parser.add_argument("kind", choices=("gorenstein", "qfano"))
    parser.add_argument("--p-max", type=int, help="largest facet p for the Gorenstein search")
    parser.add_argument("--p0", type=int, default=2, help="largest p0 for the Q-Fano search")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--golden", action="store_true", help="compare against the reference table")
    parser.set_defaults(handler=run)


def entries(result: EnumerationResult, kind: str) -> list[ClassifiedEntry]:
    table = golden.table_for(kind)
    out = []
    for index, entry in enumerate(result.entries, start=1):
        row = golden.annotation(entry, table)
        out.append(
            ClassifiedEntry.from_domain(
                entry,
                label=row.label if row else f"#{index}",
                smoothness=row.smoothness if row else None,
            )
        )
    return out


def as_frame(rows: list[ClassifiedEntry]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "label": row.label,
                "edges": " ".join(f"({p},{q})" for p, q in row.facets),
                "volume": row.volume,
                "ke": row.ke,
                "multiple": row.multiple,
                "p0": row.p0,
                "smoothness": row.smoothness or "",
            }
            for row in rows
        ],
        columns=list(COLUMNS),
    )


def run(args: argparse.Namespace) -> int:
    service = deps.get_classification_service()
    if args.kind == "gorenstein":
        result = service.classify_gorenstein(args.p_max)
    else:
        result = service.classify_qfano(args.p0)

    rows = entries(result, args.kind)
    if args.format == "json":
        emit(dumps([row.model_dump() for row in rows]))
    elif args.format == "csv":
        emit(as_frame(rows).to_csv(index=False))
    else:
        emit(as_frame(rows).to_string(index=False))

    if not args.golden:
        return 0
    problems = service.golden_mismatches(args.kind, result)
    for problem in problems:
        warn(f"golden mismatch: {problem}")
    if problems:
        return 1
    warn(f"golden check passed: {len(rows)} rows")
    return 0
