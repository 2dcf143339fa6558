from __future__ import annotations

import argparse
import logging
from pathlib import Path

from ...domain.analysis.schemas import AnalysisReport, AnalysisRequest
from .. import deps
from ..output import dumps, emit, key_value_lines
from ..schemas import load_polytope_file
from ..svg import write_svg

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("analyze", help="volume, barycenter, KE verdict and h0 boundary report")
    parser.add_argument("input", type=Path, help="polytope JSON file")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", type=Path, help="write the report here instead of stdout")
    parser.add_argument("--svg", type=Path, help="also write an SVG figure of P+")
    parser.add_argument("--ding", action="store_true", help="evaluate the Ding functional (slow)")
    parser.add_argument("--no-h0", action="store_true", help="skip the Ricci-potential boundary classification")
    parser.set_defaults(handler=run)


def render_text(report: AnalysisReport) -> str:
    payload = report.model_dump()
    lines = [key_value_lines(payload, skip=("boundary_features", "ding"))]
    if report.boundary_features:
        lines.append("boundary_features:")
        for feature in report.boundary_features:
            where = " ".join("(" + ", ".join(point) + ")" for point in feature.location)
            extra = f" wall={feature.wall} pairing={feature.pairing}" if feature.pairing is not None else ""
            lines.append(f"  {feature.kind} {where}: {feature.case} {feature.verdict}{extra}")
    for value in report.ding:
        lines.append(
            f"ding[{value.function}]: L={value.L} F={value.F:.10g} D={value.D:.10g} (+-{value.precision:.1e})"
        )
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    polytope = load_polytope_file(args.input)
    request = AnalysisRequest(include_h0=not args.no_h0, include_ding=args.ding)
    report = deps.get_analysis_service().run_analysis(polytope, request)

    text = dumps(report.model_dump()) if args.format == "json" else render_text(report)
    emit(text, args.output)
    if args.svg is not None:
        write_svg(polytope, args.svg)
        logger.info("wrote figure to %s", args.svg)
    return 0
