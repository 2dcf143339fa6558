from __future__ import annotations

import argparse
import io
import logging
from pathlib import Path

from ...core.errors import InputError
from ...domain.analysis.service import feature_payload
from ...domain.classify.schemas import fraction_str
from ...domain.potential.ding import ding, fhat_convexity
from ...domain.potential.ricci import classify_boundary, h0_scan
from ...domain.quadrature.piecewise import PLFunction
from .. import deps
from ..output import dumps, emit
from ..schemas import load_pl_file, load_polytope_file

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("potential", help="Ricci potential scans and the Ding functional")
    parser.add_argument("input", type=Path, help="polytope JSON file")
    parser.add_argument("mode", choices=("h0-scan", "classify-boundary", "ding"))
    parser.add_argument("--grid", type=int, help="grid size n for h0-scan (n x n points)")
    parser.add_argument("--output", type=Path, help=".csv or .parquet for h0-scan, JSON otherwise")
    parser.add_argument("--pl", type=Path, help="piecewise-linear function file for ding (default u = 0)")
    parser.add_argument("--path-samples", type=int, default=11, help="points along the F-hat path")
    parser.set_defaults(handler=run)


def _scan(args: argparse.Namespace, polytope) -> int:
    settings = deps.get_active_settings()
    n = args.grid or settings.h0_grid_sizes[0]
    frame = h0_scan(polytope, n, settings.h0_margin)
    if args.output is not None and args.output.suffix.lower() == ".parquet":
        args.output.parent.mkdir(parents=True, exist_ok=True)
        frame.to_parquet(args.output, index=False)
        logger.info("wrote %d samples to %s", len(frame), args.output)
        return 0
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False)
    emit(buffer.getvalue(), args.output)
    return 0


def _boundary(args: argparse.Namespace, polytope) -> int:
    report = classify_boundary(polytope)
    payload = {
        "bounded_above": report.bounded_above,
        "uniformly_bounded": report.uniformly_bounded,
        "features": [feature_payload(f).model_dump() for f in report.features],
    }
    emit(dumps(payload), args.output)
    return 0


def _ding(args: argparse.Namespace, polytope) -> int:
    quad = deps.get_analysis_service().quadrature_options
    u = PLFunction.zero()
    path_end = None
    if args.pl is not None:
        document = load_pl_file(args.pl)
        u = document.to_function()
        path_end = document.to_path_end()

    value = ding(polytope, u, **quad)
    payload: dict[str, object] = {
        "L": fraction_str(value.L),
        "F": value.F,
        "F_error": value.F_error,
        "D": value.D,
        "convention": value.convention.value,
    }
    if path_end is not None:
        if args.path_samples < 3:
            raise InputError("--path-samples must be at least 3 for a convexity check")
        path = fhat_convexity(polytope, u, path_end, samples=args.path_samples, **quad)
        payload["fhat_path"] = {
            "t": [fraction_str(t) for t in path.ts],
            "values": path.values,
            "errors": path.errors,
            "min_second_difference": path.min_second_difference,
            "convex": path.convex,
        }
    emit(dumps(payload), args.output)
    return 0


_MODES = {"h0-scan": _scan, "classify-boundary": _boundary, "ding": _ding}


def run(args: argparse.Namespace) -> int:
    polytope = load_polytope_file(args.input)
    return _MODES[args.mode](args, polytope)
