from __future__ import annotations

import argparse

from ...domain.classify.schemas import VolumeGapPayload
from .. import deps
from ..output import dumps, emit


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify-thm13", help="check the volume gap for Q-Fano SO4 polytopes with p0 >= 3")
    parser.add_argument("--p0-min", type=int, default=3)
    parser.add_argument("--p0-max", type=int, help="defaults to the configured guard for the mode")
    parser.add_argument("--bound-only", action="store_true", help="use the volume bound alone, no enumeration")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.set_defaults(handler=run)


def render_text(payload: VolumeGapPayload) -> str:
    lines = [f"p0 range: [{payload.p0_min}, {payload.p0_max}]" + (" (bound only)" if payload.bound_only else "")]
    lines.append("targets: " + ", ".join(payload.targets))
    for row in payload.rows:
        if row.bound_below_target:
            status = "bound below target"
        elif row.enumerated:
            status = f"enumerated {len(row.volumes)}, exceptional: {', '.join(row.exceptional) or '-'}"
            if row.matches:
                status += f", MATCHES: {', '.join(row.matches)}"
        else:
            status = "unresolved"
        lines.append(f"  p0={row.p0} q0={row.q0} bound={row.bound}: {status}")
    for p0, bound in payload.real_bounds.items():
        lines.append(f"  p0={p0} worst real q0 bound={bound}")
    if payload.low_p0_checked:
        lines.append("p0 <= 2 target volumes (all KE-no): " + (", ".join(payload.low_p0_target_volumes) or "-"))
    lines.append("verdict: " + ("no matching volume" if payload.passed else "FAILED"))
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    settings = deps.get_active_settings()
    p0_max = args.p0_max
    if p0_max is None:
        p0_max = settings.gap_bound_p0_max if args.bound_only else settings.gap_full_p0_max
    report = deps.get_classification_service().verify_thm13(args.p0_min, p0_max, bound_only=args.bound_only)
    payload = VolumeGapPayload.from_domain(report)
    emit(dumps(payload.model_dump()) if args.format == "json" else render_text(payload))
    return 0 if report.passed else 1
