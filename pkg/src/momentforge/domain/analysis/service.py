from __future__ import annotations

import logging

from ...core.config import Settings
from ..classify.schemas import fraction_str
from ..criterion.service import ke_test, witness
from ..polytope import service as polytopes
from ..polytope.models import GroupPolytope
from ..potential.ding import ding
from ..potential.models import BoundaryFeature
from ..potential.ricci import classify_boundary
from ..quadrature.exact import weighted_volume
from ..quadrature.piecewise import PLFunction
from .schemas import AnalysisReport, AnalysisRequest, BoundaryFeatureOut, DingOut

logger = logging.getLogger(__name__)


def _point(v) -> list[str]:
    return [fraction_str(c) for c in v]


def feature_payload(feature: BoundaryFeature) -> BoundaryFeatureOut:
    return BoundaryFeatureOut(
        kind=feature.kind,
        location=[_point(v) for v in feature.location],
        case=feature.case_label.value,
        verdict=feature.verdict.value,
        wall=feature.alpha0,
        normal=list(feature.u2) if feature.u2 else None,
        pairing=feature.pairing,
    )


class AnalysisService:
    """Assemble the full report for one polytope."""

    def __init__(self, settings: Settings) -> None:
        self.settings = settings

    @property
    def quadrature_options(self) -> dict[str, object]:
        return {
            "order": self.settings.quad_order,
            "rtol": self.settings.quad_rtol,
            "max_depth": self.settings.quad_max_depth,
            "tail_tol": self.settings.tail_tol,
        }

    def run_analysis(self, polytope: GroupPolytope, request: AnalysisRequest | None = None) -> AnalysisReport:
        request = request or AnalysisRequest()
        rs = polytope.rs
        verdict = ke_test(polytope)
        doubled = polytopes.scale(polytope, 2)

        report = AnalysisReport(
            root_system=rs.name,
            chamber_facets=[list(f.normal_ints()) for f in polytope.chamber_facets],
            lambdas=[fraction_str(f.lam) for f in polytope.chamber_facets],
            vertices=[_point(v) for v in polytopes.p_vertices(polytope)],
            volume_P=fraction_str(weighted_volume(polytope.cell, rs)),
            volume_2P=fraction_str(weighted_volume(doubled.cell, rs)),
            barycenter_P=_point(verdict.barycenter_P),
            barycenter_2P=_point(verdict.barycenter_2P),
            ke=verdict.exists.value,
            margins=_point(verdict.margins),
            violated_root=verdict.violated_root,
            witness_L=fraction_str(verdict.witness_L) if verdict.witness_L is not None else None,
            multiple=polytopes.multiple(polytope),
            gorenstein=polytopes.multiple(polytope) == 1,
            p0=polytopes.p_zero(polytope),
            fine=polytopes.is_fine(polytope),
        )

        if request.include_h0:
            boundary = classify_boundary(polytope)
            report.h0_bounded_above = boundary.bounded_above
            report.h0_uniformly_bounded = boundary.uniformly_bounded
            report.boundary_features = [feature_payload(f) for f in boundary.features]

        if request.include_ding:
            functions = [("zero", PLFunction.zero())]
            if verdict.violated_root is not None:
                functions.append((f"witness[{verdict.violated_root}]", witness(polytope, verdict.violated_root)))
            for name, u in functions:
                value = ding(polytope, u, **self.quadrature_options)
                report.ding.append(
                    DingOut(
                        function=name,
                        L=fraction_str(value.L),
                        F=value.F,
                        F_error=value.F_error,
                        D=value.D,
                        precision=value.F_error,
                    )
                )
                logger.info("Ding functional of %s: D = %.10g", name, value.D)
        return report
