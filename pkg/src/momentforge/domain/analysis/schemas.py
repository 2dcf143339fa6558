from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class AnalysisRequest(BaseModel):
    include_h0: bool = True
    include_ding: bool = False


class BoundaryFeatureOut(BaseModel):
    kind: str
    location: list[list[str]]
    case: str
    verdict: str
    wall: Optional[int] = None
    normal: Optional[list[int]] = None
    pairing: Optional[int] = None


class DingOut(BaseModel):
    function: str
    L: str
    F: float
    F_error: float
    D: float
    precision: float = Field(description="Absolute error budget carried by F and D")


class AnalysisReport(BaseModel):
    root_system: str
    chamber_facets: list[list[int]]
    lambdas: list[str]
    vertices: list[list[str]]
    volume_P: str
    volume_2P: str
    barycenter_P: list[str]
    barycenter_2P: list[str]
    ke: str
    margins: list[str]
    violated_root: Optional[int] = None
    witness_L: Optional[str] = None
    multiple: int
    gorenstein: bool
    p0: int
    fine: bool
    h0_bounded_above: Optional[bool] = None
    h0_uniformly_bounded: Optional[bool] = None
    boundary_features: list[BoundaryFeatureOut] = Field(default_factory=list)
    ding: list[DingOut] = Field(default_factory=list)
