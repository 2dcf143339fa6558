from __future__ import annotations

from fractions import Fraction as Q
from typing import Optional

from pydantic import BaseModel, Field

from .models import ClassifiedPolytope, VolumeGapReport


def fraction_str(value: Q) -> str:
    """Canonical "num/den" rendering (integers carry "/1")."""

    value = Q(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Q:
    return Q(text)


class ClassifiedEntry(BaseModel):
    facets: list[list[int]]
    volume: str
    barycenter: list[str]
    multiple: int
    p0: int
    ke: str
    label: Optional[str] = None
    smoothness: Optional[str] = None

    @classmethod
    def from_domain(cls, entry: ClassifiedPolytope, label: str | None = None, smoothness: str | None = None) -> "ClassifiedEntry":
        return cls(
            facets=[list(line) for line in entry.normals],
            volume=fraction_str(entry.volume),
            barycenter=[fraction_str(c) for c in entry.barycenter],
            multiple=entry.multiple,
            p0=entry.p0,
            ke=entry.ke.value,
            label=label,
            smoothness=smoothness,
        )


class EnumerationPayload(BaseModel):
    p_max: int
    required: Optional[list[int]] = None
    lattice_only: bool = False
    raw_count: int = 0
    entries: list[ClassifiedEntry] = Field(default_factory=list)


class VolumeGapRowPayload(BaseModel):
    p0: int
    q0: int
    bound: str
    bound_below_target: bool
    enumerated: bool
    volumes: list[str]
    exceptional: list[str]
    matches: list[str]


class VolumeGapPayload(BaseModel):
    p0_min: int
    p0_max: int
    bound_only: bool
    targets: list[str]
    rows: list[VolumeGapRowPayload]
    real_bounds: dict[str, str]
    low_p0_checked: bool
    low_p0_target_volumes: list[str]
    passed: bool

    @classmethod
    def from_domain(cls, report: VolumeGapReport) -> "VolumeGapPayload":
        return cls(
            p0_min=report.p0_min,
            p0_max=report.p0_max,
            bound_only=report.bound_only,
            targets=[fraction_str(t) for t in report.targets],
            rows=[
                VolumeGapRowPayload(
                    p0=row.p0,
                    q0=row.q0,
                    bound=fraction_str(row.bound),
                    bound_below_target=row.bound_below_target,
                    enumerated=row.enumerated,
                    volumes=[fraction_str(v) for v in row.volumes],
                    exceptional=[fraction_str(v) for v in row.exceptional],
                    matches=[fraction_str(v) for v in row.matches],
                )
                for row in report.rows
            ],
            real_bounds={str(p0): fraction_str(b) for p0, b in report.real_bounds.items()},
            low_p0_checked=report.low_p0_checked,
            low_p0_target_volumes=[fraction_str(e.volume) for e in report.low_p0_target_entries],
            passed=report.passed,
        )
