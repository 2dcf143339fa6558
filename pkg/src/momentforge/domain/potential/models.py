from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction as Q
from typing import Optional

import numpy as np

from ..criterion.models import Convention
from ..rootsys.linalg import Vector


class CaseLabel(StrEnum):
    C1 = "C1"
    C2 = "C2"
    C3_1 = "C3.1"
    C3_2 = "C3.2"


class Boundedness(StrEnum):
    BOUNDED = "bounded"
    DIVERGES = "diverges_to_minus_infinity"


@dataclass(frozen=True)
class BoundaryFeature:
    """A vertex or an edge of the boundary of 2P+ with its Ricci-potential case."""

    kind: str  # "vertex" or "edge"
    location: tuple[Vector, ...]
    case_label: CaseLabel
    verdict: Boundedness = Boundedness.BOUNDED
    alpha0: Optional[int] = None
    u2: Optional[tuple[int, int]] = None
    pairing: Optional[int] = None

    @property
    def point(self) -> Vector:
        if self.kind == "vertex":
            return self.location[0]
        a, b = self.location
        return ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)

    @property
    def bounded(self) -> bool:
        return self.verdict is Boundedness.BOUNDED


@dataclass(frozen=True)
class BoundaryReport:
    features: tuple[BoundaryFeature, ...]
    bounded_above: bool = True

    @property
    def uniformly_bounded(self) -> bool:
        return all(f.bounded for f in self.features)

    @property
    def divergent(self) -> list[BoundaryFeature]:
        return [f for f in self.features if not f.bounded]


@dataclass(frozen=True)
class H0Terms:
    log_det_hessian: float
    legendre_term: float  # -y . grad u
    guillemin: float
    log_j: float
    neg_log_pi: float

    @property
    def total(self) -> float:
        return self.log_det_hessian + self.legendre_term + self.guillemin + self.log_j + self.neg_log_pi


@dataclass(frozen=True)
class FValue:
    """Nonlinear part of the reduced Ding functional with its error budget."""

    value: float
    error: float
    radius: float
    integral: float
    tail_bound: float
    leaves: int


@dataclass(frozen=True)
class DingValue:
    L: Q
    F: float
    F_error: float
    convention: Convention = Convention.TWO_P

    @property
    def D(self) -> float:
        return float(self.L) + self.F


@dataclass
class FhatReport:
    ts: list[Q]
    values: list[float]
    errors: list[float]
    second_differences: list[float] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.second_differences:
            v = np.asarray(self.values, dtype=float)
            self.second_differences = list(v[2:] - 2 * v[1:-1] + v[:-2]) if len(v) >= 3 else []

    @property
    def min_second_difference(self) -> float:
        return float(min(self.second_differences)) if self.second_differences else 0.0

    @property
    def convex(self) -> bool:
        return self.min_second_difference >= -1e-6


@dataclass(frozen=True)
class ProperRatio:
    k: Q
    integral: Q
    ding: float

    @property
    def ratio(self) -> float:
        return self.ding / float(self.integral)
