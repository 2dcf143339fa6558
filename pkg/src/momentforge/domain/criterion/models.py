from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction as Q
from typing import Optional

from ..quadrature.piecewise import PLFunction
from ..rootsys.linalg import Vector


class Existence(StrEnum):
    YES = "yes"
    NO = "no"
    BOUNDARY = "boundary"


class Convention(StrEnum):
    """Which dilation of the polytope a quantity refers to (P+ with 2rho, or 2P+ with 4rho)."""

    P = "P"
    TWO_P = "2P"

    @property
    def factor(self) -> int:
        return 1 if self is Convention.P else 2


@dataclass(frozen=True)
class KEVerdict:
    exists: Existence
    barycenter_P: Vector
    barycenter_2P: Vector
    # simple-root coordinates of bar(P+) - 2rho
    margins: Vector
    violated_root: Optional[int] = None
    margin: Optional[Q] = None
    witness: Optional[PLFunction] = None
    witness_L: Optional[Q] = None

    @property
    def admits_ke(self) -> bool:
        return self.exists is Existence.YES
