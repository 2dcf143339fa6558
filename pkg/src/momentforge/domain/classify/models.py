from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Optional

from ..criterion.models import Existence
from ..polytope.models import GroupPolytope
from ..rootsys.linalg import Vector

Line = tuple[int, int]


@dataclass(frozen=True)
class ClassifiedPolytope:
    polytope: GroupPolytope
    volume: Q
    barycenter: Vector
    multiple: int
    p0: int
    ke: Existence

    @property
    def normals(self) -> tuple[Line, ...]:
        return self.polytope.normals

    @property
    def gorenstein(self) -> bool:
        return self.multiple == 1

    def sort_key(self) -> tuple:
        return (self.p0, tuple((p, -q) for p, q in self.normals))


@dataclass(frozen=True)
class SearchParams:
    p_max: int
    required: Optional[Line] = None
    lattice_only: bool = False

    def cache_key(self) -> dict:
        return {
            "p_max": self.p_max,
            "required": list(self.required) if self.required else None,
            "lattice_only": self.lattice_only,
        }


@dataclass
class EnumerationResult:
    params: SearchParams
    entries: list[ClassifiedPolytope]
    raw_count: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def volumes(self) -> list[Q]:
        return [entry.volume for entry in self.entries]


@dataclass(frozen=True)
class VolumeGapRow:
    p0: int
    q0: int
    bound: Q
    bound_below_target: bool
    enumerated: bool = False
    volumes: tuple[Q, ...] = ()
    exceptional: tuple[Q, ...] = ()
    matches: tuple[Q, ...] = ()


@dataclass
class VolumeGapReport:
    p0_min: int
    p0_max: int
    bound_only: bool
    targets: tuple[Q, Q]
    rows: list[VolumeGapRow] = field(default_factory=list)
    # worst case over real q0 < p0/2 + 3/4, one value per p0
    real_bounds: dict[int, Q] = field(default_factory=dict)
    low_p0_checked: bool = False
    low_p0_target_entries: list[ClassifiedPolytope] = field(default_factory=list)

    @property
    def exceptional(self) -> list[Q]:
        return [v for row in self.rows for v in row.exceptional]

    @property
    def matches(self) -> list[Q]:
        return [v for row in self.rows for v in row.matches]

    @property
    def unresolved(self) -> list[VolumeGapRow]:
        return [row for row in self.rows if not row.bound_below_target and not row.enumerated]

    @property
    def low_p0_ok(self) -> bool:
        return all(entry.ke is not Existence.YES for entry in self.low_p0_target_entries)

    @property
    def passed(self) -> bool:
        return not self.matches and not self.unresolved and self.low_p0_ok
