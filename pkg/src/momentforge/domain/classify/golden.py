"""Reference classification tables for Gorenstein and Q-Fano SO4 polytopes.

Values are stored as published. Two printed multiples disagree with the
vertex lattice: {(2,1),(1,-1),(1,1)} has the vertex (8/3, -1/3), and
{(2,1),(2,-1),(1,1),(1,-1)} has vertices with denominator 2 only; the
``multiple_erratum`` field carries the recomputed value used for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Optional

from ..polytope import service as polytopes
from ..rootsys.models import preset
from .models import ClassifiedPolytope, EnumerationResult, Line


@dataclass(frozen=True)
class GoldenRow:
    label: str
    facets: tuple[Line, ...]
    volume: Q
    ke: bool
    smoothness: str
    p0: int
    multiple: Optional[int] = None  # None where the table says "Smooth"
    multiple_erratum: Optional[int] = None

    @property
    def expected_multiple(self) -> int:
        if self.multiple_erratum is not None:
            return self.multiple_erratum
        return 1 if self.multiple is None else self.multiple

    def canonical_facets(self) -> tuple:
        polytope = polytopes.from_chamber_facets(preset("A1xA1"), [(f, "auto") for f in self.facets])
        return polytopes.canonical_key(polytope)


GORENSTEIN_TABLE: tuple[GoldenRow, ...] = (
    GoldenRow("7-1-1", ((1, 1), (2, 1)), Q(411, 4), False, "Singular", 2, 1),
    GoldenRow("7-1-2", ((1, 1), (2, 1), (1, 0)), Q(10751, 180), False, "Smooth", 2, 1),
    GoldenRow("7-1-3", ((1, 1), (4, 1)), Q(16349, 972), False, "Singular", 4, 1),
    GoldenRow("7-1-4", ((1, 1), (1, 0)), Q(1701, 20), False, "Smooth", 1, 1),
    GoldenRow("7-1-5", ((1, 1), (1, -1)), Q(81, 2), True, "Singular", 1, 1),
    GoldenRow("7-1-6", ((1, 0),), Q(648, 5), True, "Smooth", 1, 1),
)

QFANO_TABLE: tuple[GoldenRow, ...] = (
    GoldenRow("1", ((1, 0),), Q(648, 5), True, "Smooth", 1),
    GoldenRow("2", ((1, 0), (1, 1)), Q(1701, 20), False, "Smooth", 1),
    GoldenRow("3", ((1, -1), (1, 1)), Q(81, 2), True, "Multiple=1", 1, 1),
    GoldenRow("4", ((2, 1),), Q(25000, 243), False, "Multiple=3", 2, 3),
    GoldenRow("5", ((2, 1), (1, 1)), Q(411, 4), False, "Multiple=1", 2, 1),
    GoldenRow("6", ((1, 0), (2, 1)), Q(72728, 1215), False, "Multiple=3", 2, 3),
    GoldenRow("7", ((2, 1), (1, -1)), Q(947, 36), False, "Multiple=3", 2, 3),
    GoldenRow("8", ((2, -1), (2, 1)), Q(165625, 7776), False, "Multiple=6", 2, 6),
    GoldenRow("9", ((2, 1), (1, 0), (1, 1)), Q(10751, 180), False, "Smooth", 2),
    GoldenRow("10", ((2, 1), (1, -1), (1, 1)), Q(12721, 486), False, "Multiple=1", 2, 1, multiple_erratum=3),
    GoldenRow("11", ((2, 1), (2, -1), (1, 1)), Q(164609, 7776), False, "Multiple=6", 2, 6),
    GoldenRow("12", ((2, 1), (2, -1), (1, 1), (1, -1)), Q(6059, 288), False, "Multiple=6", 2, 6, multiple_erratum=2),
)


def table_for(kind: str) -> tuple[GoldenRow, ...]:
    return {"gorenstein": GORENSTEIN_TABLE, "qfano": QFANO_TABLE}[kind]


def compare(result: EnumerationResult, table: tuple[GoldenRow, ...]) -> list[str]:
    """Mismatches between an enumeration and a reference table; empty when they agree."""

    problems: list[str] = []
    by_key = {polytopes.canonical_key(entry.polytope): entry for entry in result.entries}
    expected_keys = set()
    for row in table:
        key = row.canonical_facets()
        expected_keys.add(key)
        entry = by_key.get(key)
        if entry is None:
            problems.append(f"row {row.label}: polytope {list(row.facets)} not found")
            continue
        if entry.volume != row.volume:
            problems.append(f"row {row.label}: volume {entry.volume} != {row.volume}")
        if entry.ke.value != ("yes" if row.ke else "no"):
            problems.append(f"row {row.label}: KE {entry.ke.value} != {'yes' if row.ke else 'no'}")
        if entry.multiple != row.expected_multiple:
            problems.append(f"row {row.label}: multiple {entry.multiple} != {row.expected_multiple}")
        if entry.p0 != row.p0:
            problems.append(f"row {row.label}: p0 {entry.p0} != {row.p0}")
    for key, entry in by_key.items():
        if key not in expected_keys:
            problems.append(f"unexpected polytope {list(entry.normals)} with volume {entry.volume}")
    return problems


def annotation(entry: ClassifiedPolytope, table: tuple[GoldenRow, ...]) -> Optional[GoldenRow]:
    """The reference row describing the same polytope, if any."""

    key = polytopes.canonical_key(entry.polytope)
    for row in table:
        if row.canonical_facets() == key:
            return row
    return None
