"""Walking enumeration of Fano polytopes for SO4 (root system A1xA1).

A chamber cell is the region cut out by a convex chain of facet lines that
starts on the upper Weyl wall {y = x} and ends on the lower wall {y = -x}.
The search walks that chain edge by edge, with slopes q/p strictly
decreasing, so each polytope is produced exactly once.
"""

from __future__ import annotations

import logging
from fractions import Fraction as Q
from itertools import combinations
from math import gcd
from typing import Iterator, Optional

from ...core.errors import InputError
from ..criterion.service import ke_test
from ..polytope import service as polytopes
from ..polytope.models import GroupPolytope
from ..quadrature.exact import moments
from ..rootsys.linalg import Vector
from ..rootsys.models import RootSystem, preset
from .models import ClassifiedPolytope, EnumerationResult, Line, SearchParams

logger = logging.getLogger(__name__)


def candidate_lines(p_max: int) -> list[Line]:
    """Primitive (p, q) with 1 <= p <= p_max and |q| < p, plus (1, +-1)."""

    if p_max < 1:
        raise InputError("p_max must be at least 1")
    lines = [
        (p, q)
        for p in range(1, p_max + 1)
        for q in range(-p, p + 1)
        if gcd(p, abs(q)) == 1 and (abs(q) < p or p == 1)
    ]
    return sorted(lines, key=lambda line: (line[0], -line[1]))


def _steeper(a: Line, b: Line) -> bool:
    """q/p of a strictly greater than that of b."""

    return a[1] * b[0] > b[1] * a[0]


def _lam(line: Line) -> Q:
    return Q(1 + 2 * line[0])


def _meet(a: Line, b: Line) -> Vector:
    (p1, q1), (p2, q2) = a, b
    det = p1 * q2 - q1 * p2
    l1, l2 = _lam(a), _lam(b)
    return ((l1 * q2 - l2 * q1) / det, (p1 * l2 - p2 * l1) / det)


def _advance(line: Line, start: Vector, end: Vector) -> Q:
    # the walk along l_{p,q} = 0 runs in direction (q, -p)
    p, q = line
    return (end[0] - start[0]) * q - (end[1] - start[1]) * p


def _integral(point: Vector) -> bool:
    return point[0].denominator == 1 and point[1].denominator == 1


def _chains(
    candidates: list[Line], required: Optional[Line], lattice_only: bool
) -> Iterator[tuple[Line, ...]]:
    ordered = sorted(candidates, key=lambda line: Q(line[1], line[0]), reverse=True)

    def walk(chain: list[Line], here: Vector) -> Iterator[tuple[Line, ...]]:
        current = chain[-1]
        p, q = current
        # finish on the lower wall
        if p - q > 0:
            t = _lam(current) / (p - q)
            end = (t, -t)
            if _advance(current, here, end) > 0:
                orthogonal = p + q == 0
                if not lattice_only or orthogonal or _integral(end):
                    if required is None or required in chain:
                        yield tuple(chain)
        for nxt in ordered:
            if not _steeper(current, nxt):
                continue
            if required is not None and required not in chain and _steeper(required, nxt):
                # the required facet would have to come before nxt
                continue
            corner = _meet(current, nxt)
            if not (corner[0] > abs(corner[1])):
                continue
            if _advance(current, here, corner) <= 0:
                continue
            if lattice_only and not _integral(corner):
                continue
            chain.append(nxt)
            yield from walk(chain, corner)
            chain.pop()

    for first in ordered:
        p, q = first
        if p + q <= 0:
            continue
        if required is not None and first != required and _steeper(required, first):
            continue
        t = _lam(first) / (p + q)
        start = (t, t)
        if lattice_only and p - q != 0 and not _integral(start):
            continue
        yield from walk([first], start)


def classify_polytope(p: GroupPolytope) -> ClassifiedPolytope:
    volume, mx, my = moments(p.cell, p.rs)
    return ClassifiedPolytope(
        polytope=p,
        volume=volume,
        barycenter=(mx / volume, my / volume),
        multiple=polytopes.multiple(p),
        p0=polytopes.p_zero(p),
        ke=ke_test(p).exists,
    )


def _collect(rs: RootSystem, params: SearchParams, chains: Iterator[tuple[Line, ...]]) -> EnumerationResult:
    seen: dict[tuple, GroupPolytope] = {}
    raw = 0
    for chain in chains:
        try:
            polytope = polytopes.from_chamber_facets(rs, [(line, "auto") for line in chain])
        except InputError as exc:
            logger.debug("discarding chain %s: %s", chain, exc)
            continue
        if params.lattice_only and polytopes.multiple(polytope) != 1:
            continue
        raw += 1
        canonical = polytopes.canonical_form(polytope)
        seen.setdefault(canonical.chamber_facets, canonical)
    entries = sorted((classify_polytope(p) for p in seen.values()), key=ClassifiedPolytope.sort_key)
    logger.info("enumeration %s: %d chains, %d up to symmetry", params, raw, len(entries))
    return EnumerationResult(params=params, entries=entries, raw_count=raw)


def enumerate_polytopes(
    p_max: int,
    required: Optional[Line] = None,
    lattice_only: bool = False,
    rs: Optional[RootSystem] = None,
) -> EnumerationResult:
    rs = rs or preset("A1xA1")
    if rs.name != "A1xA1":
        raise InputError("classification is implemented for A1xA1 only")
    candidates = candidate_lines(p_max)
    if required is not None:
        required = (int(required[0]), int(required[1]))
        if required not in candidates:
            raise InputError(f"required facet {required} is not a candidate line for p_max={p_max}")
    params = SearchParams(p_max=p_max, required=required, lattice_only=lattice_only)
    return _collect(rs, params, _chains(candidates, required, lattice_only))


def brute_force(p_max: int, lattice_only: bool = False) -> EnumerationResult:
    """Every subset of the candidate lines, kept when it is a valid polytope."""

    rs = preset("A1xA1")
    candidates = candidate_lines(p_max)
    subsets = (subset for size in range(1, len(candidates) + 1) for subset in combinations(candidates, size))
    return _collect(rs, SearchParams(p_max=p_max, lattice_only=lattice_only), subsets)
