"""Ricci potential of the Guillemin metric and its boundary behaviour."""

from __future__ import annotations

import logging
import math
from typing import Iterable, Sequence

import numpy as np
import pandas as pd

from ...core.errors import DomainError
from ..polytope import service as polytopes
from ..polytope.models import FacetEdge, GroupPolytope, WallEdge
from ..rootsys import linalg as la
from ..rootsys.models import RootSystem, weight_poly
from .guillemin import GuilleminData
from .models import BoundaryFeature, BoundaryReport, Boundedness, CaseLabel, H0Terms

logger = logging.getLogger(__name__)


def log_abs_sinh(z: np.ndarray) -> np.ndarray:
    """log|sinh z| without overflow for large |z|."""

    a = np.abs(z)
    return a + np.log1p(-np.exp(-2.0 * a)) - math.log(2.0)


def _root_array(rs: RootSystem) -> np.ndarray:
    return np.array([[float(a[0]), float(a[1])] for a in rs.positive_roots])


def _wall_array(rs: RootSystem) -> np.ndarray:
    return np.array([[float(c) for c in rs.wall_normal(i)] for i in range(2)])


def _terms_batch(p: GroupPolytope, data: GuilleminData, points: np.ndarray) -> dict[str, np.ndarray]:
    l = data.distances(points)
    grad = 0.5 * (-(1.0 + np.log(l))) @ data.normals
    hess = 0.5 * np.einsum("na,ai,aj->nij", 1.0 / l, data.normals, data.normals)
    _, log_det = np.linalg.slogdet(hess)
    pi = weight_poly(p.rs).poly(points[:, 0], points[:, 1])
    return {
        "log_det_hessian": log_det,
        "legendre_term": -np.sum(points * grad, axis=1),
        "guillemin": 0.5 * np.sum(l * np.log(l), axis=1),
        "log_j": 2.0 * np.sum(log_abs_sinh(grad @ _root_array(p.rs).T), axis=1),
        "neg_log_pi": -np.log(pi),
    }


def _check_domain(p: GroupPolytope, data: GuilleminData, point: np.ndarray) -> None:
    if np.any(point @ _wall_array(p.rs).T <= 0):
        raise DomainError("h0 is evaluated off the Weyl walls only")
    if np.any(data.distances(point) <= 0):
        raise DomainError("point is not strictly inside 2P")


def h0_terms(p: GroupPolytope, y: Sequence[float]) -> H0Terms:
    data = GuilleminData.from_polytope(p)
    point = np.asarray([[float(y[0]), float(y[1])]])
    _check_domain(p, data, point)
    terms = _terms_batch(p, data, point)
    return H0Terms(**{name: float(values[0]) for name, values in terms.items()})


def h0_eval(p: GroupPolytope, y: Sequence[float]) -> float:
    return h0_terms(p, y).total


def h0_scan(p: GroupPolytope, n: int, margin: float = 1e-3) -> pd.DataFrame:
    """h0 on an n x n grid over 2P+, keeping margin * diameter away from its boundary."""

    if n < 2:
        raise ValueError("grid size must be at least 2")
    cell = polytopes.scale(p, 2).cell
    verts = np.array([[float(v[0]), float(v[1])] for v in cell.vertices])
    diameter = float(np.max(np.linalg.norm(verts[:, None, :] - verts[None, :, :], axis=2)))
    gap = margin * diameter

    xs = np.linspace(verts[:, 0].min(), verts[:, 0].max(), n)
    ys = np.linspace(verts[:, 1].min(), verts[:, 1].max(), n)
    gx, gy = np.meshgrid(xs, ys)
    points = np.column_stack([gx.ravel(), gy.ravel()])

    data = GuilleminData.from_polytope(p)
    walls = _wall_array(p.rs)
    wall_dist = (points @ walls.T) / np.linalg.norm(walls, axis=1)
    facet_dist = data.distances(points) / np.linalg.norm(data.normals, axis=1)
    keep = np.all(wall_dist > gap, axis=1) & np.all(facet_dist > gap, axis=1)
    points = points[keep]

    values = sum(_terms_batch(p, data, points).values()) if len(points) else np.empty(0)
    frame = pd.DataFrame({"y1": points[:, 0], "y2": points[:, 1], "h0": values})
    logger.debug("h0 scan n=%d kept %d points, range [%.4g, %.4g]", n, len(frame), frame.h0.min(), frame.h0.max())
    return frame


def classify_boundary(p: GroupPolytope) -> BoundaryReport:
    """Label each vertex and edge of the boundary of 2P+ by its Ricci-potential case.

    A facet meeting a Weyl wall non-orthogonally keeps h0 bounded exactly when
    the root of that wall pairs to 1 with the facet normal.
    """

    rs = p.rs
    cell = polytopes.scale(p, 2).cell
    features: list[BoundaryFeature] = []

    for start, end, label in cell.edges():
        case = CaseLabel.C2 if isinstance(label, WallEdge) else CaseLabel.C1
        features.append(BoundaryFeature(kind="edge", location=(start, end), case_label=case))

    for index, vertex in enumerate(cell.vertices):
        arriving, leaving = cell.incident_labels(index)
        walls = [lab for lab in (arriving, leaving) if isinstance(lab, WallEdge)]
        facets = [lab for lab in (arriving, leaving) if isinstance(lab, FacetEdge)]
        if len(walls) == 2:
            features.append(BoundaryFeature(kind="vertex", location=(vertex,), case_label=CaseLabel.C2))
            continue
        if len(facets) == 2:
            features.append(BoundaryFeature(kind="vertex", location=(vertex,), case_label=CaseLabel.C1))
            continue
        wall, facet = walls[0].index, facets[0].facet
        pairing = int(la.dot(rs.simple_roots[wall], facet.u))
        u2 = facet.normal_ints()
        if pairing == 0:
            features.append(
                BoundaryFeature(
                    kind="vertex",
                    location=(vertex,),
                    case_label=CaseLabel.C3_1,
                    alpha0=wall,
                    u2=u2,
                    pairing=0,
                )
            )
            continue
        verdict = Boundedness.BOUNDED if pairing == 1 else Boundedness.DIVERGES
        features.append(
            BoundaryFeature(
                kind="vertex",
                location=(vertex,),
                case_label=CaseLabel.C3_2,
                verdict=verdict,
                alpha0=wall,
                u2=u2,
                pairing=pairing,
            )
        )

    report = BoundaryReport(features=tuple(features))
    logger.info("boundary classification: %d features, uniformly bounded=%s", len(features), report.uniformly_bounded)
    return report


def approach_feature(
    p: GroupPolytope, feature: BoundaryFeature, depths: Iterable[int] = (2, 4, 6, 8)
) -> list[tuple[float, float]]:
    """h0 along the straight approach from the centroid of 2P+ to a feature.

    Returns (distance, h0) pairs at distances 10**-k.
    """

    cell = polytopes.scale(p, 2).cell
    verts = np.array([[float(v[0]), float(v[1])] for v in cell.vertices])
    centroid = verts.mean(axis=0)
    target = np.array([float(feature.point[0]), float(feature.point[1])])
    direction = centroid - target
    direction /= np.linalg.norm(direction)

    samples: list[tuple[float, float]] = []
    for k in depths:
        eps = 10.0 ** (-k)
        y = target + eps * direction
        samples.append((eps, h0_eval(p, y)))
    return samples
