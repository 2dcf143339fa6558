"""Rejection-sampling estimators used to cross-check the exact integrals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..polytope.models import ChamberCell
from ..rootsys.models import RootSystem, weight_poly
from .piecewise import PLFunction

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class MonteCarloEstimate:
    value: float
    stderr: float
    samples: int

    def agrees_with(self, exact: float, sigmas: float = 3.0) -> bool:
        return abs(self.value - exact) <= sigmas * self.stderr


def inside_mask(cell: ChamberCell, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Points on the closed inner side of every edge of a counterclockwise cell."""

    mask = np.ones(xs.shape, dtype=bool)
    for start, end, _ in cell.edges():
        sx, sy = float(start[0]), float(start[1])
        ex, ey = float(end[0]), float(end[1])
        mask &= (ex - sx) * (ys - sy) - (ey - sy) * (xs - sx) >= 0
    return mask


def _estimate(
    cell: ChamberCell,
    integrand: Callable[[np.ndarray, np.ndarray], np.ndarray],
    samples: int,
    seed: int,
) -> MonteCarloEstimate:
    (x0, y0), (x1, y1) = (tuple(float(c) for c in corner) for corner in cell.bounding_box())
    rng = np.random.default_rng(seed)
    xs = rng.uniform(x0, x1, samples)
    ys = rng.uniform(y0, y1, samples)
    box = (x1 - x0) * (y1 - y0)
    values = np.where(inside_mask(cell, xs, ys), integrand(xs, ys), 0.0) * box
    estimate = MonteCarloEstimate(
        value=float(values.mean()),
        stderr=float(values.std(ddof=1) / np.sqrt(samples)),
        samples=samples,
    )
    logger.debug("monte-carlo estimate %.6g +/- %.2g from %d samples", estimate.value, estimate.stderr, samples)
    return estimate


def mc_weighted_volume(
    cell: ChamberCell, rs: RootSystem, samples: int = 1_000_000, seed: int = DEFAULT_SEED
) -> MonteCarloEstimate:
    pi = weight_poly(rs).poly
    return _estimate(cell, lambda xs, ys: pi(xs, ys), samples, seed)


def mc_integrate_pl(
    cell: ChamberCell, u: PLFunction, rs: RootSystem, samples: int = 1_000_000, seed: int = DEFAULT_SEED
) -> MonteCarloEstimate:
    pi = weight_poly(rs).poly
    return _estimate(cell, lambda xs, ys: u.evaluate_array(xs, ys) * pi(xs, ys), samples, seed)
