from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ...core.errors import DomainError
from ..polytope import service as polytopes
from ..polytope.models import GroupPolytope


@dataclass(frozen=True)
class GuilleminData:
    """Facets of 2P as arrays, for evaluating u = 1/2 sum l_A log l_A."""

    normals: np.ndarray  # (m, 2)
    constants: np.ndarray  # (m,)

    @classmethod
    def from_polytope(cls, p: GroupPolytope) -> "GuilleminData":
        doubled = polytopes.scale(p, 2)
        facets = doubled.facet_orbit()
        normals = np.array([[float(f.u[0]), float(f.u[1])] for f in facets])
        constants = np.array([float(f.lam) for f in facets])
        return cls(normals=normals, constants=constants)

    def distances(self, points: np.ndarray) -> np.ndarray:
        """l_A at each point; shape (n, m)."""

        return self.constants[None, :] - points @ self.normals.T

    def _checked(self, points: np.ndarray) -> np.ndarray:
        l = self.distances(points)
        if np.any(l <= 0):
            raise DomainError("point is not strictly inside 2P")
        return l

    def value(self, points: np.ndarray) -> np.ndarray:
        l = self._checked(points)
        return 0.5 * np.sum(l * np.log(l), axis=1)

    def gradient(self, points: np.ndarray) -> np.ndarray:
        l = self._checked(points)
        return 0.5 * (-(1.0 + np.log(l))) @ self.normals

    def hessian(self, points: np.ndarray) -> np.ndarray:
        l = self._checked(points)
        return 0.5 * np.einsum("na,ai,aj->nij", 1.0 / l, self.normals, self.normals)


def _as_points(y: Sequence[float]) -> np.ndarray:
    return np.asarray([[float(y[0]), float(y[1])]])


def guillemin_eval(p: GroupPolytope, y: Sequence[float]) -> tuple[float, np.ndarray, np.ndarray]:
    """Value, gradient and Hessian of the Guillemin potential of 2P at y."""

    data = GuilleminData.from_polytope(p)
    points = _as_points(y)
    return float(data.value(points)[0]), data.gradient(points)[0], data.hessian(points)[0]
