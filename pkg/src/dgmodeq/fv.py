"""Finite-volume baselines: first-order upwind and unlimited second order.

These exist purely as convergence-rate references for the modal schemes.
Slopes for the second-order scheme come in the two classical flavors,

    central:  s_j = (ubar_{j+1} - ubar_{j-1}) / 2
    upwind:   s_j =  ubar_j - ubar_{j-1}

with the interface value u_{j+1/2} = ubar_j + s_j/2 and no limiter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basis import gauss_legendre_halfcell
from .field import DEFAULT_QUAD_NODES, Norms
from .mesh import Mesh1D

SLOPE_CHOICES = ("central", "upwind")


@dataclass(frozen=True)
class AverageField:
    """Cell averages (n_cells,) over a periodic mesh; immutable value object."""

    mesh: Mesh1D
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=float)
        if arr.shape != (self.mesh.n_cells,):
            raise ValueError(f"average shape {arr.shape} != ({self.mesh.n_cells},)")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def data(self) -> np.ndarray:
        return self.values

    def with_data(self, arr: np.ndarray) -> AverageField:
        return AverageField(self.mesh, arr)


def project_averages(
    f: Callable[[np.ndarray], np.ndarray],
    mesh: Mesh1D,
    n_quad: int = DEFAULT_QUAD_NODES,
) -> AverageField:
    """Exact-to-quadrature cell averages of f."""
    nodes, weights = gauss_legendre_halfcell(n_quad)
    points = mesh.centers[:, None] + nodes[None, :] * mesh.dx
    samples = np.broadcast_to(np.asarray(f(points), dtype=float), points.shape)
    if not np.all(np.isfinite(samples)):
        bad = np.argwhere(~np.isfinite(samples))[0]
        raise ValueError(f"initial data is not finite in cell {int(bad[0])}")
    return AverageField(mesh, samples @ weights)


def rhs_fv1(field: AverageField) -> AverageField:
    """First-order upwind: d ubar_j/dt = -(ubar_j - ubar_{j-1})/dx."""
    u = field.values
    return field.with_data(-(u - np.roll(u, 1)) / field.mesh.dx)


def rhs_fv2(field: AverageField, slope: str = "central") -> AverageField:
    """Unlimited second-order reconstruction with upwind interface flux."""
    if slope not in SLOPE_CHOICES:
        raise ValueError(f"slope must be one of {SLOPE_CHOICES}, got {slope!r}")
    u = field.values
    if slope == "central":
        s = 0.5 * (np.roll(u, -1) - np.roll(u, 1))
    else:
        s = u - np.roll(u, 1)
    u_face = u + 0.5 * s  # value at the right edge of each cell
    return field.with_data(-(u_face - np.roll(u_face, 1)) / field.mesh.dx)


def total_variation(field: AverageField) -> float:
    u = field.values
    return float(np.sum(np.abs(u - np.roll(u, 1))))


def average_error_norms(
    field: AverageField,
    f_exact: Callable[[np.ndarray], np.ndarray],
    n_quad: int = DEFAULT_QUAD_NODES,
) -> Norms:
    """Discrete norms of (averages - exact cell averages)."""
    exact = project_averages(f_exact, field.mesh, n_quad)
    diff = field.values - exact.values
    dx = field.mesh.dx
    return Norms(
        float(np.sum(np.abs(diff)) * dx),
        float(np.sqrt(np.sum(diff * diff) * dx)),
        float(np.max(np.abs(diff))),
    )
