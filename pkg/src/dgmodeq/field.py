"""Piecewise-polynomial modal fields: projection, traces, evaluation, norms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .basis import ModalBasis, gauss_legendre_halfcell
from .mesh import Mesh1D

#: Single quadrature rule used for projection and error norms alike.
#: Five Gauss-Legendre nodes integrate degree <= 9 exactly, far past any
#: product of degree <= 2 basis functions.
DEFAULT_QUAD_NODES = 5


@dataclass(frozen=True)
class ModalField:
    """Modal coefficients (n_cells, n_dofs) over a periodic mesh.

    The coefficient array is copied and frozen at construction; fields are
    value objects and every operation returns a new one.
    """

    mesh: Mesh1D
    basis: ModalBasis
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=float)
        expected = (self.mesh.n_cells, self.basis.n_dofs)
        if arr.shape != expected:
            raise ValueError(f"coefficient shape {arr.shape} != {expected}")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def data(self) -> np.ndarray:
        """State-vector view used by the time integrators."""
        return self.coeffs

    def with_data(self, arr: np.ndarray) -> ModalField:
        return ModalField(self.mesh, self.basis, arr)

    def trace_right(self, j: int) -> float:
        """Value at the right edge of cell j (from inside the cell)."""
        return float(self.coeffs[j] @ self.basis.trace_right)

    def trace_left(self, j: int) -> float:
        """Value at the left edge of cell j (from inside the cell)."""
        return float(self.coeffs[j] @ self.basis.trace_left)

    def traces_right(self) -> np.ndarray:
        """Right-edge values of every cell; entry j is the upwind value at
        interface j+1."""
        return self.coeffs @ self.basis.trace_right

    def eval(self, x: np.ndarray | float) -> np.ndarray | float:
        """Pointwise values, periodic in x.

        Interface abscissae are routed through the owning (left) cell's
        trace vector, so eval at (j+1)*dx equals trace_right(j) exactly.
        """
        x_arr = np.asarray(x, dtype=float)
        cells, xi, on_interface = self.mesh.locate(x_arr % 1.0)
        values = np.einsum("...k,...k->...", self.coeffs[cells], self.basis.values(xi))
        if np.any(on_interface):
            traces = self.coeffs[cells] @ self.basis.trace_right
            values = np.where(on_interface, traces, values)
        if np.isscalar(x) or x_arr.ndim == 0:
            return float(values)
        return values

    def cell_averages(self) -> np.ndarray:
        """Mean value per cell; for these bases that is just coefficient 0."""
        return self.coeffs[:, 0].copy()


def project(
    f: Callable[[np.ndarray], np.ndarray],
    mesh: Mesh1D,
    degree: int,
    n_quad: int = DEFAULT_QUAD_NODES,
) -> ModalField:
    """L2 projection of f onto the broken polynomial space of given degree.

    a_m^j = (integral over cell j of f phi_m) / (integral phi_m^2), with the
    integrals done per cell by an n_quad-point Gauss-Legendre rule.
    """
    if n_quad < 4:
        raise ValueError("projection needs at least 4 quadrature nodes per cell")
    basis = ModalBasis(degree)
    nodes, weights = gauss_legendre_halfcell(n_quad)
    points = mesh.centers[:, None] + nodes[None, :] * mesh.dx
    samples = np.broadcast_to(np.asarray(f(points), dtype=float), points.shape)
    if not np.all(np.isfinite(samples)):
        bad = np.argwhere(~np.isfinite(samples))[0]
        raise ValueError(f"initial data is not finite in cell {int(bad[0])}")
    phi = basis.values(nodes)  # (n_quad, n_dofs)
    coeffs = (samples * weights[None, :]) @ phi / basis.mass[None, :]
    return ModalField(mesh, basis, coeffs)


class Norms(NamedTuple):
    l1: float
    l2: float
    linf: float


def error_norms(
    field: ModalField,
    f_exact: Callable[[np.ndarray], np.ndarray],
    n_quad: int = DEFAULT_QUAD_NODES,
) -> Norms:
    """L1/L2/Linf distance between a field and a reference function.

    Uses the same per-cell Gauss-Legendre rule as project; Linf is the
    maximum over all quadrature nodes.
    """
    nodes, weights = gauss_legendre_halfcell(n_quad)
    points = field.mesh.centers[:, None] + nodes[None, :] * field.mesh.dx
    phi = field.basis.values(nodes)
    dx = field.mesh.dx
    # A finite but astronomically large field (late stage of an unstable
    # run) may overflow to inf here; report inf rather than warn.
    with np.errstate(over="ignore"):
        diff = field.coeffs @ phi.T - np.asarray(f_exact(points), dtype=float)
        l1 = float(np.sum(np.abs(diff) @ weights) * dx)
        l2 = float(np.sqrt(np.sum((diff * diff) @ weights) * dx))
        linf = float(np.max(np.abs(diff)))
    return Norms(l1, l2, linf)
