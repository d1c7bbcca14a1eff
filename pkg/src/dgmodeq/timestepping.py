"""Explicit SSP time integrators over field-like states.

A state only needs a read-only .data ndarray and a .with_data(array)
constructor, so modal fields, average fields and scalar test states all
step through the same code.  The right-hand side is a callable
rhs(state, t) returning a state of the same kind.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Protocol, TypeVar

import numpy as np

METHODS = ("euler", "ssprk2", "ssprk3")


class FieldLike(Protocol):
    @property
    def data(self) -> np.ndarray: ...

    def with_data(self, arr: np.ndarray) -> "FieldLike": ...


S = TypeVar("S", bound=FieldLike)


@dataclass(frozen=True)
class Integrator:
    """Forward Euler or the optimal 2/3-stage SSP Runge-Kutta methods.

    integrate() advances to t_final with dt = cfl*dx, shortening only the
    last step to land on t_final exactly.
    """

    method: str = "ssprk3"
    cfl: float = 0.1
    t_final: float = 1.0

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if not self.cfl > 0.0:
            raise ValueError(f"cfl must be positive, got {self.cfl}")
        if self.t_final < 0.0:
            raise ValueError(f"t_final must be nonnegative, got {self.t_final}")

    def step(self, state: S, rhs: Callable[[S, float], S], dt: float, t: float = 0.0) -> S:
        """One step of the chosen method from time t."""
        y = state.data
        k1 = rhs(state, t).data
        y1 = y + dt * k1
        if self.method == "euler":
            return state.with_data(y1)
        s1 = state.with_data(y1)
        k2 = rhs(s1, t + dt).data
        if self.method == "ssprk2":
            return state.with_data(0.5 * (y + y1 + dt * k2))
        # ssprk3, Shu-Osher convex form
        y2 = 0.75 * y + 0.25 * (y1 + dt * k2)
        s2 = state.with_data(y2)
        k3 = rhs(s2, t + 0.5 * dt).data
        return state.with_data(y / 3.0 + (2.0 / 3.0) * (y2 + dt * k3))

    def integrate(self, state: S, rhs: Callable[[S, float], S]) -> tuple[S, int]:
        """March to t_final; returns (final state, number of steps taken).

        Aborts with RuntimeError naming the step index if the state stops
        being finite (e.g. an unstable cfl).
        """
        mesh = getattr(state, "mesh", None)
        if mesh is None:
            raise ValueError("integrate() needs a state with a mesh to size dt")
        dt_nominal = self.cfl * mesh.dx
        # FP-dust guard: never take a step smaller than this to reach t_final.
        tiny = 1e-12 * max(1.0, self.t_final)
        t = 0.0
        n_steps = 0
        # Overflow en route to the finiteness check below is expected for
        # unstable runs; the RuntimeError is the diagnostic, not the warning.
        with np.errstate(over="ignore", invalid="ignore"):
            while t < self.t_final - tiny:
                dt = min(dt_nominal, self.t_final - t)
                state = self.step(state, rhs, dt, t)
                n_steps += 1
                if not np.all(np.isfinite(state.data)):
                    raise RuntimeError(
                        f"non-finite state after step {n_steps} (t = {t + dt:.6g}); "
                        "the run is unstable at this cfl"
                    )
                t += dt
        return state, n_steps
