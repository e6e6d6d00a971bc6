"""Conservative time integration of the PDE.

Strang splitting: the nonlinear subflow only rotates the phase of each node
(|u| is pointwise invariant) and is solved exactly; the linear subflow
(free Laplacian plus the discrete point interaction) is advanced by
Crank-Nicolson with a tridiagonal solve.  The composition preserves the
discrete charge to solver roundoff and the energy to O(dt^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_banded

from .functionals import ComplexField, Diagnostics, Grid, energy, action_G, lp_norm, orbital_distance, sample
from .model import ModelParams
from .profiles import Profile


@dataclass(frozen=True)
class EvolutionConfig:
    grid: Grid
    dt: float
    t_final: float
    record_every: int = 1

    def __post_init__(self) -> None:
        if self.dt == 0.0:
            raise ValueError("dt must be nonzero")
        if self.t_final < 0.0:
            raise ValueError("t_final must be nonnegative")
        if self.record_every < 1:
            raise ValueError("record_every must be >= 1")


@dataclass(frozen=True)
class Trajectory:
    snapshots: list[tuple[float, ComplexField]]
    diagnostics: list[Diagnostics]

    @property
    def final_state(self) -> ComplexField:
        return self.snapshots[-1][1]


def linear_half_generator(grid: Grid, Z: float) -> tuple[np.ndarray, np.ndarray]:
    """(diagonal, off-diagonal) of the symmetric tridiagonal operator H.

    H discretizes -d^2/dx^2 - Z delta(x) with homogeneous Dirichlet ends; the
    delta is the standard weight 1/h at the center node, so the center
    diagonal entry is 2/h^2 - Z/h.
    """
    h = grid.spacing
    diag = np.full(grid.n_points, 2.0 / h**2)
    diag[grid.center_index] -= Z / h
    off = np.full(grid.n_points - 1, -1.0 / h**2)
    return diag, off


def smallest_eigenvalue(grid: Grid, Z: float) -> float:
    from scipy.linalg import eigh_tridiagonal

    diag, off = linear_half_generator(grid, Z)
    vals = eigh_tridiagonal(diag, off, select="i", select_range=(0, 0), eigvals_only=True)
    return float(vals[0])


class _CrankNicolsonSolver:
    """Cached banded factors for (I + i dt/2 H) u+ = (I - i dt/2 H) u.

    The two end nodes are frozen at their current values (inhomogeneous
    Dirichlet).  For exponentially localized states this is indistinguishable
    from a homogeneous Dirichlet box; for the algebraically decaying
    equilibrium it removes the spurious O(phi(L)/h^2) boundary residual that
    a hard zero wall would inject.
    """

    def __init__(self, grid: Grid, Z: float, dt: float):
        diag, off = linear_half_generator(grid, Z)
        z = 0.5j * dt
        n = grid.n_points
        self.ab = np.zeros((3, n), dtype=complex)
        self.ab[0, 1:] = z * off
        self.ab[1, :] = 1.0 + z * diag
        self.ab[2, :-1] = z * off
        # identity rows for the frozen ends
        self.ab[1, 0] = 1.0
        self.ab[1, -1] = 1.0
        self.ab[0, 1] = 0.0
        self.ab[2, -2] = 0.0
        self.diag = diag
        self.off = off
        self.z = z

    def step(self, u: np.ndarray) -> np.ndarray:
        rhs = (1.0 - self.z * self.diag) * u
        rhs[:-1] -= self.z * self.off * u[1:]
        rhs[1:] -= self.z * self.off * u[:-1]
        rhs[0] = u[0]
        rhs[-1] = u[-1]
        return solve_banded((1, 1), self.ab, rhs)


def _nonlinear_phase(
    u: np.ndarray, params: ModelParams, tau: float, grid: Grid | None = None
) -> np.ndarray:
    """Exact subflow of i u_t + (lambda1 |u|^(p-1) + lambda2 |u|^(2p-2)) u = 0.

    When a grid is given, the center node's rotation rate carries a
    well-balanced correction for the point interaction.  For fields in the
    operator domain (derivative jump -Z u(0) across x=0) the 3-point stencil
    at the center has truncation error (h/6)[u'''] with

        [u'''] = i Z u_t(0) + Z (2 s F'(s) + F(s)) u(0),   s = |u(0)|^2,

    where F(s) = lambda1 s^((p-1)/2) + lambda2 s^(p-1) is the nonlinear
    coefficient.  The second term is a real multiple of u(0), so it is
    absorbed exactly into the center phase:

        F_eff(s) = F(s) - (Z h / 6) (p lambda1 s^((p-1)/2)
                                     + (2p-1) lambda2 s^(p-1)).

    The rotation leaves |u| invariant, so charge conservation and the
    time-reversibility of the splitting are untouched; the small remaining
    i Z u_t(0) part of the jump is left uncorrected.
    """
    mod2 = np.abs(u) ** 2
    half = (params.p - 1.0) / 2.0
    f = params.lambda1 * mod2**half + params.lambda2 * mod2 ** (params.p - 1.0)
    if grid is not None:
        c = grid.center_index
        s = mod2[c]
        f = np.asarray(f, dtype=float).copy()
        f[0] = 0.0  # ends are frozen, matching the linear step
        f[-1] = 0.0
        f[c] -= (
            params.Z
            * grid.spacing
            / 6.0
            * (params.p * params.lambda1 * s**half
               + (2.0 * params.p - 1.0) * params.lambda2 * s ** (params.p - 1.0))
        )
    return u * np.exp(1j * f * tau)


def step_strang(u: ComplexField, config: EvolutionConfig, params: ModelParams) -> ComplexField:
    """One Strang step: half nonlinear rotation, CN linear step, half rotation."""
    solver = _CrankNicolsonSolver(u.grid, params.Z, config.dt)
    v = _nonlinear_phase(u.values, params, config.dt / 2.0, u.grid)
    v = solver.step(v)
    v = _nonlinear_phase(v, params, config.dt / 2.0, u.grid)
    return ComplexField(u.grid, v)


def evolve(
    u0: ComplexField,
    config: EvolutionConfig,
    params: ModelParams,
    reference: Profile | ComplexField | None = None,
    snapshot_every: int | None = None,
) -> Trajectory:
    """Iterate Strang steps to t_final, recording diagnostics.

    Diagnostics (charge, energy, action, orbital distance to the reference
    orbit when one is supplied) are recorded every ``record_every`` steps.
    Snapshots are kept sparsely; the final state is always retained.
    """
    grid = u0.grid
    if isinstance(reference, Profile):
        ref_field = sample(grid, reference.eval)
        omega_ref = reference.omega
    elif reference is not None:
        ref_field = reference
        omega_ref = 0.0
    else:
        ref_field = None
        omega_ref = 0.0

    solver = _CrankNicolsonSolver(grid, params.Z, config.dt)
    n_steps = int(round(config.t_final / config.dt))

    def diag_at(t: float, fld: ComplexField) -> Diagnostics:
        dist = orbital_distance(fld, ref_field)[0] if ref_field is not None else float("nan")
        return Diagnostics(
            t=t,
            charge=lp_norm(fld, 2.0) ** 2,
            energy=energy(fld, params),
            action=action_G(fld, params, omega_ref),
            orbital_dist=dist,
        )

    u = u0.values.copy()
    snapshots = [(0.0, u0)]
    diagnostics = [diag_at(0.0, u0)]
    for step in range(1, n_steps + 1):
        u = _nonlinear_phase(u, params, config.dt / 2.0, grid)
        u = solver.step(u)
        u = _nonlinear_phase(u, params, config.dt / 2.0, grid)
        t = step * config.dt
        if not np.all(np.isfinite(u)):
            raise RuntimeError(f"non-finite state at t = {t}: evolution aborted")
        if step % config.record_every == 0 or step == n_steps:
            diagnostics.append(diag_at(t, ComplexField(grid, u.copy())))
        if snapshot_every is not None and (step % snapshot_every == 0 or step == n_steps):
            snapshots.append((t, ComplexField(grid, u.copy())))
    if snapshots[-1][0] != n_steps * config.dt and n_steps > 0:
        snapshots.append((n_steps * config.dt, ComplexField(grid, u.copy())))
    return Trajectory(snapshots=snapshots, diagnostics=diagnostics)
