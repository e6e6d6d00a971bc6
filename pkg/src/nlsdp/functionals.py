"""Discrete quadrature of the conserved and variational functionals.

All functionals live on a uniform symmetric grid with a node exactly at the
origin (where the point defect sits).  Quadrature is trapezoid; the gradient
term is integrated piecewise on [-L, 0] and [0, L] because stationary
profiles have a derivative kink at the defect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .model import ModelParams


@dataclass(frozen=True)
class Grid:
    """Uniform symmetric mesh on [-L, L] with an odd number of nodes."""

    half_width: float
    n_points: int
    nodes: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.half_width <= 0.0:
            raise ValueError("half_width must be positive")
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise ValueError("n_points must be odd and >= 3 so that x = 0 is a node")
        object.__setattr__(
            self, "nodes", np.linspace(-self.half_width, self.half_width, self.n_points)
        )

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.n_points - 1)

    @property
    def center_index(self) -> int:
        return (self.n_points - 1) // 2

    @classmethod
    def from_spacing(cls, half_width: float, spacing: float) -> "Grid":
        half_n = max(1, int(round(half_width / spacing)))
        return cls(half_width=half_n * spacing, n_points=2 * half_n + 1)


@dataclass(frozen=True)
class ComplexField:
    """Complex samples on a grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.grid.n_points,):
            raise ValueError(f"field shape {vals.shape} does not match grid ({self.grid.n_points},)")
        if not np.all(np.isfinite(vals)):
            raise ValueError("field contains non-finite entries")
        object.__setattr__(self, "values", vals)

    @property
    def at_zero(self) -> complex:
        return complex(self.values[self.grid.center_index])


@dataclass(frozen=True)
class Diagnostics:
    """Per-time conserved/variational quantities of an evolving field."""

    t: float
    charge: float
    energy: float
    action: float
    orbital_dist: float


def sample(grid: Grid, func) -> ComplexField:
    return ComplexField(grid, np.asarray(func(grid.nodes), dtype=complex))


def trapezoid_weights(n: int) -> np.ndarray:
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    return w


def lp_norm(v: ComplexField, q: float) -> float:
    """(integral |v|^q)^(1/q) by trapezoid quadrature."""
    if q < 1.0:
        raise ValueError(f"exponent must be >= 1, got {q}")
    h = v.grid.spacing
    w = trapezoid_weights(v.grid.n_points)
    return float((h * np.sum(w * np.abs(v.values) ** q)) ** (1.0 / q))


def h1_deriv(v: ComplexField) -> ComplexField:
    """Second-order discrete derivative: centered interior, one-sided ends."""
    u = v.values
    h = v.grid.spacing
    d = np.empty_like(u)
    d[1:-1] = (u[2:] - u[:-2]) / (2.0 * h)
    d[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h)
    d[-1] = (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * h)
    return ComplexField(v.grid, d)


def _half_derivative(u: np.ndarray, h: float) -> np.ndarray:
    """Second-order derivative of samples on one half-interval."""
    d = np.empty_like(u)
    d[1:-1] = (u[2:] - u[:-2]) / (2.0 * h)
    d[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h)
    d[-1] = (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * h)
    return d


def gradient_sq(v: ComplexField) -> float:
    """||v_x||^2 with the integral split at the defect node.

    Differentiation and trapezoid quadrature are done separately on [-L, 0]
    and [0, L]; this keeps O(h^2) accuracy for profiles with a kink at 0.
    """
    h = v.grid.spacing
    c = v.grid.center_index
    total = 0.0
    for half in (v.values[: c + 1], v.values[c:]):
        d = _half_derivative(half, h)
        w = trapezoid_weights(len(half))
        total += float(h * np.sum(w * np.abs(d) ** 2))
    return total


def delta_form(v: ComplexField, Z: float) -> float:
    """Quadratic form of the point-interaction operator: ||v_x||^2 - Z |v(0)|^2."""
    return gradient_sq(v) - Z * abs(v.at_zero) ** 2


def energy(v: ComplexField, params: ModelParams) -> float:
    """E(v) = ||v_x||^2/2 - Z|v(0)|^2/2 - lambda1 ||v||_{p+1}^{p+1}/(p+1) - lambda2 ||v||_{2p}^{2p}/(2p)."""
    p = params.p
    return (
        0.5 * delta_form(v, params.Z)
        - params.lambda1 / (p + 1.0) * lp_norm(v, p + 1.0) ** (p + 1.0)
        - params.lambda2 / (2.0 * p) * lp_norm(v, 2.0 * p) ** (2.0 * p)
    )


def action_G(v: ComplexField, params: ModelParams, omega: float) -> float:
    """G_omega(v) = E(v) - (omega/2) ||v||^2."""
    return energy(v, params) - 0.5 * omega * lp_norm(v, 2.0) ** 2


def functional_R(v: ComplexField, params: ModelParams) -> float:
    """R(v) = E(v) + lambda1 ||v||_{p+1}^{p+1}/(p+1)  (drops the subcritical term)."""
    p = params.p
    return energy(v, params) + params.lambda1 / (p + 1.0) * lp_norm(v, p + 1.0) ** (p + 1.0)


def functional_Rtilde(v: ComplexField, params: ModelParams) -> float:
    """R~(v) = E(v) + lambda2 ||v||_{2p}^{2p}/(2p)  (drops the top-power term)."""
    p = params.p
    return energy(v, params) + params.lambda2 / (2.0 * p) * lp_norm(v, 2.0 * p) ** (2.0 * p)


def functional_I(v: ComplexField, omega: float) -> float:
    """I_omega(v) = ||v_x||^2/2 - (omega/2)||v||^2 >= 0 for omega <= 0."""
    return 0.5 * gradient_sq(v) - 0.5 * omega * lp_norm(v, 2.0) ** 2


def x_space_norm(v: ComplexField, params: ModelParams) -> float:
    """sqrt(||v||_{p+1}^{p+1} + ||v||_{2p}^{2p} + ||v_x||^2)."""
    p = params.p
    return math.sqrt(
        lp_norm(v, p + 1.0) ** (p + 1.0) + lp_norm(v, 2.0 * p) ** (2.0 * p) + gradient_sq(v)
    )


def h1_inner(u: ComplexField, w: ComplexField) -> complex:
    """Complex H^1 pairing integral (u conj(w) + u_x conj(w_x)).

    Uses the same full-grid derivative and trapezoid quadrature as h1_deriv
    and lp_norm, so the phase minimizer below is exact for the discrete
    distance built from them.
    """
    if u.grid != w.grid:
        raise ValueError("fields live on different grids")
    h = u.grid.spacing
    tw = trapezoid_weights(u.grid.n_points)
    du = h1_deriv(u).values
    dw = h1_deriv(w).values
    return complex(h * np.sum(tw * (u.values * np.conj(w.values) + du * np.conj(dw))))


def h1_norm(u: ComplexField) -> float:
    return math.sqrt(max(h1_inner(u, u).real, 0.0))


def orbital_distance(u: ComplexField, phi: ComplexField) -> tuple[float, float]:
    """(min over theta of ||u - e^{i theta} phi||_{H^1}, minimizing theta).

    Closed form: theta* = arg <u, phi>_{H^1} and the squared minimum is
    ||u||^2 + ||phi||^2 - 2 |<u, phi>|.
    """
    pairing = h1_inner(u, phi)
    theta = math.atan2(pairing.imag, pairing.real)
    sq = h1_inner(u, u).real + h1_inner(phi, phi).real - 2.0 * abs(pairing)
    return math.sqrt(max(sq, 0.0)), theta


def delta_eigenfunction(Z: float, grid: Grid) -> ComplexField:
    """Normalized bound state of the point-interaction operator: sqrt(Z/2) e^{-Z|x|/2}."""
    if Z <= 0.0:
        raise ValueError(f"bound state exists only for Z > 0, got {Z}")
    return ComplexField(grid, np.sqrt(Z / 2.0) * np.exp(-Z / 2.0 * np.abs(grid.nodes)))


def coercivity_constant(params: ModelParams) -> float:
    """Constant C with (Z/2)|v(0)|^2 <= R(v) + C for all H^1 fields.

    Follows the localization/Young chain:
      |v(0)|^2 <= ||v||^2_{L2(-1,1)}/2 + 2 ||v|| ||v_x||_{L2(-1,1)},
      Z|v(0)|^2 <= ||v_x||^2/2 + C1 ||v||^2_{L2(-1,1)},  C1 = 2 Z^2 + Z/2,
      ||v||^2_{L2(-1,1)} <= delta ||v||_{2p}^{2p} + 2 C_delta,
    with delta = -lambda2 / (2 p C1), giving C = 2 C1 C_delta.
    """
    if params.Z <= 0.0 or params.lambda2 >= 0.0:
        raise ValueError("coercivity bound needs Z > 0 and lambda2 < 0")
    p = params.p
    Z = params.Z
    c1 = 2.0 * Z**2 + Z / 2.0
    delta = -params.lambda2 / (2.0 * p * c1)
    m = 2.0 ** ((p - 1.0) / p)  # Hoelder constant on (-1, 1)
    c_delta = 0.5 * (p - 1.0) / p * m ** (p / (p - 1.0)) * (p * delta) ** (-1.0 / (p - 1.0))
    return 2.0 * c1 * c_delta
