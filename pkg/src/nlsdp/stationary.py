"""Stationarity verification and the shooting oracle.

The closed-form profiles are checked three ways: the interior ODE residual
phi'' + omega phi + lambda1 phi^p + lambda2 phi^(2p-1) on a high-order
stencil, the derivative jump at the defect, and the pointwise first integral
|phi'|^2 + omega phi^2 + 2 alpha phi^(p+1) + beta phi^(2p).  Independently,
the half-profile is reconstructed by integrating the initial value problem
from the peak value c0 (the unique positive root of the peak polynomial) with
slope -Z c0 / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, RegimeTag, classify_regime
from .profiles import Profile, alpha_beta


@dataclass(frozen=True)
class ResidualReport:
    max_interior_residual: float
    jump_residual: float
    first_integral_max: float
    half_width: float
    spacing: float

    def as_dict(self) -> dict:
        return {
            "max_interior_residual": self.max_interior_residual,
            "jump_residual": self.jump_residual,
            "first_integral_max": self.first_integral_max,
            "half_width": self.half_width,
            "spacing": self.spacing,
        }


def nonlinearity(params: ModelParams, phi: np.ndarray) -> np.ndarray:
    """lambda1 phi^p + lambda2 phi^(2p-1) for positive phi."""
    p = params.p
    return params.lambda1 * phi**p + params.lambda2 * phi ** (2.0 * p - 1.0)


def interior_residual(
    profile: Profile, half_width: float = 20.0, spacing: float = 1e-3
) -> ResidualReport:
    """Residual report for a profile on |x| in [2*spacing, half_width].

    phi'' is approximated by the 5-point O(h^4) stencil on closed-form
    samples; the stencil never straddles the kink at the origin.
    """
    h = spacing
    x = np.arange(2.0 * h, half_width, h)
    x = np.concatenate([-x[::-1], x])
    stencil = (
        -profile.eval(x - 2.0 * h)
        + 16.0 * profile.eval(x - h)
        - 30.0 * profile.eval(x)
        + 16.0 * profile.eval(x + h)
        - profile.eval(x + 2.0 * h)
    ) / (12.0 * h**2)
    phi = profile.eval(x)
    res = stencil + profile.omega * phi + nonlinearity(profile.params, phi)
    return ResidualReport(
        max_interior_residual=float(np.max(np.abs(res))),
        jump_residual=jump_residual(profile),
        first_integral_max=first_integral_residual(profile, half_width, spacing),
        half_width=half_width,
        spacing=h,
    )


def jump_residual(profile: Profile) -> float:
    """|phi'(0+) - phi'(0-) + Z phi(0)| / (Z phi(0))."""
    peak = float(profile.eval(0.0))
    jump = float(profile.derivative(0.0, +1)) - float(profile.derivative(0.0, -1))
    return abs(jump + profile.params.Z * peak) / (profile.params.Z * peak)


def first_integral_residual(
    profile: Profile, half_width: float = 20.0, spacing: float = 1e-3
) -> float:
    """Max relative violation of |phi'|^2 + omega phi^2 + 2 alpha phi^(p+1) + beta phi^(2p)."""
    p = profile.params.p
    alpha, beta = alpha_beta(profile.params)
    x = np.arange(spacing, half_width, spacing)
    x = np.concatenate([-x[::-1], x])
    phi = profile.eval(x)
    dphi = profile.derivative(x)
    res = dphi**2 + profile.omega * phi**2 + 2.0 * alpha * phi ** (p + 1.0) + beta * phi ** (2.0 * p)
    peak = float(profile.eval(0.0))
    scale = max(
        abs(profile.omega) * peak**2,
        2.0 * abs(alpha) * peak ** (p + 1.0),
        abs(beta) * peak ** (2.0 * p),
        float(profile.derivative(0.0, +1)) ** 2,
    )
    return float(np.max(np.abs(res))) / scale


def peak_polynomial(params: ModelParams, omega: float, c) -> float | np.ndarray:
    """P(c) = (Z^2/4 + omega) c^2 / 2 + lambda1 c^(p+1)/(p+1) + lambda2 c^(2p)/(2p)."""
    p = params.p
    c = np.asarray(c, dtype=float)
    out = (
        0.5 * (params.Z**2 / 4.0 + omega) * c**2
        + params.lambda1 / (p + 1.0) * c ** (p + 1.0)
        + params.lambda2 / (2.0 * p) * c ** (2.0 * p)
    )
    return float(out) if out.ndim == 0 else out


def _critical_amplitude(params: ModelParams, omega: float) -> float:
    """Unique critical point a > 0 of the peak polynomial, with P(a) > 0.

    a = r0^(1/(p-1)) where r0 is the positive root of
    lambda2 r^2 + lambda1 r + (Z^2/4 + omega) = 0, computed in the
    cancellation-free form.
    """
    c = params.Z**2 / 4.0 + omega
    disc = params.lambda1**2 - 4.0 * params.lambda2 * c
    r0 = 2.0 * c / (-params.lambda1 + math.sqrt(disc))
    return r0 ** (1.0 / (params.p - 1.0))


def find_c0(params: ModelParams, omega: float) -> float:
    """Unique positive root of the peak polynomial (equals phi(0)).

    Bisection on [a, 2^k a] past the descending crossing, to 1e-13 relative.
    """
    verdict = classify_regime(params, omega)
    if verdict.tag is not RegimeTag.STANDING_WAVE_EXISTS:
        raise ValueError(f"peak root defined only in the standing-wave regime: {verdict.tag.value}")
    a = _critical_amplitude(params, omega)
    lo, hi = a, 2.0 * a
    while peak_polynomial(params, omega, hi) > 0.0:
        lo = hi
        hi *= 2.0
        if hi > 1e9 * a:
            raise RuntimeError("peak polynomial failed to turn negative")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if peak_polynomial(params, omega, mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-14 * hi:
            break
    return 0.5 * (lo + hi)


def closed_form_peak_value(params: ModelParams, omega: float) -> float:
    """Peak value for lambda1 = 0: [p (Z^2/4 + omega) / (-lambda2)]^(1/(2p-2))."""
    if params.lambda1 != 0.0:
        raise ValueError("closed-form root available only for lambda1 = 0")
    p = params.p
    return (p * (params.Z**2 / 4.0 + omega) / (-params.lambda2)) ** (1.0 / (2.0 * p - 2.0))


def energy_density_antiderivative(params: ModelParams, omega: float, c) -> float | np.ndarray:
    """F(c) = integral_0^c (omega t + f(t^2) t) dt, in closed form."""
    p = params.p
    c = np.asarray(c, dtype=float)
    out = (
        0.5 * omega * c**2
        + params.lambda1 / (p + 1.0) * c ** (p + 1.0)
        + params.lambda2 / (2.0 * p) * c ** (2.0 * p)
    )
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ShootingResult:
    x: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray
    c0: float


def shoot_ivp(
    params: ModelParams, omega: float, x_max: float = 10.0, h_ode: float = 1e-4
) -> ShootingResult:
    """Integrate the half-profile IVP outward from the peak (classical RK4).

    Initial data (c0, -Z c0/2); this reconstruction is independent of the
    closed-form profile and serves as its oracle on [0, x_max].  Aborts if the
    trajectory leaves the physically admissible strip.
    """
    c0 = find_c0(params, omega)
    p = params.p
    l1, l2, Z = params.lambda1, params.lambda2, params.Z

    def accel(phi: float) -> float:
        return -(omega * phi + l1 * phi**p + l2 * phi ** (2.0 * p - 1.0))

    n = int(round(x_max / h_ode))
    xs = np.empty(n + 1)
    psis = np.empty(n + 1)
    dpsis = np.empty(n + 1)
    phi, dphi = c0, -Z * c0 / 2.0
    xs[0], psis[0], dpsis[0] = 0.0, phi, dphi
    h = h_ode
    for i in range(1, n + 1):
        k1v = dphi
        k1a = accel(phi)
        k2v = dphi + 0.5 * h * k1a
        k2a = accel(phi + 0.5 * h * k1v)
        k3v = dphi + 0.5 * h * k2a
        k3a = accel(phi + 0.5 * h * k2v)
        k4v = dphi + h * k3a
        k4a = accel(phi + h * k3v)
        phi += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        dphi += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
        if phi < 0.0 or phi > 2.0 * c0:
            raise RuntimeError(
                f"shooting left admissible strip at x = {i * h}: psi = {phi} (wrong regime or root?)"
            )
        xs[i], psis[i], dpsis[i] = i * h, phi, dphi
    return ShootingResult(x=xs, psi=psis, dpsi=dpsis, c0=c0)
