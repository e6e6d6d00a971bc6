"""Phase-plane machinery for the stationary equation.

The stationary ODE phi'' = -omega phi - lambda1 phi^p - lambda2 phi^(2p-1) is
Hamiltonian in the (phi, phi') plane with conserved function
Phi(x, y) = y^2 + omega x^2 + 2 alpha x^(p+1) + beta x^(2p).  Profiles live on
the zero level set; the defect inserts a vertical jump of size Z*phi in phi'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, RegimeTag, classify_regime
from .profiles import Profile, ProfileKind, alpha_beta, equilibrium_profile
from .stationary import find_c0


@dataclass(frozen=True)
class PhasePoint:
    phi: float
    dphi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.phi) and math.isfinite(self.dphi)):
            raise ValueError("phase point must be finite")


def hamiltonian(params: ModelParams, omega: float, pt: PhasePoint) -> float:
    """Phi(x, y) = y^2 + omega x^2 + 2 alpha x^(p+1) + beta x^(2p), x >= 0."""
    alpha, beta = alpha_beta(params)
    x, y = pt.phi, pt.dphi
    return y**2 + omega * x**2 + 2.0 * alpha * x ** (params.p + 1.0) + beta * x ** (2.0 * params.p)


def jump_map(pt: PhasePoint, Z: float) -> PhasePoint:
    """Vertical translation realizing the defect: (phi, phi') -> (phi, phi' - Z phi)."""
    return PhasePoint(pt.phi, pt.dphi - Z * pt.phi)


def _accel(params: ModelParams, omega: float, phi: float) -> float:
    return -(omega * phi + params.lambda1 * phi**params.p + params.lambda2 * phi ** (2.0 * params.p - 1.0))


def _rk4_step(params: ModelParams, omega: float, pt: PhasePoint, h: float) -> PhasePoint:
    x, y = pt.phi, pt.dphi
    k1x, k1y = y, _accel(params, omega, x)
    k2x, k2y = y + 0.5 * h * k1y, _accel(params, omega, x + 0.5 * h * k1x)
    k3x, k3y = y + 0.5 * h * k2y, _accel(params, omega, x + 0.5 * h * k2x)
    k4x, k4y = y + h * k3y, _accel(params, omega, x + h * k3x)
    return PhasePoint(
        x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
        y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
    )


def trace_orbit(
    params: ModelParams,
    omega: float,
    start: PhasePoint,
    arclength: float,
    h: float = 1e-3,
    divergence_scale: float | None = None,
) -> list[PhasePoint]:
    """Integrate the phase flow until the accumulated arclength is reached.

    The cap is on arclength rather than time so that segments near the slow
    saddle come out well resolved.  Aborts on divergence.
    """
    guard = divergence_scale if divergence_scale is not None else 1e3 * max(1.0, abs(start.phi))
    pts = [start]
    travelled = 0.0
    pt = start
    while travelled < arclength:
        nxt = _rk4_step(params, omega, pt, h)
        if math.hypot(nxt.phi, nxt.dphi) > guard:
            raise RuntimeError(f"orbit diverged at (phi, dphi) = ({nxt.phi}, {nxt.dphi})")
        travelled += math.hypot(nxt.phi - pt.phi, nxt.dphi - pt.dphi)
        pts.append(nxt)
        pt = nxt
    return pts


def unstable_manifold_seed(params: ModelParams, omega: float) -> PhasePoint:
    """Seed on the unstable manifold of the origin.

    For omega < 0 the saddle linearization has eigenvector (1, sqrt(-omega));
    the offset is 1e-8 * c0.  For omega = 0 the origin is degenerate, so the
    seed is taken on the closed-form equilibrium orbit far out in the tail.
    """
    verdict = classify_regime(params, omega)
    if verdict.tag is RegimeTag.STANDING_WAVE_EXISTS:
        eps = 1e-8 * find_c0(params, omega)
        return PhasePoint(eps, math.sqrt(-omega) * eps)
    if verdict.tag is RegimeTag.EQUILIBRIUM_EXISTS:
        prof = equilibrium_profile(params)
        x_far = 50.0
        return PhasePoint(float(prof.eval(x_far)), float(-prof.derivative(x_far)))
    raise ValueError(f"no admissible orbit in this regime: {verdict.tag.value}")


@dataclass(frozen=True)
class PhasePortrait:
    unstable: list[PhasePoint]
    jump: list[PhasePoint]
    stable: list[PhasePoint]


def standing_wave_phase_path(
    params: ModelParams,
    omega: float,
    h: float = 1e-3,
    tail_amplitude: float = 1e-6,
) -> PhasePortrait:
    """Composite unstable-branch -> jump -> stable-branch path of the profile.

    The unstable branch is traced from its seed until the amplitude crosses
    the peak value c0 (linear interpolation onto phi = c0) and the jump map is
    applied.  The conserved function is even in phi', so the stable branch is
    the exact mirror image (phi, -phi') of the unstable one traversed in
    reverse; reflecting avoids re-integrating along the branch the saddle
    repels from.  The stable branch is truncated once the amplitude falls
    below ``tail_amplitude`` * c0.
    """
    verdict = classify_regime(params, omega)
    if verdict.tag is RegimeTag.STANDING_WAVE_EXISTS:
        c0 = find_c0(params, omega)
    elif verdict.tag is RegimeTag.EQUILIBRIUM_EXISTS:
        c0 = float(equilibrium_profile(params).eval(0.0))
    else:
        raise ValueError(f"no profile in this regime: {verdict.tag.value}")

    pt = unstable_manifold_seed(params, omega)
    unstable = [pt]
    for _ in range(100_000_000):
        nxt = _rk4_step(params, omega, pt, h)
        if nxt.phi >= c0:
            frac = (c0 - pt.phi) / (nxt.phi - pt.phi)
            y = pt.dphi + frac * (nxt.dphi - pt.dphi)
            unstable.append(PhasePoint(c0, y))
            break
        unstable.append(nxt)
        pt = nxt
    else:
        raise RuntimeError("unstable branch never reached the peak amplitude")

    top = unstable[-1]
    bottom = jump_map(top, params.Z)
    floor = tail_amplitude * c0
    stable = [
        PhasePoint(q.phi, -q.dphi) for q in reversed(unstable) if q.phi >= floor
    ]
    if not stable:
        stable = [bottom]
    return PhasePortrait(unstable=unstable, jump=[top, bottom], stable=stable)
