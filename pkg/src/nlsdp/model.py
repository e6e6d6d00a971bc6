"""Equation parameters and existence/nonexistence regime classification.

The model is the 1-D Schroedinger equation

    i u_t + u_xx + Z delta(x) u + lambda1 |u|^(p-1) u + lambda2 |u|^(2p-2) u = 0

with a repulsive double-power nonlinearity (lambda1 <= 0, lambda2 < 0) and an
attractive point defect of strength Z > 0.  Standing waves u = exp(-i omega t)
phi(x) exist exactly on an open window of frequencies; everything downstream
(profile construction, evolution, minimization) is gated on the verdict
returned here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ModelParams:
    """Static coefficients (p, lambda1, lambda2, Z) of the equation.

    Only p > 1 is enforced at construction; sign conditions on the
    nonlinearity coefficients are regime questions answered by
    ``classify_regime``.
    """

    p: float
    lambda1: float
    lambda2: float
    Z: float

    def __post_init__(self) -> None:
        if not self.p > 1.0:
            raise ValueError(f"exponent p must exceed 1, got {self.p}")


@dataclass(frozen=True)
class FrequencyParams:
    """Wave frequency parameter; admissibility is checked by classify_regime."""

    omega: float


class RegimeTag(enum.Enum):
    STANDING_WAVE_EXISTS = "StandingWaveExists"
    EQUILIBRIUM_EXISTS = "EquilibriumExists"
    EMPTY_OMEGA_PLUS_Z_SQUARED_OVER_4_NONPOSITIVE = "EmptyOmegaPlusZSquaredOver4Nonpositive"
    EMPTY_OMEGA_POSITIVE = "EmptyOmegaPositive"
    EMPTY_Z_NONPOSITIVE = "EmptyZNonpositive"
    EMPTY_OMEGA_BELOW_THRESHOLD = "EmptyOmegaBelowThreshold"
    EMPTY_NOT_SQUARE_INTEGRABLE = "EmptyNotSquareIntegrable"


@dataclass(frozen=True)
class RegimeVerdict:
    tag: RegimeTag
    detail: str

    @property
    def exists(self) -> bool:
        return self.tag in (RegimeTag.STANDING_WAVE_EXISTS, RegimeTag.EQUILIBRIUM_EXISTS)


def omega_threshold(params: ModelParams) -> float:
    """Lower admissibility threshold on -omega: -p lambda1^2 / ((p+1)^2 lambda2).

    Requires lambda2 < 0, in which case the value is >= 0 and vanishes iff
    lambda1 = 0.
    """
    if not params.lambda2 < 0.0:
        raise ValueError("threshold defined only for lambda2 < 0")
    p = params.p
    return -p * params.lambda1**2 / ((p + 1.0) ** 2 * params.lambda2)


def classify_regime(params: ModelParams, omega: float) -> RegimeVerdict:
    """Classify (params, omega) into existence or one of the empty regimes.

    Precedence among the (overlapping) nonexistence conditions is fixed:
    omega > 0, then Z <= 0, then omega + Z^2/4 <= 0.  Boundary cases of the
    strict existence inequalities are classified as nonexistent.
    """
    Z = params.Z
    if omega > 0.0:
        return RegimeVerdict(
            RegimeTag.EMPTY_OMEGA_POSITIVE,
            f"no nontrivial decaying profiles for omega = {omega} > 0",
        )
    if Z <= 0.0:
        return RegimeVerdict(
            RegimeTag.EMPTY_Z_NONPOSITIVE,
            f"no profiles for repulsive coefficients with Z = {Z} <= 0",
        )
    # omega + Z^2/4 <= 0 evaluated as 2 sqrt(-omega) >= Z so that Z^2 cannot
    # underflow for tiny positive Z (here omega <= 0 and Z > 0).
    if 2.0 * math.sqrt(-omega) >= Z:
        return RegimeVerdict(
            RegimeTag.EMPTY_OMEGA_PLUS_Z_SQUARED_OVER_4_NONPOSITIVE,
            f"omega + Z^2/4 = {omega + Z**2 / 4.0} <= 0",
        )
    # From here on: Z > 0 and -Z^2/4 < omega <= 0.
    if omega == 0.0:
        if params.lambda1 < 0.0 and params.lambda2 < 0.0:
            if params.p < 5.0:
                return RegimeVerdict(
                    RegimeTag.EQUILIBRIUM_EXISTS,
                    "rational equilibrium profile exists (omega = 0, 1 < p < 5)",
                )
            return RegimeVerdict(
                RegimeTag.EMPTY_NOT_SQUARE_INTEGRABLE,
                f"omega = 0 profile decays too slowly for p = {params.p} >= 5",
            )
        return RegimeVerdict(
            RegimeTag.EMPTY_OMEGA_BELOW_THRESHOLD,
            "omega = 0 requires strictly negative lambda1 and lambda2",
        )
    # omega < 0: standing-wave window.
    if params.lambda1 <= 0.0 and params.lambda2 < 0.0:
        thr = omega_threshold(params)
        if thr < -omega:
            return RegimeVerdict(
                RegimeTag.STANDING_WAVE_EXISTS,
                f"threshold {thr} < -omega = {-omega} < Z^2/4 = {Z**2 / 4.0}",
            )
        return RegimeVerdict(
            RegimeTag.EMPTY_OMEGA_BELOW_THRESHOLD,
            f"-omega = {-omega} does not exceed threshold {thr}",
        )
    return RegimeVerdict(
        RegimeTag.EMPTY_OMEGA_BELOW_THRESHOLD,
        "standing waves require lambda1 <= 0 and lambda2 < 0",
    )


def admissible_omega_interval(params: ModelParams) -> tuple[float, float] | None:
    """Open interval of admissible omega, or None when it is empty.

    The interval is (-Z^2/4, -threshold) where threshold is
    -p lambda1^2 / ((p+1)^2 lambda2); empty when threshold >= Z^2/4 or the
    sign conditions fail.
    """
    if params.Z <= 0.0 or params.lambda2 >= 0.0 or params.lambda1 > 0.0:
        return None
    thr = omega_threshold(params)
    lo = -params.Z**2 / 4.0
    hi = -thr
    if lo >= hi:
        return None
    return (lo, hi)
