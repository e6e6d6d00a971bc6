"""Closed-form standing-wave and equilibrium profiles.

Both profiles are even, strictly positive, peak at the origin and satisfy the
derivative jump phi'(0+) - phi'(0-) = -Z phi(0).  The standing-wave profile
(omega < 0) decays like exp(-sqrt(-omega)|x|); the equilibrium profile
(omega = 0) decays algebraically like |x|^(-2/(p-1)).  The matching shift d
that realizes the jump is obtained by numerically inverting a monotone
decreasing map (bracketed bisection plus a Newton polish).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import ModelParams, RegimeTag, classify_regime

# sinh/cosh arguments above this are evaluated in log space to dodge overflow
_LOG_DOMAIN_CUTOFF = 30.0


class ProfileKind(enum.Enum):
    STANDING_WAVE = "StandingWave"
    EQUILIBRIUM = "Equilibrium"


def alpha_beta(params: ModelParams) -> tuple[float, float]:
    """(lambda1/(p+1), lambda2/p)."""
    return params.lambda1 / (params.p + 1.0), params.lambda2 / params.p


def _discriminant(params: ModelParams, omega: float) -> float:
    """omega*beta - alpha^2; positive exactly in the standing-wave window."""
    alpha, beta = alpha_beta(params)
    return omega * beta - alpha**2


def l_omega(params: ModelParams, omega: float) -> float:
    """Blow-up abscissa of the unshifted half-profile; nonpositive."""
    disc = _discriminant(params, omega)
    if disc <= 0.0:
        raise ValueError(f"omega*beta - alpha^2 = {disc} <= 0: outside standing-wave regime")
    alpha, _ = alpha_beta(params)
    return math.asinh(alpha / math.sqrt(disc)) / ((params.p - 1.0) * math.sqrt(-omega))


def R1_eval(params: ModelParams, omega: float, d: float) -> float:
    """Monotone decreasing matching map, (-l_omega, inf) -> (1, inf)."""
    alpha, _ = alpha_beta(params)
    s = math.sqrt(_discriminant(params, omega))
    k = (params.p - 1.0) * math.sqrt(-omega)
    den = s * math.sinh(k * d) + alpha
    if den <= 0.0:
        raise ValueError(f"d = {d} <= -l_omega: matching map undefined")
    return s * math.cosh(k * d) / den


def _R1_derivative(params: ModelParams, omega: float, d: float) -> float:
    alpha, _ = alpha_beta(params)
    s = math.sqrt(_discriminant(params, omega))
    k = (params.p - 1.0) * math.sqrt(-omega)
    den = s * math.sinh(k * d) + alpha
    return k * (alpha * s * math.sinh(k * d) - s**2) / den**2


def invert_decreasing(
    f: Callable[[float], float],
    y: float,
    left: float,
    right_seed: float,
    fprime: Callable[[float], float] | None = None,
    rel_tol: float = 1e-13,
    max_iter: int = 200,
) -> float:
    """Solve f(d) = y for a strictly decreasing f with f(left+) = +inf.

    Brackets by geometric expansion of the right end, bisects until the
    bracket or residual is tight, then polishes with Newton when a derivative
    is supplied.
    """
    lo = left
    hi = right_seed
    while f(hi) > y:
        lo = hi
        hi = left + 2.0 * (hi - left)
        if hi - left > 1e12:
            raise RuntimeError("bracket expansion failed: target below range of f")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if f(mid) > y:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(1.0, abs(hi)):
            break
    d = 0.5 * (lo + hi)
    if fprime is not None:
        for _ in range(6):
            step = (f(d) - y) / fprime(d)
            d_new = d - step
            if not (lo <= d_new <= hi) and not (lo - 1e-9 <= d_new <= hi + 1e-9):
                break
            d = d_new
            if abs(f(d) - y) <= rel_tol * abs(y):
                break
    return d


def R1_inverse(params: ModelParams, omega: float, y: float) -> float:
    """Unique d in (-l_omega, inf) with R1(d) = y, for y > 1."""
    if y <= 1.0:
        raise ValueError(f"matching map only attains values > 1, got {y}")
    lw = l_omega(params, omega)
    eps = 1e-9 * max(1.0, abs(lw))
    left = -lw + eps
    return invert_decreasing(
        lambda d: R1_eval(params, omega, d),
        y,
        left=left,
        right_seed=left + 1.0,
        fprime=lambda d: _R1_derivative(params, omega, d),
    )


def l0(params: ModelParams) -> float:
    """Blow-up abscissa of the unshifted equilibrium half-profile; negative."""
    if not (params.lambda1 < 0.0 and params.lambda2 < 0.0):
        raise ValueError("equilibrium profile needs lambda1 < 0 and lambda2 < 0")
    p = params.p
    return math.sqrt(-params.lambda2) * (p + 1.0) / (math.sqrt(p) * (p - 1.0) * params.lambda1)


def R2_eval(params: ModelParams, d: float) -> float:
    """Monotone decreasing matching map for omega = 0, (-l0, inf) -> (0, inf)."""
    l = l0(params)
    if d <= -l:
        raise ValueError(f"d = {d} <= -l0: matching map undefined")
    return d / ((params.p - 1.0) * (d**2 - l**2))


def R2_inverse(params: ModelParams, y: float) -> float:
    """Unique d in (-l0, inf) with R2(d) = y, for y > 0."""
    if y <= 0.0:
        raise ValueError(f"matching map only attains values > 0, got {y}")
    l = l0(params)
    p = params.p

    def f(d: float) -> float:
        return R2_eval(params, d)

    def fprime(d: float) -> float:
        return -(d**2 + l**2) / ((p - 1.0) * (d**2 - l**2) ** 2)

    eps = 1e-9 * max(1.0, abs(l))
    left = -l + eps
    return invert_decreasing(f, y, left=left, right_seed=left + 1.0, fprime=fprime)


@dataclass(frozen=True)
class Profile:
    """Immutable evaluable stationary profile (standing wave or equilibrium)."""

    params: ModelParams
    omega: float
    alpha: float
    beta: float
    shift_d: float
    kind: ProfileKind

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        if self.kind is ProfileKind.STANDING_WAVE:
            return _phi_omega_eval(self, x)
        return _phi0_eval(self, x)

    def derivative(self, x, side: int = +1):
        """Closed-form phi'.  At x = 0 the one-sided limit selected by
        ``side`` (+1 for 0+, -1 for 0-) is returned; elsewhere side is
        ignored."""
        if self.kind is ProfileKind.STANDING_WAVE:
            return _phi_omega_derivative(self, x, side)
        return _phi0_derivative(self, x, side)


def standing_wave_profile(params: ModelParams, omega: float) -> Profile:
    """Construct the peaked standing-wave profile for an admissible omega.

    Construction-time assertion: the closed-form peak value phi(0) must agree
    with the independently computed positive root of the peak polynomial.
    """
    verdict = classify_regime(params, omega)
    if verdict.tag is not RegimeTag.STANDING_WAVE_EXISTS:
        raise ValueError(f"no standing wave in this regime: {verdict.tag.value} ({verdict.detail})")
    alpha, beta = alpha_beta(params)
    d = R1_inverse(params, omega, params.Z / (2.0 * math.sqrt(-omega)))
    profile = Profile(params, omega, alpha, beta, d, ProfileKind.STANDING_WAVE)
    from .stationary import find_c0  # deferred: stationary imports profiles

    c0 = find_c0(params, omega)
    peak = float(profile.eval(0.0))
    if abs(peak - c0) > 1e-9 * c0:
        raise AssertionError(
            f"peak cross-check failed: closed form {peak} vs polynomial root {c0}"
        )
    return profile


def equilibrium_profile(params: ModelParams) -> Profile:
    """Construct the rational equilibrium profile (omega = 0)."""
    verdict = classify_regime(params, 0.0)
    if verdict.tag is not RegimeTag.EQUILIBRIUM_EXISTS:
        raise ValueError(f"no equilibrium in this regime: {verdict.tag.value} ({verdict.detail})")
    alpha, beta = alpha_beta(params)
    d = R2_inverse(params, params.Z / 4.0)
    profile = Profile(params, 0.0, alpha, beta, d, ProfileKind.EQUILIBRIUM)
    # jump condition is exact by construction; assert it as a guard
    peak = float(profile.eval(0.0))
    jump = float(profile.derivative(0.0, +1) - profile.derivative(0.0, -1))
    if abs(jump + params.Z * peak) > 1e-9 * params.Z * peak:
        raise AssertionError(f"jump cross-check failed: {jump} vs {-params.Z * peak}")
    return profile


def _log_sinh(t: np.ndarray) -> np.ndarray:
    """log(sinh(t)) for t > 0, stable for large t."""
    out = np.empty_like(t)
    small = t <= _LOG_DOMAIN_CUTOFF
    out[small] = np.log(np.sinh(t[small]))
    tl = t[~small]
    out[~small] = tl + np.log1p(-np.exp(-2.0 * tl)) - math.log(2.0)
    return out


def _phi_omega_log_bracket(profile: Profile, x: np.ndarray) -> np.ndarray:
    """log of the sinh bracket whose -1/(p-1) power is the profile."""
    p = profile.params.p
    omega = profile.omega
    s = math.sqrt(omega * profile.beta - profile.alpha**2)
    k = (p - 1.0) * math.sqrt(-omega)
    a = profile.alpha / (-omega)
    c = s / (-omega)
    t = k * (np.abs(x) + profile.shift_d)
    # bracket = a + c*sinh(t) > 0 for d > -l_omega
    log_bracket = np.empty_like(t)
    small = t <= _LOG_DOMAIN_CUTOFF
    log_bracket[small] = np.log(a + c * np.sinh(t[small]))
    tl = t[~small]
    log_bracket[~small] = math.log(c) + _log_sinh(tl)  # a is negligible vs c*sinh(t)
    return log_bracket


def _phi_omega_eval(profile: Profile, x):
    x_arr = np.asarray(x, dtype=float)
    p = profile.params.p
    out = np.exp(-_phi_omega_log_bracket(profile, np.atleast_1d(x_arr)) / (p - 1.0))
    return float(out[0]) if x_arr.ndim == 0 else out.reshape(x_arr.shape)


def _phi_omega_derivative(profile: Profile, x, side: int = +1):
    x_arr = np.asarray(x, dtype=float)
    xs = np.atleast_1d(x_arr)
    p = profile.params.p
    omega = profile.omega
    s = math.sqrt(omega * profile.beta - profile.alpha**2)
    k = (p - 1.0) * math.sqrt(-omega)
    c = s / (-omega)
    t = k * (np.abs(xs) + profile.shift_d)
    log_bracket = _phi_omega_log_bracket(profile, xs)
    # |phi'| = (k/(p-1)) * c * cosh(t) * bracket^(-p/(p-1))
    log_cosh = np.empty_like(t)
    small = t <= _LOG_DOMAIN_CUTOFF
    log_cosh[small] = np.log(np.cosh(t[small]))
    tl = t[~small]
    log_cosh[~small] = tl + np.log1p(np.exp(-2.0 * tl)) - math.log(2.0)
    mag = np.exp(math.log(k / (p - 1.0)) + math.log(c) + log_cosh - p / (p - 1.0) * log_bracket)
    sign = np.sign(xs)
    sign[sign == 0.0] = float(np.sign(side) or 1.0)
    out = -sign * mag
    return float(out[0]) if x_arr.ndim == 0 else out.reshape(x_arr.shape)


def _phi0_eval(profile: Profile, x):
    x_arr = np.asarray(x, dtype=float)
    p = profile.params.p
    l1, l2 = profile.params.lambda1, profile.params.lambda2
    num = -2.0 * p * (p + 1.0) * l1
    dq = p * (p - 1.0) ** 2 * l1**2
    dc = (p + 1.0) ** 2 * l2
    den = dq * (np.abs(x_arr) + profile.shift_d) ** 2 + dc
    out = (num / den) ** (1.0 / (p - 1.0))
    return float(out) if x_arr.ndim == 0 else out


def _phi0_derivative(profile: Profile, x, side: int = +1):
    x_arr = np.asarray(x, dtype=float)
    xs = np.atleast_1d(x_arr)
    p = profile.params.p
    l1, l2 = profile.params.lambda1, profile.params.lambda2
    num = -2.0 * p * (p + 1.0) * l1
    dq = p * (p - 1.0) ** 2 * l1**2
    dc = (p + 1.0) ** 2 * l2
    r = np.abs(xs) + profile.shift_d
    den = dq * r**2 + dc
    phi = (num / den) ** (1.0 / (p - 1.0))
    sign = np.sign(xs)
    sign[sign == 0.0] = float(np.sign(side) or 1.0)
    out = -sign * (2.0 * dq * r / ((p - 1.0) * den)) * phi
    return float(out[0]) if x_arr.ndim == 0 else out.reshape(x_arr.shape)


def kaminaga_ohta_profile(r: float, omega: float, Z: float, x):
    """Independent closed-form single-power profile (oracle for lambda1 = 0).

    Valid for Z > 0 and 0 < -omega < Z^2/4; equals the general profile with
    lambda1 = 0, lambda2 = -1, p = (r+1)/2.
    """
    if r <= 1.0:
        raise ValueError(f"exponent r must exceed 1, got {r}")
    if Z <= 0.0 or not (0.0 < -omega < Z**2 / 4.0):
        raise ValueError(f"need Z > 0 and 0 < -omega < Z^2/4, got Z={Z}, omega={omega}")
    x_arr = np.asarray(x, dtype=float)
    amp = (-omega * (r + 1.0) / 2.0) ** (1.0 / (r - 1.0))
    arg = (r - 1.0) * math.sqrt(-omega) / 2.0 * np.abs(x_arr) + math.atanh(
        2.0 * math.sqrt(-omega) / Z
    )
    out = amp * np.exp(-2.0 / (r - 1.0) * _log_sinh(np.atleast_1d(arg)))
    return float(out[0]) if x_arr.ndim == 0 else out.reshape(x_arr.shape)
