"""Shared fixtures: figure-parameter tuples and admissible-tuple sampling."""

from __future__ import annotations

import numpy as np
import pytest

from nlsdp import ModelParams, admissible_omega_interval, classify_regime

# parameters of the published profile/evolution figures
FIG_PARAMS = ModelParams(p=3.0, lambda1=-1.0, lambda2=-1.0, Z=2.0)
FIG_OMEGA = -0.25
EQ_PARAMS = ModelParams(p=3.0, lambda1=-1.0, lambda2=-1.0, Z=1.25)


@pytest.fixture
def fig_params() -> ModelParams:
    return FIG_PARAMS


@pytest.fixture
def eq_params() -> ModelParams:
    return EQ_PARAMS


def random_admissible_tuples(n: int, seed: int = 0) -> list[tuple[ModelParams, float]]:
    """Sample (params, omega) pairs in the standing-wave existence regime.

    Ranges are kept moderate so closed-form amplitudes stay O(1) and
    residual scales are comparable across the sample.
    """
    rng = np.random.default_rng(seed)
    out: list[tuple[ModelParams, float]] = []
    while len(out) < n:
        p = rng.uniform(1.5, 4.0)
        lam1 = -rng.uniform(0.0, 2.0) if rng.random() < 0.8 else 0.0
        lam2 = -rng.uniform(0.2, 2.0)
        Z = rng.uniform(0.8, 3.0)
        params = ModelParams(p=p, lambda1=lam1, lambda2=lam2, Z=Z)
        interval = admissible_omega_interval(params)
        if interval is None:
            continue
        lo, hi = interval
        # stay away from both endpoints so profiles are well-conditioned
        width = hi - lo
        omega = lo + rng.uniform(0.15, 0.85) * width
        if classify_regime(params, omega).exists:
            out.append((params, omega))
    return out
