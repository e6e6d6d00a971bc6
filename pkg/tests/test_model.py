"""Regime classification against direct inequality evaluation."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nlsdp import (
    ModelParams,
    RegimeTag,
    admissible_omega_interval,
    classify_regime,
)
from nlsdp.model import omega_threshold


def oracle_exists(p, lam1, lam2, Z, omega):
    """Direct transcription of the existence inequalities (independent of
    classify_regime's branch structure)."""
    if omega < 0.0:
        if not (Z > 0.0 and lam1 <= 0.0 and lam2 < 0.0):
            return False
        threshold = -p * lam1**2 / ((p + 1.0) ** 2 * lam2)
        return threshold < -omega < Z**2 / 4.0
    if omega == 0.0:
        return Z > 0.0 and lam1 < 0.0 and lam2 < 0.0 and 1.0 < p < 5.0
    return False


class TestExamples:
    def test_figure_parameters_standing(self):
        v = classify_regime(ModelParams(3.0, -1.0, -1.0, 2.0), -0.25)
        assert v.tag is RegimeTag.STANDING_WAVE_EXISTS
        # threshold 3/16 < 0.25 < 1
        assert omega_threshold(ModelParams(3.0, -1.0, -1.0, 2.0)) == pytest.approx(3.0 / 16.0)

    def test_omega_too_negative(self):
        v = classify_regime(ModelParams(3.0, -1.0, -1.0, 2.0), -2.0)
        assert v.tag is RegimeTag.EMPTY_OMEGA_PLUS_Z_SQUARED_OVER_4_NONPOSITIVE

    def test_omega_positive(self):
        v = classify_regime(ModelParams(3.0, -1.0, -1.0, 1.0), 0.5)
        assert v.tag is RegimeTag.EMPTY_OMEGA_POSITIVE

    def test_equilibrium_figure_parameters(self):
        v = classify_regime(ModelParams(3.0, -1.0, -1.0, 1.25), 0.0)
        assert v.tag is RegimeTag.EQUILIBRIUM_EXISTS

    def test_z_nonpositive(self):
        v = classify_regime(ModelParams(3.0, -1.0, -1.0, -2.0), -0.25)
        assert v.tag is RegimeTag.EMPTY_Z_NONPOSITIVE

    def test_p_at_most_one_rejected(self):
        with pytest.raises(ValueError):
            ModelParams(1.0, -1.0, -1.0, 2.0)


class TestInterval:
    def test_figure_interval(self):
        lo, hi = admissible_omega_interval(ModelParams(3.0, -1.0, -1.0, 2.0))
        assert lo == pytest.approx(-1.0)
        assert hi == pytest.approx(-3.0 / 16.0)

    def test_lambda1_zero_interval(self):
        lo, hi = admissible_omega_interval(ModelParams(3.0, 0.0, -1.0, 2.0))
        assert lo == pytest.approx(-1.0)
        assert hi == pytest.approx(0.0)

    def test_empty_interval(self):
        assert admissible_omega_interval(ModelParams(3.0, -1.0, -1.0, 0.5)) is None

    def test_interval_members_classified_existing(self):
        params = ModelParams(3.0, -1.0, -1.0, 2.0)
        lo, hi = admissible_omega_interval(params)
        for frac in (0.01, 0.25, 0.5, 0.75, 0.99):
            omega = lo + frac * (hi - lo)
            assert classify_regime(params, omega).exists

    def test_boundaries_not_existing(self):
        params = ModelParams(3.0, -1.0, -1.0, 2.0)
        lo, hi = admissible_omega_interval(params)
        assert not classify_regime(params, lo).exists
        assert not classify_regime(params, hi).exists


@given(
    p=st.floats(1.01, 6.0),
    lam1=st.floats(-3.0, 0.5),
    lam2=st.floats(-3.0, 0.5),
    Z=st.floats(-2.0, 4.0),
    omega=st.floats(-3.0, 1.0),
)
@settings(max_examples=300, deadline=None)
def test_classification_matches_inequality_oracle(p, lam1, lam2, Z, omega):
    params = ModelParams(p=p, lambda1=lam1, lambda2=lam2, Z=Z)
    verdict = classify_regime(params, omega)
    assert verdict.exists == oracle_exists(p, lam1, lam2, Z, omega)


def test_randomized_sweep_zero_misclassifications():
    rng = np.random.default_rng(42)
    n = 10_000
    ps = rng.uniform(1.01, 6.0, n)
    l1 = rng.uniform(-3.0, 0.5, n)
    l2 = rng.uniform(-3.0, 0.5, n)
    zs = rng.uniform(-2.0, 4.0, n)
    oms = rng.uniform(-3.0, 1.0, n)
    # force some exact omega = 0 cases into the sweep
    oms[::7] = 0.0
    wrong = 0
    for i in range(n):
        params = ModelParams(p=ps[i], lambda1=l1[i], lambda2=l2[i], Z=zs[i])
        if classify_regime(params, oms[i]).exists != oracle_exists(
            ps[i], l1[i], l2[i], zs[i], oms[i]
        ):
            wrong += 1
    assert wrong == 0
