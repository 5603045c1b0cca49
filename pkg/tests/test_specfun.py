"""Gamma and Mittag-Leffler accuracy, identities, and domain policing."""

import math

import numpy as np
import pytest

from conftest import ml_series, mp_gamma
from fracpop import gamma, mittag_leffler

# Frozen 60-digit reference values.
SQRT_PI = 1.7724538509055160273
GAMMA_0P1 = 9.5135076986687318363
GAMMA_170 = 4.2690680090047052749e304
ML_HALF_AT_MINUS_ONE = 0.42758357615580700441  # equals e * erfc(1)
ML_03_AT_MINUS_07 = 0.548823134964846796


def test_gamma_integer_factorials():
    for n, fact in [(1, 1.0), (2, 1.0), (3, 2.0), (5, 24.0), (6, 120.0)]:
        assert abs(gamma(float(n)) - fact) <= 1e-13 * fact


def test_gamma_half_is_sqrt_pi():
    assert abs(gamma(0.5) - SQRT_PI) <= 1e-13 * SQRT_PI


def test_gamma_small_argument_lift():
    assert abs(gamma(0.1) - GAMMA_0P1) <= 1e-13 * GAMMA_0P1


def test_gamma_large_arguments():
    assert abs(gamma(170.0) - GAMMA_170) <= 1e-12 * GAMMA_170
    assert math.isfinite(gamma(171.6))
    with pytest.raises(OverflowError):
        gamma(172.0)


def test_gamma_accuracy_randomized():
    rng = np.random.default_rng(7)
    ts = np.exp(rng.uniform(np.log(1e-3), np.log(170.0), 200))
    worst = max(abs(gamma(float(t)) - mp_gamma(float(t))) / mp_gamma(float(t)) for t in ts)
    assert worst <= 1e-12


def test_gamma_recurrence():
    rng = np.random.default_rng(11)
    for t in rng.uniform(0.1, 50.0, 200):
        t = float(t)
        assert abs(gamma(t + 1.0) - t * gamma(t)) <= 1e-11 * abs(t * gamma(t))


def test_gamma_rejects_bad_arguments():
    for bad in (0.0, -1.0, -0.5, float("nan"), float("inf")):
        with pytest.raises(ValueError):
            gamma(bad)


def test_ml_matches_exp_at_order_one():
    zs = np.linspace(-10.0, 10.0, 201)
    worst = max(abs(mittag_leffler(1.0, float(z)) - math.exp(float(z))) for z in zs)
    assert worst <= 1e-10


def test_ml_frozen_values():
    got = mittag_leffler(0.5, -1.0)
    assert abs(got - ML_HALF_AT_MINUS_ONE) <= 1e-13
    assert abs(got - math.exp(1.0) * math.erfc(1.0)) <= 1e-13
    assert abs(mittag_leffler(0.3, -0.7) - ML_03_AT_MINUS_07) <= 1e-13


def test_ml_at_zero_is_one():
    for alpha in (0.1, 0.3, 0.5, 0.8, 1.0):
        assert mittag_leffler(alpha, 0.0) == 1.0


def test_ml_randomized_vs_series():
    rng = np.random.default_rng(3)
    for _ in range(100):
        alpha = float(rng.uniform(0.4, 1.0))
        z = float(rng.uniform(-2.0, 2.0))
        assert abs(mittag_leffler(alpha, z) - ml_series(alpha, z)) <= 1e-12


def test_ml_strictly_increasing_in_z():
    # Per-alpha ranges chosen inside the series' full-accuracy zone.
    for alpha, lo, hi in [(0.3, -1.0, 1.0), (0.5, -2.0, 2.0), (0.8, -5.0, 5.0), (1.0, -10.0, 10.0)]:
        values = [mittag_leffler(alpha, float(z)) for z in np.linspace(lo, hi, 41)]
        assert all(v2 > v1 for v1, v2 in zip(values, values[1:]))


def test_ml_domain_errors():
    for alpha in (0.0, -0.5, 1.1):
        with pytest.raises(ValueError):
            mittag_leffler(alpha, 0.5)
    for z in (31.0, -30.5):
        with pytest.raises(ValueError):
            mittag_leffler(0.5, z)


def test_ml_raises_when_series_cannot_deliver():
    # Large |z| at small alpha: the capped, cancellation-limited sum cannot
    # reach 1e-10 absolute accuracy, and must say so instead of guessing.
    for alpha, z in [(0.25, -25.0), (0.3, 28.0)]:
        with pytest.raises(ArithmeticError):
            mittag_leffler(alpha, z)
