"""Tests for the exact probability engines and moment formulas."""

import math
from fractions import Fraction

import numpy as np
import pytest

from realrmt import analytics


@pytest.mark.parametrize("ensemble,n,kwargs", [
    ("ginibre", 7, {}),
    ("partial", 5, {"tau": 0.3}),
    ("spherical", 9, {}),
    ("truncated", 6, {"big_l": 2}),
])
def test_probabilities_sum_to_one_with_parity(ensemble, n, kwargs):
    probs = analytics.prob_table(ensemble, n, **kwargs)
    assert probs.sum() == pytest.approx(1.0, rel=1e-9)
    assert np.all(probs > -1e-12)
    for k in range(n + 1):
        if (n - k) % 2 == 1:
            assert probs[k] == 0.0


def test_goe_table_is_deterministic():
    probs = analytics.prob_table("goe", 5)
    assert probs[5] == 1.0 and probs.sum() == 1.0


def test_prob_table_argument_checks():
    with pytest.raises(ValueError):
        analytics.prob_table("partial", 4)
    with pytest.raises(ValueError):
        analytics.prob_table("truncated", 4)
    with pytest.raises(ValueError):
        analytics.prob_table("mystery", 4)
    with pytest.raises(ValueError):
        analytics.ginibre_prob_gf(41)
    with pytest.raises(ValueError):
        analytics.truncated_prob_gf(13, 1)


def test_ginibre_alpha_recursion_cross_check():
    for j in range(4):
        for l in range(4):
            assert analytics.ginibre_alpha_via_recursion(j, l) == pytest.approx(
                analytics.ginibre_alpha(j, l), rel=1e-10)


def test_ginibre_expected_reals_matches_distribution():
    for n in (4, 7, 10):
        probs = analytics.ginibre_prob_gf(n)
        mean = float(np.dot(np.arange(n + 1), probs))
        assert analytics.ginibre_expected_reals(n) == pytest.approx(mean, rel=1e-11)


def test_ginibre_expected_reals_asymptotic():
    for n in (50, 200):
        exact = analytics.ginibre_expected_reals(n)
        approx = analytics.ginibre_expected_reals_asymptotic(n)
        assert approx == pytest.approx(exact, rel=1e-8)


def test_ginibre_variance_scaling():
    # the variance relation ties the variance to the mean
    n = 30
    assert analytics.ginibre_variance_reals(n) == pytest.approx(
        (2.0 - math.sqrt(2.0)) * analytics.ginibre_expected_reals(n))


def test_ginibre_all_real_closed_form():
    for n in range(2, 8):
        assert analytics.ginibre_prob_gf(n)[n] == pytest.approx(
            analytics.ginibre_pnn(n), rel=1e-10)


def test_partial_i_requires_odd_index():
    with pytest.raises(ValueError):
        analytics._partial_i(2, 0.0)


def test_spherical_bernoulli_composition():
    # the distribution is the law of a sum of independent two-valued steps
    n = 6
    ts = analytics.spherical_bernoulli(n)
    assert len(ts) == n // 2
    assert np.all((0 < ts) & (ts < 1))
    assert analytics.spherical_prob_gf(n)[n] == pytest.approx(np.prod(ts))


def test_truncated_moments_against_distribution():
    for m, big_l in ((4, 1), (5, 2), (6, 8)):
        probs = analytics.truncated_prob_gf(m, big_l)
        mean = float(np.dot(np.arange(m + 1), probs))
        assert analytics.truncated_expected_reals(m, big_l) == pytest.approx(mean)


def test_truncated_expectation_regimes():
    # shallow truncation: expectation grows like the logarithm of the order
    strong = analytics.truncated_expected_reals_strong(10 ** 6, 1)
    log_term = analytics.truncated_expected_reals_log(10 ** 6, 1)
    assert strong == pytest.approx(log_term, rel=0.15)
    # deep truncation: square-root growth
    assert analytics.truncated_expected_reals_weak(50) == pytest.approx(
        math.sqrt(100.0 / math.pi))


def test_rational_form():
    assert analytics.rational_form(0.5) == Fraction(1, 2)
    assert analytics.rational_form(2.0 / 3.0) == Fraction(2, 3)
    assert analytics.rational_form(math.pi, max_denominator=1000) is None
