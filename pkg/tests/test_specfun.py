"""Tests for the special-function helpers."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special as sp

from realrmt import specfun


def test_gamma_fn_matches_factorials():
    for n in range(1, 10):
        assert specfun.gamma_fn(n) == math.factorial(n - 1)
    assert specfun.gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi))


def test_gamma_fn_domain():
    with pytest.raises(ValueError):
        specfun.gamma_fn(0.0)
    with pytest.raises(ValueError):
        specfun.gamma_fn(-1.5)
    with pytest.raises(OverflowError):
        specfun.gamma_fn(200.0)


def test_log_gamma_consistent():
    for x in (0.3, 1.0, 7.5, 150.0, 900.0):
        assert specfun.log_gamma(x) == pytest.approx(sp.gammaln(x), rel=1e-13)
    with pytest.raises(ValueError):
        specfun.log_gamma(-2.0)


@given(st.integers(min_value=1, max_value=40),
       st.floats(min_value=0.0, max_value=60.0))
def test_upper_gamma_regularized_matches_scipy(n, x):
    got = specfun.upper_gamma_regularized(n, x)
    want = sp.gammaincc(n, x)
    assert got == pytest.approx(want, rel=1e-10, abs=1e-12)


def test_upper_gamma_regularized_negative_and_complex():
    # analytic continuation: e^{-x} sum_{j<n} x^j/j!
    for n in (1, 3, 6):
        for x in (-2.0, -0.5, 1.5 + 2.0j):
            want = np.exp(-x) * sum(x ** j / math.factorial(j) for j in range(n))
            assert specfun.upper_gamma_regularized(n, x) == pytest.approx(want)
    with pytest.raises(ValueError):
        specfun.upper_gamma_regularized(0, 1.0)


def test_lower_plus_upper_is_one():
    for n in (1, 4, 9):
        for x in (0.0, 0.7, 5.0):
            total = (specfun.lower_gamma_regularized(n, x)
                     + specfun.upper_gamma_regularized(n, x))
            assert total == pytest.approx(1.0, rel=1e-12)


def test_incomplete_gamma_unregularized():
    for a in (0.5, 2.0, 7.5):
        for x in (0.3, 2.0, 10.0):
            total = specfun.lower_gamma(a, x) + specfun.upper_gamma(a, x)
            assert total == pytest.approx(math.gamma(a), rel=1e-12)


def test_erf_pair():
    for x in (-2.0, 0.0, 1.3):
        assert specfun.erf_fn(x) + specfun.erfc_fn(x) == pytest.approx(1.0)


def test_reg_incomplete_beta_endpoints():
    assert specfun.reg_incomplete_beta(0.0, 2.0, 3.0) == 0.0
    assert specfun.reg_incomplete_beta(1.0, 2.0, 3.0) == pytest.approx(1.0)
    assert specfun.reg_incomplete_beta(0.5, 2.0, 2.0) == pytest.approx(0.5)


def test_double_factorial():
    assert specfun.double_factorial(-1) == 1
    assert specfun.double_factorial(0) == 1
    assert specfun.double_factorial(5) == 15
    assert specfun.double_factorial(6) == 48
    with pytest.raises(ValueError):
        specfun.double_factorial(-3)


@given(st.floats(min_value=-0.9, max_value=0.9))
def test_hyp2f1_matches_scipy(x):
    got = specfun.hyp2f1(1.0, -0.5, 3.0, x)
    want = sp.hyp2f1(1.0, -0.5, 3.0, x)
    assert got == pytest.approx(want, rel=1e-10)


def test_selberg_single_variable_is_beta():
    # n = 1 reduces to the Euler beta integral
    assert specfun.selberg_value(1, 2.0, 3.0, 1.0) == pytest.approx(
        sp.beta(3.0, 4.0), rel=1e-12)


def test_vol_orthogonal_small():
    assert specfun.vol_orthogonal(1) == pytest.approx(2.0, rel=1e-12)
    assert specfun.vol_orthogonal(2) == pytest.approx(4.0 * math.pi, rel=1e-12)
    with pytest.raises(ValueError):
        specfun.log_vol_orthogonal(0)
