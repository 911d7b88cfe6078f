"""Tests for the correlation kernels, densities and scaling limits."""

import math

import numpy as np
import pytest
from scipy import integrate

from realrmt import analytics, kernels

C2PI = 1.0 / math.sqrt(2.0 * math.pi)


# ---------------------------------------------------------------------------
# Gaussian orthogonal ensemble


def test_goe_density_is_kernel_diagonal():
    for x in (-1.2, 0.0, 0.8):
        assert kernels.goe_density(6, x) == pytest.approx(
            float(kernels.goe_s(6, x, x)), rel=1e-10)


def test_goe_kernel_one_and_two_point():
    kern = kernels.GOEKernel(6)
    x, y = 0.3, -0.9
    rho1 = kernels.npoint_correlation(kern, [("r", x)])
    assert rho1 == pytest.approx(float(kernels.goe_density(6, x)), rel=1e-10)
    rho2 = kernels.npoint_correlation(kern, [("r", x), ("r", y)])
    assert rho2 > 0
    # two-point never exceeds the product for these repelling points
    assert rho2 < float(kernels.goe_density(6, x) * kernels.goe_density(6, y))


def test_goe_partner_kernels_are_antisymmetric():
    x, y, h = 0.3, -0.9, 1e-6
    assert kernels.goe_d(6, x, y) == pytest.approx(-kernels.goe_d(6, y, x),
                                                   rel=1e-10)
    assert kernels.goe_itilde(6, x, y) == pytest.approx(
        -kernels.goe_itilde(6, y, x), rel=1e-10)
    # D is the first-argument derivative of S
    fd = (float(kernels.goe_s(6, x + h, y)) - float(kernels.goe_s(6, x - h, y))) \
        / (2.0 * h)
    assert kernels.goe_d(6, x, y) == pytest.approx(fd, rel=1e-5)


def test_goe_semicircle_support():
    assert kernels.goe_semicircle(0.0) == pytest.approx(2.0 / math.pi)
    assert kernels.goe_semicircle(1.5) == 0.0
    val, _ = integrate.quad(lambda t: float(kernels.goe_semicircle(t)), -1, 1)
    assert val == pytest.approx(1.0, abs=1e-10)


# ---------------------------------------------------------------------------
# real Ginibre ensemble


def test_ginibre_real_density_normalizes_to_mean():
    for n in (4, 7):
        val, _ = integrate.quad(lambda t: kernels.ginibre_density_real(n, t),
                                -10.0, 10.0, limit=300)
        assert val == pytest.approx(analytics.ginibre_expected_reals(n), abs=1e-8)


def test_ginibre_density_is_srr_diagonal():
    for x in (-2.0, 0.5):
        assert kernels.ginibre_density_real(8, x) == pytest.approx(
            kernels.ginibre_srr(8, x, x), rel=1e-12)


def test_ginibre_complex_density_matches_scc():
    w = 1.0 + 0.8j
    rho = kernels.GinibreKernel(8)
    val = kernels.npoint_correlation(rho, [("c", w)])
    assert val == pytest.approx(kernels.ginibre_density_complex(8, w), rel=1e-10)


def test_ginibre_complex_density_integrates_to_pair_count():
    n = 4
    mean = analytics.ginibre_expected_reals(n)

    def integrand(y, x):
        return kernels.ginibre_density_complex(n, x + 1j * y)

    val, _ = integrate.dblquad(integrand, -5.0, 5.0, 0.0, 5.0,
                               epsabs=1e-10, epsrel=1e-10)
    assert 2.0 * val + mean == pytest.approx(n, abs=1e-6)


def test_ginibre_bulk_block_structure():
    blk = kernels.ginibre_bulk_block_rr(0.4, -0.2)
    assert blk[0, 0] == pytest.approx(C2PI * math.exp(-0.18))
    assert blk[0, 1] == pytest.approx(0.6 * blk[0, 0])
    assert kernels.circular_law_density() == pytest.approx(1.0 / math.pi)


def test_ginibre_edge_matches_bulk_deep_inside():
    # far inside the support the edge form reduces to the bulk value
    val = kernels.ginibre_edge_srr(1.0, -8.0, -8.0)
    assert val == pytest.approx(C2PI, rel=1e-6)


# ---------------------------------------------------------------------------
# partially symmetric ensemble


@pytest.mark.parametrize("n,tau", [(4, 0.5), (5, 0.5), (6, -0.3), (7, 0.2)])
def test_partial_density_normalizes_to_mean(n, tau):
    probs = analytics.partial_prob_gf(n, tau)
    mean = float(np.dot(np.arange(n + 1), probs))
    val, _ = integrate.quad(lambda t: kernels.partial_density_real(n, tau, t),
                            -8.0, 8.0, limit=300)
    assert val == pytest.approx(mean, abs=1e-7)


def test_partial_density_reduces_to_ginibre():
    for x in (-1.0, 0.3, 2.0):
        assert kernels.partial_density_real(6, 0.0, x) == pytest.approx(
            kernels.ginibre_density_real(6, x), rel=1e-9)


def test_partial_bulk_limits():
    tau = 0.4
    assert kernels.partial_bulk_srr(tau, 0.0) == pytest.approx(
        1.0 / math.sqrt(2.0 * math.pi * (1.0 - tau * tau)))
    # bulk complex density vanishes on the real axis (eigenvalue repulsion)
    # and saturates far above it
    assert kernels.partial_bulk_density_complex(tau, 0.0) == 0.0
    assert kernels.partial_bulk_density_complex(tau, 40.0) == pytest.approx(
        1.0 / (math.pi * math.sqrt(1.0 - tau * tau)), rel=0.02)
    a, b = kernels.elliptical_support(9, tau)
    assert (a, b) == (1.4 * 3.0, 0.6 * 3.0)
    assert kernels.elliptical_density(tau) == pytest.approx(
        1.0 / (math.pi * (1.0 - tau * tau)))


def test_crossover_interpolates():
    # vanishing asymmetry reproduces the sine kernel of the symmetric limit
    val = kernels.crossover_srr(1e-6, 0.3, 0.1)
    sine = math.sin(math.pi * 0.2) / (math.pi * 0.2)
    assert val == pytest.approx(sine, rel=1e-4)
    # strong asymmetry kills the correlation
    assert kernels.crossover_srr(30.0, 0.3, 0.1) < 1e-2
    assert abs(kernels.crossover_scc(2.0, 1.0 + 1.0j, 1.0 + 1.0j)) > 0


# ---------------------------------------------------------------------------
# real spherical ensemble


def test_spherical_real_density_is_uniform():
    n = 5
    rho = kernels.spherical_density_real(n)
    assert 2.0 * math.pi * rho == pytest.approx(
        analytics.spherical_expected_reals(n), rel=1e-12)
    assert kernels.spherical_srr(n, 0.7, 0.7) == pytest.approx(rho)


def test_spherical_kernel_two_point_symmetry():
    kern = kernels.SphericalKernel(6)
    t1, t2 = 0.4, 2.0
    rho2 = kernels.npoint_correlation(kern, [("r", t1), ("r", t2)])
    rho2_swap = kernels.npoint_correlation(kern, [("r", t2), ("r", t1)])
    assert rho2 == pytest.approx(rho2_swap, rel=1e-9)
    assert rho2 > 0


def test_spherical_complex_density_matches_scc_diagonal():
    n = 6
    w = 0.5 * np.exp(0.3j)
    diag = kernels.spherical_scc(n, w, w)
    assert kernels.spherical_density_complex(n, w) == pytest.approx(
        float(np.real(diag)), rel=1e-10)


def test_spherical_limit_density_normalizes():
    val, _ = integrate.quad(
        lambda r: 2.0 * math.pi * r * kernels.spherical_complex_limit_density(r),
        0.0, np.inf)
    assert val == pytest.approx(1.0, abs=1e-8)


# ---------------------------------------------------------------------------
# real truncated orthogonal ensemble


def test_truncated_density_is_srr_diagonal():
    for x in (-0.6, 0.0, 0.9):
        assert kernels.truncated_density_real(4, 2, x) == pytest.approx(
            kernels.truncated_srr(4, 2, x, x), rel=1e-9)


def test_truncated_weights():
    assert kernels.trunc_omega_real(2, 0.0) == pytest.approx(
        math.sqrt(2.0 * math.gamma(1.5) / math.gamma(1.0))
        / (math.sqrt(2.0) * math.pi ** 0.25))
    # the squared complex weight is positive inside the disk
    assert kernels.trunc_omega_sq_complex(1, 0.2 + 0.3j) > 0
    assert kernels.trunc_omega_sq_complex(4, 0.2 + 0.3j) > 0


def test_truncated_complex_density_mass():
    # the upper-half-disk mass equals half the expected complex count
    m, big_l = 4, 2
    mean = analytics.truncated_expected_reals(m, big_l)

    def integrand(y, x):
        if x * x + y * y >= 1.0 - 1e-12:
            return 0.0
        return kernels.truncated_density_complex(m, big_l, x + 1j * y)

    val, _ = integrate.dblquad(integrand, -1.0, 1.0, 0.0, 1.0,
                               epsabs=1e-9, epsrel=1e-9)
    assert val == pytest.approx((m - mean) / 2.0, abs=1e-5)


def test_truncated_weak_limits_match_gaussian_forms():
    m, big_l, x, y = 6, 40, 0.3, -0.5
    assert kernels.truncated_weak_srr(m, big_l, x, y) == pytest.approx(
        math.sqrt(big_l) * kernels.ginibre_srr(m, x, y))
    assert kernels.truncated_weak_density_complex(m, big_l, 1.0 + 1.0j) \
        == pytest.approx(big_l * kernels.ginibre_density_complex(m, 1.0 + 1.0j))
    assert kernels.truncated_weak_density_real(m, big_l, 0.9) == 0.0
    assert kernels.truncated_weak_density_real(m, big_l, 0.0) > 0


def test_truncated_strong_kernel_block():
    # the diagonal of the depth-one limit block is the limiting density
    for x in (0.0, 0.4, -0.7):
        blk = kernels.kappa_rr_l1(x, x)
        assert blk[0, 0] == pytest.approx(1.0 / (math.pi * (1.0 - x * x)))
    kern = kernels.TruncatedKernel(4, 2)
    rho1 = kernels.npoint_correlation(kern, [("r", 0.2)])
    assert rho1 == pytest.approx(kernels.truncated_density_real(4, 2, 0.2),
                                 rel=1e-9)


# ---------------------------------------------------------------------------
# n-point plumbing


def test_npoint_rejects_coincident_points():
    kern = kernels.GinibreKernel(4)
    with pytest.raises(ValueError):
        kernels.npoint_correlation(kern, [("r", 1.0), ("r", 1.0)])


def test_ginibre_mixed_two_point_factorizes_at_separation():
    kern = kernels.GinibreKernel(10)
    x, w = -4.0, 4.0 + 1.0j
    rho2 = kernels.npoint_correlation(kern, [("r", x), ("c", w)])
    prod = (kernels.ginibre_density_real(10, x)
            * kernels.ginibre_density_complex(10, w))
    assert rho2 == pytest.approx(prod, rel=0.01)
