"""Exact probabilities of k real eigenvalues and related closed forms."""

import math
from fractions import Fraction

import numpy as np
from scipy import special as sp

from . import pfaffian, sopoly
from .specfun import double_factorial, hyp2f1

SQRT2PI = math.sqrt(2.0 * math.pi)


# ---------------------------------------------------------------------------
# polynomial extraction from a generating function


def _poly_from_values(fn, deg):
    """Coefficients of a degree-deg polynomial from Chebyshev-node samples on [0, 1]."""
    k = np.arange(deg + 1)
    nodes = 0.5 * (1.0 + np.cos((2 * k + 1) * math.pi / (2.0 * (deg + 1))))
    vals = np.array([fn(s) for s in nodes])
    v = np.vander(nodes, deg + 1, increasing=True)
    return np.linalg.solve(v, vals)


# ---------------------------------------------------------------------------
# real Ginibre ensemble


def ginibre_alpha(j, l):
    """Skew-basis alpha entry pairing polynomials 2j and 2l+1 (0-based pairs)."""
    return 2.0 * math.gamma(j + l + 0.5)


def ginibre_nu(j):
    """One-sided integral of the j-th skew polynomial against the Gaussian weight."""
    if j % 2 == 1:
        return 0.0
    return double_factorial(j - 1) * SQRT2PI


def ginibre_alpha_via_recursion(j, l):
    """Alpha entry from the two-index integral recursion (independent cross-check)."""
    size = j + l + 2
    big_i = np.zeros((size, size))
    big_i[0, 0] = -2.0 * math.sqrt(math.pi)
    for a in range(size - 1):
        big_i[a + 1, 0] = (2 * a + 2) * big_i[a, 0] - 2.0 * math.gamma(a + 1.5)
    for a in range(size):
        for b in range(size - 1):
            big_i[a, b + 1] = (2 * b + 1) * big_i[a, b] + 2.0 * math.gamma(a + b + 1.5)
    if l == 0:
        return -big_i[0, j]
    return 2.0 * l * big_i[l - 1, j] - big_i[l, j]


def _ginibre_core(n, s):
    """Skew-basis generating-function matrix for the first n skew polynomials."""
    a = np.zeros((n, n))
    fam_norms = [2.0 * SQRT2PI * math.gamma(2 * k + 1) for k in range((n + 1) // 2)]
    for i in range(n):
        for j in range(n):
            if i % 2 == 0 and j % 2 == 1:
                val = (s - 1.0) * ginibre_alpha(i // 2, (j - 1) // 2)
                if j == i + 1:
                    val += fam_norms[i // 2]
                a[i, j] = val
                a[j, i] = -val
    return a


def ginibre_prob_gf(n):
    """Probabilities p_{N,k} of k real eigenvalues for the real Ginibre ensemble."""
    if n > 40:
        raise ValueError("supported up to order 40")
    probs = np.zeros(n + 1)
    if n % 2 == 0:
        half = n // 2

        def build(s):
            b = np.zeros((half, half))
            for j in range(half):
                for l in range(half):
                    b[j, l] = (s - 1.0) * ginibre_alpha(j, l)
                    if j == l:
                        b[j, l] += 2.0 * SQRT2PI * math.gamma(2 * j + 1)
            return b

        _, log_ref = np.linalg.slogdet(build(1.0))

        def fn(s):
            sign, log_d = np.linalg.slogdet(build(s))
            return sign * math.exp(log_d - log_ref)

        coeffs = _poly_from_values(fn, half)
        for m in range(half + 1):
            probs[2 * m] = coeffs[m]
    else:
        border = np.array([ginibre_nu(j) for j in range(n)])
        sign_ref, log_ref = pfaffian.pfaffian_bordered_signed_log(
            _ginibre_core(n, 1.0), border)

        def fn(s):
            sign, log_p = pfaffian.pfaffian_bordered_signed_log(
                _ginibre_core(n, s), border)
            return (sign / sign_ref) * math.exp(log_p - log_ref)

        half = (n - 1) // 2
        coeffs = _poly_from_values(fn, half)
        for m in range(half + 1):
            probs[2 * m + 1] = coeffs[m]
    return probs


def ginibre_pnn(n):
    """Probability that all eigenvalues are real, real Ginibre ensemble."""
    return 2.0 ** (-n * (n - 1) / 4.0)


def ginibre_expected_reals(n):
    """Expected number of real eigenvalues for the real Ginibre ensemble."""
    pre = math.sqrt(2.0 / math.pi) * math.exp(math.lgamma(n + 0.5) - math.lgamma(n))
    return 0.5 + pre * hyp2f1(1.0, -0.5, float(n), 0.5)


def ginibre_expected_reals_asymptotic(n):
    """Large-order expansion of the expected number of real eigenvalues."""
    return 0.5 + math.sqrt(2.0 * n / math.pi) * (
        1.0 - 3.0 / (8.0 * n) - 3.0 / (128.0 * n ** 2)
        + 27.0 / (1024.0 * n ** 3) + 499.0 / (32768.0 * n ** 4))


def ginibre_variance_reals(n):
    """Large-n variance relation for the number of real eigenvalues."""
    return (2.0 - math.sqrt(2.0)) * ginibre_expected_reals(n)


# ---------------------------------------------------------------------------
# partially symmetric real Ginibre ensemble


def partial_alpha(j, l):
    """Monomial-basis alpha entry (row index 2j-1, column index 2l; 1-based)."""
    total = 0.0
    for p in range(1, l + 1):
        total += math.gamma(j + p - 1.5) / (2.0 ** (p - 1) * math.gamma(p))
    return 2.0 ** l * math.gamma(l) * total


def _partial_i(j, tau):
    """Half-line Gaussian-moment integral entering the beta entries (odd j)."""
    if j % 2 == 0:
        raise ValueError("defined for odd j")
    h = (j - 1) // 2
    acc = 0.0
    poch = 1.0
    ratio = (1.0 - tau) / (1.0 + tau)
    for p in range(h + 1):
        if p > 0:
            poch *= (0.5 + p - 1) / p
        acc += (-1.0) ** p * ratio ** p * poch
    val = math.sqrt(2.0 / (1.0 + tau)) * acc - 1.0
    return math.gamma(h + 1) / 2.0 * val


def partial_beta(j, l, tau):
    """Monomial-basis beta entry (row index 2j-1, column index 2l; 1-based)."""
    total = 0.0
    for s in range(2 * j - 1):
        for t in range(2 * l):
            if (s + t) % 2 == 0:
                continue
            total += ((-1.0) ** t * sp.comb(2 * j - 2, s, exact=True)
                      * sp.comb(2 * l - 1, t, exact=True)
                      * math.gamma(j + l - 1.0 - (s + t) / 2.0)
                      * _partial_i(s + t, tau))
    return -4.0 * total


def partial_nu(j):
    """Monomial-basis one-sided integral; nonzero for odd index."""
    if j % 2 == 0:
        return 0.0
    return double_factorial(j - 2) * SQRT2PI


def partial_prob_gf(n, tau):
    """Probabilities p_{N,k} for the partially symmetric real Ginibre ensemble."""
    alpha = {}
    beta = {}
    for a in range(1, n + 1, 2):
        for b in range(2, n + 1, 2):
            alpha[(a, b)] = partial_alpha((a + 1) // 2, b // 2)
            beta[(a, b)] = partial_beta((a + 1) // 2, b // 2, tau)
    probs = np.zeros(n + 1)
    if n % 2 == 0:
        half = n // 2

        def build(s):
            c = np.zeros((half, half))
            for a in range(half):
                for b in range(half):
                    key = (2 * a + 1, 2 * b + 2)
                    c[a, b] = s * alpha[key] + beta[key]
            return c

        _, log_ref = np.linalg.slogdet(build(1.0))

        def fn(s):
            sign, log_d = np.linalg.slogdet(build(s))
            return sign * math.exp(log_d - log_ref)

        coeffs = _poly_from_values(fn, half)
        for m in range(half + 1):
            probs[2 * m] = coeffs[m]
    else:
        def core(s):
            a = np.zeros((n, n))
            for r in range(1, n + 1):
                for c in range(r + 1, n + 1):
                    if r % 2 == 1 and c % 2 == 0:
                        val = s * alpha[(r, c)] + beta[(r, c)]
                    elif r % 2 == 0 and c % 2 == 1:
                        val = -(s * alpha[(c, r)] + beta[(c, r)])
                    else:
                        continue
                    a[r - 1, c - 1] = val
                    a[c - 1, r - 1] = -val
            return a

        border = np.array([partial_nu(r) for r in range(1, n + 1)])
        sign_ref, log_ref = pfaffian.pfaffian_bordered_signed_log(core(1.0), border)

        def fn(s):
            sign, log_p = pfaffian.pfaffian_bordered_signed_log(core(s), border)
            return (sign / sign_ref) * math.exp(log_p - log_ref)

        half = (n - 1) // 2
        coeffs = _poly_from_values(fn, half)
        for m in range(half + 1):
            probs[2 * m + 1] = coeffs[m]
    return probs


def partial_pnn(n, tau):
    """Probability that all eigenvalues are real, partially symmetric ensemble."""
    return ((1.0 + tau) / 2.0) ** (n * (n - 1) / 4.0)


# ---------------------------------------------------------------------------
# real spherical ensemble


def _spherical_g(n):
    return math.exp(math.lgamma((n + 1) / 2.0) - math.lgamma(n / 2.0 + 1.0))


def spherical_norm_alpha(n, l):
    """Circle contribution to the norm of the l-th even/odd monomial pair."""
    return 2.0 * math.pi * _spherical_g(n) / (n - 1.0 - 4.0 * l)


def spherical_norm_beta(n, l):
    """Disk contribution to the norm of the l-th even/odd monomial pair."""
    h = math.exp(n * math.log(2.0) + math.lgamma(2 * l + 1) + math.lgamma(n - 2 * l)
                 - math.lgamma(n + 1))
    return (2.0 * math.sqrt(math.pi) / (n - 1.0 - 4.0 * l)) \
        * (h - math.sqrt(math.pi) * _spherical_g(n))


def spherical_norm_alpha_half(n, l):
    """Circle contribution for the shifted pairs appearing at odd order."""
    return 2.0 * math.pi * _spherical_g(n) / (n - 3.0 - 4.0 * l)


def spherical_norm_beta_half(n, l):
    """Disk contribution for the shifted pairs appearing at odd order."""
    h = math.exp(n * math.log(2.0) + math.lgamma(2 * l + 2) + math.lgamma(n - 2 * l - 1)
                 - math.lgamma(n + 1))
    return (2.0 * math.sqrt(math.pi) / (n - 3.0 - 4.0 * l)) \
        * (h - math.sqrt(math.pi) * _spherical_g(n))


def spherical_nu_bar(n):
    """Norm-type constant attached to the unpaired middle polynomial at odd order."""
    return math.pi * math.sqrt(math.exp(
        math.lgamma((n + 1) / 2.0) - math.lgamma(n / 2.0 + 1.0)))


def spherical_bernoulli(n):
    """Success probabilities t for the independent pair-by-pair real/complex choices."""
    log_g = math.lgamma((n + 1) / 2.0) - math.lgamma(n / 2.0 + 1.0)
    ts = []
    if n % 2 == 0:
        for l in range(n // 2):
            log_h = (n * math.log(2.0) + math.lgamma(2 * l + 1)
                     + math.lgamma(n - 2 * l) - math.lgamma(n + 1))
            ts.append(math.exp(0.5 * math.log(math.pi) + log_g - log_h))
    else:
        cut = math.ceil((n - 1) / 4.0)
        for l in range((n - 1) // 2):
            if l < cut:
                log_h = (n * math.log(2.0) + math.lgamma(2 * l + 1)
                         + math.lgamma(n - 2 * l) - math.lgamma(n + 1))
            else:
                log_h = (n * math.log(2.0) + math.lgamma(2 * l + 2)
                         + math.lgamma(n - 2 * l - 1) - math.lgamma(n + 1))
            ts.append(math.exp(0.5 * math.log(math.pi) + log_g - log_h))
    return np.array(ts)


def spherical_prob_gf(n):
    """Probabilities p_{N,k} of k real eigenvalues for the real spherical ensemble."""
    ts = spherical_bernoulli(n)
    poly = np.array([1.0])
    for t in ts:
        poly = np.convolve(poly, np.array([1.0 - t, 0.0, t]))
    probs = np.zeros(n + 1)
    off = 1 if n % 2 == 1 else 0
    for k, c in enumerate(poly):
        probs[k + off] = c
    return probs


def spherical_expected_reals(n):
    """Expected number of real eigenvalues for the real spherical ensemble."""
    return math.sqrt(math.pi) * math.exp(math.lgamma((n + 1) / 2.0)
                                         - math.lgamma(n / 2.0))


def spherical_variance_reals(n):
    """Variance of the number of real eigenvalues for the real spherical ensemble."""
    log_corr = (2.0 * math.lgamma((n + 1) / 2.0) + math.lgamma(n - 0.5)
                - 2.0 * math.lgamma(n / 2.0) - math.lgamma(float(n)))
    return 2.0 * spherical_expected_reals(n) \
        - 2.0 * math.sqrt(math.pi) * math.exp(log_corr)


def gaussian_local_limit_curve(n):
    """Standardized exact probabilities against the limiting Gaussian profile.

    Returns (x, scaled_p, gauss) where scaled_p should approach gauss.
    """
    probs = spherical_prob_gf(n)
    mean = spherical_expected_reals(n)
    std = math.sqrt(spherical_variance_reals(n))
    ks = np.nonzero(probs > 0)[0]
    xs = (ks - mean) / std
    scaled = std * probs[ks] / 2.0
    gauss = np.exp(-xs * xs / 2.0) / math.sqrt(2.0 * math.pi)
    return xs, scaled, gauss


# ---------------------------------------------------------------------------
# real truncated orthogonal ensemble


def _trunc_cw(big_l):
    return math.sqrt(big_l * math.gamma((big_l + 1) / 2.0)
                     / math.gamma(big_l / 2.0)) / (math.sqrt(2.0) * math.pi ** 0.25)


def _trunc_moment_antiderivative(big_l, m, y):
    """Integral of x^m (1 - x^2)^(L/2 - 1) from -1 to y (vectorized in y)."""
    bm = 0.5 * sp.beta((m + 1) / 2.0, big_l / 2.0)
    inc = sp.betainc((m + 1) / 2.0, big_l / 2.0, np.minimum(y * y, 1.0))
    pos = (-1.0) ** m + inc
    neg = (-1.0) ** m * (1.0 - inc)
    return bm * np.where(y >= 0, pos, neg)


def truncated_theta(coeffs, big_l):
    """Full-interval integral of a polynomial against the truncation weight."""
    cw = _trunc_cw(big_l)
    total = 0.0
    for m, c in enumerate(np.asarray(coeffs)):
        if c != 0.0 and m % 2 == 0:
            total += c * sp.beta((m + 1) / 2.0, big_l / 2.0)
    return cw * total


def _trunc_alpha(fc, gc, big_l, n_nodes=240):
    """Sign-weighted double integral of two polynomials against the real weight."""
    cw = _trunc_cw(big_l)
    fc = np.asarray(fc)
    total_f = 0.0
    for m, c in enumerate(fc):
        if c != 0.0:
            total_f += c * float(_trunc_moment_antiderivative(big_l, m, 1.0))
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    vals = 0.0
    for lo, hi in ((-math.pi / 2.0, 0.0), (0.0, math.pi / 2.0)):
        u = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
        wu = 0.5 * (hi - lo) * w
        y = np.sin(u)
        wy = cw * np.cos(u) ** (big_l - 1)
        pf = np.zeros_like(y)
        for m, c in enumerate(fc):
            if c != 0.0:
                pf += c * _trunc_moment_antiderivative(big_l, m, y)
        g = sopoly.eval_poly(gc, y)
        vals += np.sum(wu * wy * g * (2.0 * cw * pf - cw * total_f))
    return vals


def truncated_prob_gf(m, big_l):
    """Probabilities p_{M,k} of k real eigenvalues for the truncated ensemble."""
    if m > 12:
        raise ValueError("supported up to order 12")
    fam = sopoly.truncated_family(m, big_l)
    probs = np.zeros(m + 1)
    if m % 2 == 0:
        half = m // 2
        a = np.zeros((half, half))
        for j in range(half):
            for l in range(half):
                a[j, l] = _trunc_alpha(fam.coeffs[2 * j], fam.coeffs[2 * l + 1], big_l)

        def build(s):
            return (s - 1.0) * a + np.diag(fam.norms)

        _, log_ref = np.linalg.slogdet(build(1.0))

        def fn(s):
            sign, log_d = np.linalg.slogdet(build(s))
            return sign * math.exp(log_d - log_ref)

        coeffs = _poly_from_values(fn, half)
        for k in range(half + 1):
            probs[2 * k] = coeffs[k]
    else:
        n_pairs = (m - 1) // 2
        a = np.zeros((n_pairs + 1, n_pairs))
        for j in range(n_pairs + 1):
            for l in range(n_pairs):
                a[j, l] = _trunc_alpha(fam.coeffs[2 * j], fam.coeffs[2 * l + 1], big_l)
        border = np.array([truncated_theta(c, big_l) for c in fam.coeffs])

        def core(s):
            mat = np.zeros((m, m))
            for j in range(n_pairs + 1):
                for l in range(n_pairs):
                    val = (s - 1.0) * a[j, l]
                    if j == l:
                        val += fam.norms[j]
                    mat[2 * j, 2 * l + 1] = val
                    mat[2 * l + 1, 2 * j] = -val
            return mat

        sign_ref, log_ref = pfaffian.pfaffian_bordered_signed_log(core(1.0), border)

        def fn(s):
            sign, log_p = pfaffian.pfaffian_bordered_signed_log(core(s), border)
            return (sign / sign_ref) * math.exp(log_p - log_ref)

        coeffs = _poly_from_values(fn, n_pairs)
        for k in range(n_pairs + 1):
            probs[2 * k + 1] = coeffs[k]
    return probs


def _log_vol_orthogonal(n):
    from .specfun import log_vol_orthogonal

    return log_vol_orthogonal(n)


def truncated_pmm(m, big_l):
    """Closed-form probability that all eigenvalues of the truncation are real."""
    log_c = (_log_vol_orthogonal(big_l) + _log_vol_orthogonal(m)
             - _log_vol_orthogonal(big_l + m)
             + (m / 2.0) * (big_l * math.log(2.0 * math.pi) - math.lgamma(big_l + 1)))
    log_p = (m * (big_l - 1.0) + m * m / 2.0) * math.log(2.0)
    log_p += log_c
    log_p -= (3.0 * m / 4.0) * math.log(math.pi) + math.lgamma(m + 1.0)
    log_p += (m / 2.0) * (math.log(big_l) + math.lgamma((big_l + 1) / 2.0)
                          - math.lgamma(big_l / 2.0))
    for j in range(m):
        log_p += (2.0 * math.lgamma((big_l + j) / 2.0) + math.lgamma((j + 3) / 2.0)
                  - math.lgamma(big_l + (m + j - 1) / 2.0))
    return math.exp(log_p)


def truncated_expected_reals(m, big_l):
    """Expected number of real eigenvalues from the exact probabilities."""
    probs = truncated_prob_gf(m, big_l)
    return float(np.dot(np.arange(m + 1), probs))


def truncated_expected_reals_strong(m, big_l):
    """Large-order expectation at fixed truncation depth."""
    alpha = m / (m + big_l)
    pre = 2.0 * math.gamma((big_l + 1) / 2.0) / (math.sqrt(math.pi)
                                                 * math.gamma(big_l / 2.0))
    return pre * math.atanh(math.sqrt(alpha))


def truncated_expected_reals_log(m, big_l):
    """Leading logarithmic growth of the expectation at fixed truncation depth."""
    return math.gamma((big_l + 1) / 2.0) / (math.sqrt(math.pi)
                                            * math.gamma(big_l / 2.0)) * math.log(m)


def truncated_expected_reals_weak(m):
    """Expectation in the weakly orthogonal regime of deep truncation."""
    return math.sqrt(2.0 * m / math.pi)


# ---------------------------------------------------------------------------
# dispatch and rational reconstruction


def prob_table(ensemble, n, tau=None, big_l=None):
    """Exact distribution of the number of real eigenvalues for an ensemble."""
    if ensemble == "goe":
        probs = np.zeros(n + 1)
        probs[n] = 1.0
        return probs
    if ensemble == "ginibre":
        return ginibre_prob_gf(n)
    if ensemble == "partial":
        if tau is None:
            raise ValueError("partial ensemble requires tau")
        return partial_prob_gf(n, tau)
    if ensemble == "spherical":
        return spherical_prob_gf(n)
    if ensemble == "truncated":
        if big_l is None:
            raise ValueError("truncated ensemble requires L")
        return truncated_prob_gf(n, big_l)
    raise ValueError("unknown ensemble %r" % (ensemble,))


def rational_form(x, max_denominator=2 ** 24, tol=1e-9):
    """Best small-denominator rational approximation, or None outside tolerance."""
    frac = Fraction(x).limit_denominator(max_denominator)
    if abs(float(frac) - x) <= tol * max(1.0, abs(x)):
        return frac
    return None
