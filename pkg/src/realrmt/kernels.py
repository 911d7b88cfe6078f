"""Correlation kernels, eigenvalue densities and their scaling limits."""

import math

import numpy as np
from scipy import special as sp

from . import pfaffian, sopoly
from .specfun import upper_gamma_regularized

C2PI = 1.0 / math.sqrt(2.0 * math.pi)


# ---------------------------------------------------------------------------
# shared Gaussian helpers


def _hermite_vals(n, x):
    """Physicists' Hermite polynomial values H_0..H_n at x."""
    x = np.asarray(x, dtype=float)
    out = [np.ones_like(x), 2.0 * x]
    for k in range(1, n):
        out.append(2.0 * x * out[k] - 2.0 * k * out[k - 1])
    return out[: n + 1]


def _gauss_lower_moment(m, x):
    """Integral of t^m e^{-t^2/2} from -infinity to x."""
    x = np.asarray(x, dtype=float)
    half = 2.0 ** ((m - 1) / 2.0) * math.gamma((m + 1) / 2.0)
    inc = sp.gammainc((m + 1) / 2.0, x * x / 2.0)
    if m % 2 == 0:
        return half + np.sign(x) * half * inc
    return -half * (1.0 - inc)


def _signed_integral_poly(coeffs, y, scale=1.0):
    """(1/2) integral of sgn(y - z) p(z) e^{-z^2/(2 scale)} dz for a polynomial p."""
    y = np.asarray(y, dtype=float)
    lower = np.zeros_like(y)
    total = 0.0
    rt = math.sqrt(scale)
    for m, c in enumerate(np.asarray(coeffs)):
        if c == 0.0:
            continue
        fac = c * rt ** (m + 1)
        lower = lower + fac * _gauss_lower_moment(m, y / rt)
        if m % 2 == 0:
            total += fac * 2.0 ** ((m - 1) / 2.0) * math.gamma((m + 1) / 2.0) * 2.0
    return lower - total / 2.0


# ---------------------------------------------------------------------------
# Gaussian orthogonal ensemble


def goe_phi(k, x):
    """One-sided Gaussian integral of the k-th skew polynomial."""
    fam = sopoly.goe_family(k + 1)
    return _signed_integral_poly(fam.coeffs[k], x)


def goe_s(n, x, y):
    """Scalar kernel S_N(x, y) for the Gaussian orthogonal ensemble, n even."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    h_x = _hermite_vals(n - 1, x)
    h_y = _hermite_vals(n - 1, y)
    c1 = 1.0 / (2.0 ** (n - 1) * math.sqrt(math.pi) * math.gamma(n - 1.0))
    c2 = 1.0 / (2.0 * math.sqrt(math.pi) * math.gamma(n - 1.0))
    num = h_x[n - 1] * h_y[n - 2] - h_x[n - 2] * h_y[n - 1]
    coincident = np.isclose(x, y)
    limit = 2.0 * (n - 1) * h_x[n - 2] * h_y[n - 2]
    if n > 2:
        limit = limit - 2.0 * (n - 2) * h_x[n - 1] * h_y[n - 3]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(coincident, limit,
                         num / np.where(coincident, 1.0, x - y))
    term1 = np.exp(-(x * x + y * y) / 2.0) * c1 * ratio
    term2 = np.exp(-y * y / 2.0) * c2 * h_y[n - 1] * goe_phi(n - 2, x)
    return term1 + term2


def goe_density(n, x):
    """Real eigenvalue density for the Gaussian orthogonal ensemble, n even."""
    x = np.asarray(x, dtype=float)
    h = _hermite_vals(n - 1, x)
    c1 = 1.0 / (2.0 ** (n - 2) * math.sqrt(math.pi) * math.gamma(n - 1.0))
    c2 = 1.0 / (2.0 * math.sqrt(math.pi) * math.gamma(n - 1.0))
    first = (n - 1.0) * h[n - 2] ** 2
    if n > 2:
        first = first - (n - 2.0) * h[n - 1] * h[n - 3]
    return (np.exp(-x * x) * c1 * first
            + np.exp(-x * x / 2.0) * c2 * h[n - 1] * goe_phi(n - 2, x))


def goe_d(n, x, y):
    """Antisymmetric partner kernel D_N(x, y) = dS_N(x, y)/dx, n even."""
    fam = sopoly.goe_family(n)

    def q(j, t):
        return math.exp(-t * t / 2.0) * sopoly.eval_poly(fam.coeffs[j], t)

    total = 0.0
    for j in range(n // 2):
        total += (q(2 * j, x) * q(2 * j + 1, y)
                  - q(2 * j + 1, x) * q(2 * j, y)) / fam.norms[j]
    return total


def goe_itilde(n, x, y):
    """Antisymmetric partner kernel I~_N(x, y) from one-sided integrals, n even."""
    fam = sopoly.goe_family(n)

    def phi(j, t):
        return -_signed_integral_poly(fam.coeffs[j], t)

    total = 0.0
    for j in range(n // 2):
        total += (phi(2 * j, x) * phi(2 * j + 1, y)
                  - phi(2 * j + 1, x) * phi(2 * j, y)) / fam.norms[j]
    return -total - 0.5 * np.sign(x - y)


def goe_semicircle(x):
    """Limiting global density (2/pi) sqrt(1 - x^2) on [-1, 1]."""
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) <= 1.0, 2.0 / math.pi * np.sqrt(np.clip(1 - x * x, 0, None)), 0.0)


class GOEKernel:
    """Kernel-element source for n-point correlations, real species only."""

    def __init__(self, n):
        self.n = n

    def s(self, p, q):
        return goe_s(self.n, p[1], q[1])

    def d(self, p, q):
        return goe_d(self.n, p[1], q[1])

    def itilde(self, p, q):
        if p[1] == q[1]:
            return 0.0
        return goe_itilde(self.n, p[1], q[1])


# ---------------------------------------------------------------------------
# real Ginibre ensemble


def _pow_exp(x, k, quad):
    """x^k e^{-quad} with log-domain magnitude control for real x."""
    if x == 0.0:
        return 0.0 if k > 0 else math.exp(-quad)
    return math.copysign(1.0, x) ** k * math.exp(k * math.log(abs(x)) - quad)


def _gin_tail(n, x, y):
    """Second summand of S_rr: the finite-size correction term."""
    if x == 0.0 and n > 1:
        return 0.0
    lead = ((n - 3.0) / 2.0 * math.log(2.0) + math.lgamma((n - 1.0) / 2.0)
            - math.lgamma(n - 1.0))
    inc = sp.gammainc((n - 1.0) / 2.0, y * y / 2.0)
    return (math.copysign(1.0, y) * inc
            * _pow_exp(x, n - 1, x * x / 2.0) * math.exp(lead))


def _rt_erfc(w):
    return math.sqrt(sp.erfc(math.sqrt(2.0) * abs(w.imag)))


def ginibre_srr(n, x, y):
    """Real-real kernel element S for the real Ginibre ensemble."""
    q = upper_gamma_regularized(n - 1, x * y)
    return C2PI * (math.exp(-(x - y) ** 2 / 2.0) * q + _gin_tail(n, x, y))


def ginibre_src(n, x, w):
    """Real-complex kernel element S."""
    q = upper_gamma_regularized(n - 1, complex(x) * np.conj(w))
    wb = np.conj(w)
    return 1j * C2PI * np.exp(-(x - wb) ** 2 / 2.0) * (wb - x) * q * _rt_erfc(w)


def ginibre_scr(n, w, x):
    """Complex-real kernel element S."""
    q = upper_gamma_regularized(n - 1, w * x)
    lead = ((n - 3.0) / 2.0 * math.log(2.0) + math.lgamma((n - 1.0) / 2.0)
            - math.lgamma(n - 1.0))
    inc = sp.gammainc((n - 1.0) / 2.0, x * x / 2.0)
    tail = math.copysign(1.0, x) * inc * w ** (n - 1) * np.exp(-w * w / 2.0 + lead)
    return C2PI * (np.exp(-(w - x) ** 2 / 2.0) * q + tail) * _rt_erfc(w)


def ginibre_scc(n, w, z):
    """Complex-complex kernel element S."""
    zb = np.conj(z)
    q = upper_gamma_regularized(n - 1, w * zb)
    return (1j * C2PI * np.exp(-(w - zb) ** 2 / 2.0) * (zb - w) * q
            * _rt_erfc(w) * _rt_erfc(z))


def ginibre_drr(n, x, y):
    """Real-real kernel element D."""
    q = upper_gamma_regularized(n - 1, x * y)
    return C2PI * math.exp(-(x - y) ** 2 / 2.0) * (y - x) * q


def ginibre_drc(n, x, w):
    """Real-complex kernel element D."""
    q = upper_gamma_regularized(n - 1, complex(x) * w)
    return C2PI * np.exp(-(x - w) ** 2 / 2.0) * (w - x) * q * _rt_erfc(w)


def ginibre_dcc(n, w, z):
    """Complex-complex kernel element D."""
    q = upper_gamma_regularized(n - 1, w * z)
    return (C2PI * np.exp(-(w - z) ** 2 / 2.0) * (z - w) * q
            * _rt_erfc(w) * _rt_erfc(z))


def _gin_half_moment(k2, y):
    """Integral of t^k2 e^{-t^2/2} from 0 to y (k2 even)."""
    return (math.copysign(1.0, y) * 2.0 ** ((k2 - 1) / 2.0)
            * math.gamma((k2 + 1) / 2.0) * sp.gammainc((k2 + 1) / 2.0, y * y / 2.0))


def ginibre_irr(n, x, y):
    """Real-real kernel element I~."""
    def one_sided(a, b):
        total = 0.0
        if n % 2 == 0:
            for k in range(n // 2):
                total += (_pow_exp(a, 2 * k, a * a / 2.0) / math.gamma(2 * k + 1)
                          * _gin_half_moment(2 * k, b))
        else:
            nb = _dfact(n - 2) * math.sqrt(2.0 * math.pi)
            gn = (2.0 ** (n / 2.0 - 1.0) * math.gamma(n / 2.0)
                  * sp.gammainc(n / 2.0, b * b / 2.0) * math.copysign(1.0, b))
            for k in range((n - 1) // 2):
                nk = _dfact(2 * k - 1) * math.sqrt(2.0 * math.pi)
                total += (_pow_exp(a, 2 * k, a * a / 2.0) / math.gamma(2 * k + 1)
                          * (_gin_half_moment(2 * k, b) - nk / nb * gn))
            total += gn / nb
        return total

    return C2PI * (one_sided(x, y) - one_sided(y, x)) + 0.5 * np.sign(x - y)


def _dfact(k):
    if k <= 0:
        return 1.0
    r = 1.0
    while k > 1:
        r *= k
        k -= 2
    return r


def ginibre_irc(n, x, w):
    """Real-complex kernel element I~."""
    wb = np.conj(w)
    q = upper_gamma_regularized(n - 1, complex(x) * wb)
    lead = ((n - 3.0) / 2.0 * math.log(2.0) + math.lgamma((n - 1.0) / 2.0)
            - math.lgamma(n - 1.0))
    inc = sp.gammainc((n - 1.0) / 2.0, x * x / 2.0)
    tail = math.copysign(1.0, x) * inc * wb ** (n - 1) * np.exp(-wb * wb / 2.0 + lead)
    return -1j * C2PI * (np.exp(-(x - wb) ** 2 / 2.0) * q + tail) * _rt_erfc(w)


def ginibre_icc(n, w, z):
    """Complex-complex kernel element I~."""
    wb, zb = np.conj(w), np.conj(z)
    q = upper_gamma_regularized(n - 1, wb * zb)
    return (1j * C2PI * np.exp(-(wb - zb) ** 2 / 2.0) * (wb - zb) * q
            * _rt_erfc(w) * _rt_erfc(z))


def ginibre_density_real(n, x):
    """Density of real eigenvalues for the real Ginibre ensemble."""
    x = float(x)
    q = upper_gamma_regularized(n - 1, x * x)
    lead = ((n - 3.0) / 2.0 * math.log(2.0) + math.lgamma((n - 1.0) / 2.0)
            - math.lgamma(n - 1.0))
    inc = sp.gammainc((n - 1.0) / 2.0, x * x / 2.0)
    tail = inc * _pow_exp(abs(x), n - 1, x * x / 2.0) * math.exp(lead)
    return C2PI * (q + tail)


def ginibre_density_complex(n, w):
    """Density of complex eigenvalues for the real Ginibre ensemble."""
    v = abs(np.imag(w))
    q = upper_gamma_regularized(n - 1, abs(w) ** 2)
    return math.sqrt(2.0 / math.pi) * v * q * sp.erfcx(math.sqrt(2.0) * v)


def ginibre_bulk_block_rr(x, y):
    """Bulk-scaled 2x2 real-real kernel block [[S, D], [I~, S]]."""
    d = x - y
    s = C2PI * math.exp(-d * d / 2.0)
    return np.array([
        [s, d * s],
        [0.5 * np.sign(d) * sp.erfc(abs(d) / math.sqrt(2.0)), s]])


def ginibre_bulk_scc(w1, w2):
    """Bulk-scaled complex-complex S element."""
    w2b = np.conj(w2)
    return (1j * C2PI * (w2b - w1) * np.exp(-(w2b - w1) ** 2 / 2.0)
            * _rt_erfc(w1) * _rt_erfc(w2))


def ginibre_edge_srr(u, x, y):
    """Edge-scaled real-real S element at the spectrum edge u = +/- 1."""
    return C2PI * (math.exp(-(x - y) ** 2 / 2.0) / 2.0
                   * sp.erfc(u * (x + y) / math.sqrt(2.0))
                   + math.exp(-x * x) / (2.0 * math.sqrt(2.0))
                   * (1.0 + sp.erf(u * y)))


def circular_law_density():
    """Uniform scaled complex density inside the unit disk."""
    return 1.0 / math.pi


class GinibreKernel:
    """Kernel-element source for n-point correlations of the real Ginibre ensemble."""

    def __init__(self, n):
        self.n = n

    def s(self, p, q):
        if p[0] == "r" and q[0] == "r":
            return ginibre_srr(self.n, p[1], q[1])
        if p[0] == "r":
            return ginibre_src(self.n, p[1], q[1])
        if q[0] == "r":
            return ginibre_scr(self.n, p[1], q[1])
        return ginibre_scc(self.n, p[1], q[1])

    def d(self, p, q):
        if p[0] == "r" and q[0] == "r":
            return ginibre_drr(self.n, p[1], q[1])
        if p[0] == "r":
            return ginibre_drc(self.n, p[1], q[1])
        if q[0] == "r":
            return -ginibre_drc(self.n, q[1], p[1])
        return ginibre_dcc(self.n, p[1], q[1])

    def itilde(self, p, q):
        if p[0] == "r" and q[0] == "r":
            if p[1] == q[1]:
                return 0.0
            return ginibre_irr(self.n, p[1], q[1])
        if p[0] == "r":
            return ginibre_irc(self.n, p[1], q[1])
        if q[0] == "r":
            return -ginibre_irc(self.n, q[1], p[1])
        return ginibre_icc(self.n, p[1], q[1])


# ---------------------------------------------------------------------------
# partially symmetric real Ginibre ensemble


def _partial_nu_bar(coeffs, c):
    """Integral of R(z) e^{-z^2/(2c)} dz for a polynomial R."""
    total = 0.0
    for m, a in enumerate(np.asarray(coeffs)):
        if a != 0.0 and m % 2 == 0:
            total += a * math.sqrt(2.0 * math.pi * c) * c ** (m // 2) \
                * _dfact(m - 1)
    return total


def partial_srr(n, tau, x, y):
    """Real-real kernel element S for the partially symmetric ensemble."""
    fam = sopoly.partial_family(n if n % 2 == 0 else n + 1, tau)
    c = 1.0 + tau
    h = lambda t: math.exp(-t * t / (2.0 * c))
    if n % 2 == 0:
        coeffs = fam.coeffs
        extra = 0.0
    else:
        nu_last = _partial_nu_bar(fam.coeffs[n - 1], c)
        coeffs = []
        for j in range(n - 1):
            cj = np.asarray(fam.coeffs[j], dtype=float)
            nu_j = _partial_nu_bar(fam.coeffs[j], c)
            if nu_j != 0.0:
                cj = np.polynomial.polynomial.polysub(
                    cj, (nu_j / nu_last) * np.asarray(fam.coeffs[n - 1]))
            coeffs.append(cj)
        extra = h(x) * sopoly.eval_poly(fam.coeffs[n - 1], x) / nu_last
    total = extra
    for j in range((n - 1 if n % 2 else n) // 2):
        q_even = h(x) * sopoly.eval_poly(coeffs[2 * j], x)
        q_odd = h(x) * sopoly.eval_poly(coeffs[2 * j + 1], x)
        phi_even = -_signed_integral_poly(coeffs[2 * j], y, scale=c)
        phi_odd = -_signed_integral_poly(coeffs[2 * j + 1], y, scale=c)
        total += 2.0 / fam.norms[j] * (q_even * phi_odd - q_odd * phi_even)
    return total


def partial_density_real(n, tau, x):
    """Density of real eigenvalues for the partially symmetric ensemble."""
    return partial_srr(n, tau, x, x)


def partial_bulk_srr(tau, delta):
    """Bulk real-real S element as a function of the separation."""
    v = 1.0 - tau * tau
    return math.exp(-delta * delta / (2.0 * v)) / math.sqrt(2.0 * math.pi * v)


def partial_bulk_density_complex(tau, v):
    """Bulk density of complex eigenvalues at height v above the real axis."""
    c = 1.0 - tau * tau
    return math.sqrt(2.0 / math.pi) * sp.erfcx(math.sqrt(2.0 / c) * v) * v / c


def elliptical_support(n, tau):
    """Semi-axes of the limiting elliptical support."""
    return (1.0 + tau) * math.sqrt(n), (1.0 - tau) * math.sqrt(n)


def elliptical_density(tau):
    """Uniform density inside the scaled ellipse."""
    return 1.0 / (math.pi * (1.0 - tau * tau))


def crossover_srr(alpha, x, y, nodes=400):
    """Weak-asymmetry crossover limit of the scaled real-real S element."""
    t, w = np.polynomial.legendre.leggauss(nodes)
    tt = 0.5 * (t + 1.0)
    ww = 0.5 * w
    return float(np.sum(ww * np.exp(-alpha ** 2 * tt) * np.cos(math.pi * (x - y) * tt)))


def crossover_scc(alpha, w1, w2, nodes=400):
    """Weak-asymmetry crossover limit of the scaled complex-complex S element."""
    t, w = np.polynomial.legendre.leggauss(nodes)
    tt = 0.5 * (t + 1.0)
    ww = 0.5 * w
    v1, v2 = abs(np.imag(w1)), abs(np.imag(w2))
    pref = 1j * math.pi * math.sqrt(sp.erfc(math.pi * v1 / alpha)
                                    * sp.erfc(math.pi * v2 / alpha))
    arg = math.pi * (np.conj(w1) - w2)
    return pref * np.sum(ww * tt * np.exp(-alpha ** 2 * tt ** 2) * np.sin(arg * tt))


# ---------------------------------------------------------------------------
# real spherical ensemble


def _sph_tail(u, n):
    """Integral of (1 + t^2)^(-(n/2 + 1)) from u to infinity (signed lower limit)."""
    b = (n + 1) / 2.0
    btot = sp.beta(0.5, b)
    half = 0.5 * btot * sp.betainc(b, 0.5, 1.0 / (1.0 + u * u))
    return np.where(u >= 0, half, btot - half)


def spherical_srr(n, t1, t2):
    """Circle-circle kernel element S as a function of the two angles."""
    pre = math.exp(math.lgamma((n + 1) / 2.0) - math.lgamma(n / 2.0)) \
        / (2.0 * math.sqrt(math.pi))
    return pre * np.cos((t2 - t1) / 2.0) ** (n - 1)


def spherical_drr(n, t1, t2):
    """Circle-circle kernel element D = dS/d(theta_2)."""
    pre = math.exp(math.lgamma((n + 1) / 2.0) - math.lgamma(n / 2.0)) \
        / (2.0 * math.sqrt(math.pi))
    half = (t2 - t1) / 2.0
    return -pre * (n - 1) / 2.0 * np.cos(half) ** (n - 2) * np.sin(half)


def spherical_irr(n, t1, t2, nodes=400):
    """Circle-circle kernel element I~ by quadrature of S."""
    t, w = np.polynomial.legendre.leggauss(nodes)
    tt = 0.5 * (t2 - t1) * t + 0.5 * (t1 + t2)
    ww = 0.5 * (t2 - t1) * w
    return float(np.sum(ww * spherical_srr(n, t1, tt))) + np.sign(t1 - t2)


def spherical_density_real(n):
    """Uniform density of the angles of real eigenvalues on the circle."""
    return math.exp(math.lgamma((n + 1) / 2.0) - math.lgamma(n / 2.0)) \
        / (2.0 * math.sqrt(math.pi))


def spherical_density_complex(n, w):
    """Density of disk-mapped complex eigenvalues at the point w, |w| < 1."""
    r = abs(w)
    u = (1.0 / r - r) / 2.0
    tail = float(_sph_tail(u, n))
    return (n * (n - 1.0) / (2.0 ** (n + 1) * math.pi * r * r)
            * (1.0 / r + r) ** (n - 2) * (1.0 / r - r) * tail)


def spherical_scc(n, w, z):
    """Disk-disk kernel element S."""
    rw, rz = abs(w), abs(z)
    tw, tz = np.angle(w), np.angle(z)
    jw = float(_sph_tail((1.0 / rw - rw) / 2.0, n))
    jz = float(_sph_tail((1.0 / rz - rz) / 2.0, n))
    rr = rw * rz
    plus = rr ** -0.5 * np.exp(1j * (tz - tw) / 2.0) + rr ** 0.5 * np.exp(-1j * (tz - tw) / 2.0)
    minus = rr ** -0.5 * np.exp(1j * (tz - tw) / 2.0) - rr ** 0.5 * np.exp(-1j * (tz - tw) / 2.0)
    return (n * (n - 1.0) / (2.0 ** (n + 1) * math.pi * rw * rz)
            * math.sqrt(jw * jz) * plus ** (n - 2) * minus)


def spherical_bulk_real_scaled(n, x1, x2):
    """Bulk-scaled real-real S element and its Gaussian limit."""
    val = 2.0 / math.sqrt(n) * spherical_srr(n, 2.0 * x1 / math.sqrt(n),
                                             2.0 * x2 / math.sqrt(n))
    lim = C2PI * math.exp(-(x1 - x2) ** 2 / 2.0)
    return val, lim


def spherical_bulk_complex_scaled(n, w1, w2):
    """Edge-of-circle scaled complex-complex S element and its flat limit."""
    z1 = 1.0 + 2j * w1 / math.sqrt(n)
    z2 = 1.0 + 2j * w2 / math.sqrt(n)
    val = 4.0 / n * spherical_scc(n, z1, z2)
    lim = ginibre_bulk_scc(w1, w2)
    return val, lim


def spherical_complex_limit_density(r):
    """Scaled limiting density of complex eigenvalues in the disk."""
    return 1.0 / (math.pi * (1.0 + r * r) ** 2)


class SphericalKernel:
    """Kernel-element source for correlations of real (angle) points."""

    def __init__(self, n):
        self.n = n

    def s(self, p, q):
        return spherical_srr(self.n, p[1], q[1])

    def d(self, p, q):
        return spherical_drr(self.n, p[1], q[1])

    def itilde(self, p, q):
        if p[1] == q[1]:
            return 0.0
        return spherical_irr(self.n, p[1], q[1])


# ---------------------------------------------------------------------------
# real truncated orthogonal ensemble


def trunc_omega_real(big_l, x):
    """Real-axis weight of the truncated ensemble."""
    cw = (math.sqrt(big_l * math.gamma((big_l + 1) / 2.0)
                    / math.gamma(big_l / 2.0)) / (math.sqrt(2.0) * math.pi ** 0.25))
    return cw * (1.0 - x * x) ** (big_l / 2.0 - 1.0)


def trunc_omega_sq_complex(big_l, z):
    """Squared complex weight of the truncated ensemble inside the disk."""
    q = abs(1.0 - z * z)
    y = abs(np.imag(z))
    if big_l == 1:
        return 1.0 / (2.0 * math.pi * q)
    u = min(2.0 * y / q, 1.0)
    tail = 0.5 * sp.beta(0.5, (big_l - 1) / 2.0) \
        * (1.0 - sp.betainc(0.5, (big_l - 1) / 2.0, u * u))
    return big_l * (big_l - 1.0) / (2.0 * math.pi) * q ** (big_l - 2.0) * tail


def truncated_d(m, big_l, mu, eta, species=("r", "r")):
    """Kernel element D for the truncated ensemble, any species pair."""
    def omega(val, sp_tag):
        if sp_tag == "r":
            return trunc_omega_real(big_l, val)
        return math.sqrt(trunc_omega_sq_complex(big_l, val))

    prod = mu * eta
    total = 0.0
    coeff = 1.0
    for j in range(m - 1):
        if j > 0:
            coeff *= (big_l + j) / j
        total = total + coeff * prod ** j
    return 2.0 * omega(mu, species[0]) * omega(eta, species[1]) * (eta - mu) * total


def _trunc_tau_poly(coeffs, big_l, y):
    """tau_j(y) = -(1/2) integral of sgn(y - z) omega(z) p_j(z) dz."""
    from .analytics import _trunc_cw, _trunc_moment_antiderivative

    cw = _trunc_cw(big_l)
    total = 0.0
    lower = 0.0
    for m, c in enumerate(np.asarray(coeffs)):
        if c == 0.0:
            continue
        lower += c * _trunc_moment_antiderivative(big_l, m, y)
        total += c * float(_trunc_moment_antiderivative(big_l, m, 1.0))
    return -cw * (lower - total / 2.0)


def truncated_srr(m, big_l, x, y):
    """Real-real kernel element S for the truncated ensemble, m even."""
    fam = sopoly.truncated_family(m, big_l)
    r_last = fam.norms[m // 2 - 1]
    tau_val = _trunc_tau_poly(fam.coeffs[m - 2], big_l, y)
    first = -2.0 * trunc_omega_real(big_l, x) / r_last * x ** (m - 1) * tau_val
    pre = math.exp(math.lgamma((big_l + 1) / 2.0) - math.lgamma(big_l / 2.0)) \
        / math.sqrt(math.pi)
    coeff = 1.0
    total = 0.0
    for j in range(m - 1):
        if j > 0:
            coeff *= (big_l + j - 1.0) / j
        total += coeff * (x * y) ** j
    second = pre * (1.0 - x * x) ** (big_l / 2.0 - 1.0) \
        * (1.0 - y * y) ** (big_l / 2.0) * total
    return first + second


def truncated_density_real(m, big_l, x):
    """Density of real eigenvalues for the truncated ensemble, m even."""
    fam = sopoly.truncated_family(m, big_l)
    r_last = fam.norms[m // 2 - 1]
    tau_val = _trunc_tau_poly(fam.coeffs[m - 2], big_l, x)
    first = -2.0 * trunc_omega_real(big_l, x) / r_last * x ** (m - 1) * tau_val
    pre = math.exp(math.lgamma((big_l + 1) / 2.0) - math.lgamma(big_l / 2.0)) \
        / math.sqrt(math.pi)
    second = pre * (1.0 - sp.betainc(m - 1.0, float(big_l), x * x)) / (1.0 - x * x)
    return first + second


def truncated_density_complex(m, big_l, z):
    """Density of complex eigenvalues for the truncated ensemble."""
    y = abs(np.imag(z))
    r2 = abs(z) ** 2
    q = abs(1.0 - z * z)
    tail_beta = 1.0 - sp.betainc(m - 1.0, big_l + 1.0, r2)
    if big_l == 1:
        return 2.0 * y / (math.pi * q * (1.0 - r2) ** 2) * tail_beta
    u = min(2.0 * y / q, 1.0)
    tail = 0.5 * sp.beta(0.5, (big_l - 1) / 2.0) \
        * (1.0 - sp.betainc(0.5, (big_l - 1) / 2.0, u * u))
    return (2.0 * y * big_l * (big_l - 1.0) / math.pi * q ** (big_l - 2.0)
            * (1.0 - r2) ** (-(big_l + 1.0)) * tail * tail_beta)


def truncated_strong_density_real(big_l, x):
    """Strong-truncation limit of the real density."""
    pre = math.exp(math.lgamma((big_l + 1) / 2.0) - math.lgamma(big_l / 2.0)) \
        / math.sqrt(math.pi)
    return pre / (1.0 - x * x)


def truncated_weak_density_real(m, big_l, x):
    """Weak-truncation limit of the real density on (-sqrt(alpha), sqrt(alpha))."""
    n = m + big_l
    alpha = m / n
    if abs(x) >= math.sqrt(alpha):
        return 0.0
    return math.sqrt((1.0 - alpha) * n / (2.0 * math.pi)) / (1.0 - x * x)


def truncated_weak_srr(m, big_l, x, y):
    """Deep-truncation limit of S_rr at Gaussian scale; matches the Ginibre form."""
    return math.sqrt(big_l) * ginibre_srr(m, x, y)


def truncated_weak_density_complex(m, big_l, z):
    """Deep-truncation limit of the complex density at Gaussian scale."""
    return big_l * ginibre_density_complex(m, z)


def kappa_rr_l1(x, y):
    """Strongly orthogonal (depth-1) limit kernel block for two real points."""
    sx = math.sqrt(1.0 - x * x)
    sy = math.sqrt(1.0 - y * y)
    d = 1.0 - x * y
    return np.array([
        [sy / (sx * d), (x - y) / (sx * sy * d * d)],
        [np.sign(y - x) * math.asin(sx * sy / d), sx / (sy * d)]]) / math.pi


class TruncatedKernel:
    """Kernel-element source for real points of the truncated ensemble, m even."""

    def __init__(self, m, big_l):
        self.m = m
        self.big_l = big_l

    def s(self, p, q):
        return truncated_srr(self.m, self.big_l, p[1], q[1])

    def d(self, p, q):
        return truncated_d(self.m, self.big_l, p[1], q[1])


# ---------------------------------------------------------------------------
# n-point correlations


def npoint_correlation(kernel, points):
    """n-point correlation from the kernel elements via a 2n x 2n Pfaffian.

    points is a sequence of (species, value) pairs with species 'r' or 'c'.
    Coincident points are rejected; use the density functions instead.
    """
    pts = list(points)
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i] == pts[j]:
                raise ValueError("coincident points are not allowed")
    mat = np.zeros((2 * n, 2 * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            s_ij = kernel.s(pts[i], pts[j])
            if i == j:
                itld = 0.0
                d_ij = 0.0
                s_ji = s_ij
            else:
                itld = kernel.itilde(pts[i], pts[j])
                d_ij = kernel.d(pts[i], pts[j])
                s_ji = kernel.s(pts[j], pts[i])
            mat[2 * i, 2 * j] = -itld
            mat[2 * i, 2 * j + 1] = s_ij
            mat[2 * i + 1, 2 * j] = -s_ji
            mat[2 * i + 1, 2 * j + 1] = d_ij
    value = pfaffian.pfaffian(pfaffian.SkewMatrix(mat, tol=1e-8))
    return float(np.real(value))
