"""Skew-orthogonal polynomial families for the five ensembles."""

import math

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import special as sp


class PolynomialFamily:
    """A family of skew-orthogonal polynomials.

    coeffs[j] holds the ascending-power coefficients of the j-th polynomial;
    norms[k] is the skew inner product of the pair (2k, 2k+1).
    """

    def __init__(self, ensemble, coeffs, norms, params=None):
        self.ensemble = ensemble
        self.coeffs = [np.asarray(c, dtype=float) for c in coeffs]
        self.norms = np.asarray(norms, dtype=float)
        self.params = dict(params or {})

    def __len__(self):
        return len(self.coeffs)


def eval_poly(coeffs, x):
    """Evaluate ascending-power coefficients at x (Horner)."""
    return P.polyval(x, np.asarray(coeffs))


def _monomial(k):
    c = np.zeros(k + 1)
    c[k] = 1.0
    return c


def _hermite_coeffs(n_max):
    """Coefficient arrays of physicists' Hermite polynomials H_0..H_n_max."""
    hs = [np.array([1.0]), np.array([0.0, 2.0])]
    for n in range(1, n_max):
        nxt = 2.0 * np.concatenate(([0.0], hs[n])) - 2.0 * n * np.pad(hs[n - 1], (0, 2))
        hs.append(nxt)
    return hs[: n_max + 1]


def goe_family(n):
    """Skew-orthogonal polynomials and norms for the Gaussian orthogonal ensemble."""
    hs = _hermite_coeffs(n)
    coeffs = []
    for j in range(n):
        if j % 2 == 0:
            coeffs.append(hs[j] / 2.0 ** j)
        else:
            c = hs[j] / 2.0 ** j
            k = (j - 1) // 2
            if k > 0:
                c = P.polysub(c, k * hs[j - 2] / 2.0 ** (j - 2))
            coeffs.append(c)
    norms = [math.gamma(2 * k + 1) * math.sqrt(math.pi) / 2.0 ** (2 * k)
             for k in range((n + 1) // 2)]
    return PolynomialFamily("goe", coeffs, norms)


def ginibre_family(n):
    """Skew-orthogonal polynomials and norms for the real Ginibre ensemble."""
    coeffs = []
    for j in range(n):
        if j % 2 == 0:
            coeffs.append(_monomial(j))
        else:
            c = _monomial(j)
            k = (j - 1) // 2
            if k > 0:
                c = P.polysub(c, 2.0 * k * _monomial(j - 2))
            coeffs.append(c)
    norms = [2.0 * math.sqrt(2.0 * math.pi) * math.gamma(2 * k + 1)
             for k in range((n + 1) // 2)]
    return PolynomialFamily("ginibre", coeffs, norms)


def _partial_base(n, tau):
    """Rescaled Hermite-type polynomials C_j(z) with C_{j+1} = z C_j - tau j C_{j-1}."""
    cs = [np.array([1.0]), np.array([0.0, 1.0])]
    for j in range(1, n):
        nxt = np.concatenate(([0.0], cs[j]))
        nxt = P.polysub(nxt, tau * j * cs[j - 1])
        cs.append(np.asarray(nxt))
    return cs[: n + 1]


def partial_family(n, tau):
    """Skew-orthogonal polynomials and norms for the partially symmetric ensemble."""
    cs = _partial_base(n, tau)
    coeffs = []
    for j in range(n):
        if j % 2 == 0:
            coeffs.append(cs[j])
        else:
            c = cs[j]
            k = (j - 1) // 2
            if k > 0:
                c = P.polysub(c, 2.0 * k * cs[j - 2])
            coeffs.append(c)
    norms = [math.gamma(2 * k + 1) * 2.0 * math.sqrt(2.0 * math.pi) * (1.0 + tau)
             for k in range((n + 1) // 2)]
    return PolynomialFamily("partial", coeffs, norms, params={"tau": tau})


def spherical_family(big_n):
    """Skew-orthogonal polynomials and norms for the real spherical ensemble.

    Returns all big_n polynomials; pair norms come from the closed-form
    pair sums in the analytics module.
    """
    from . import analytics

    coeffs = []
    norms = []
    if big_n % 2 == 0:
        for l in range(big_n // 2):
            coeffs.append(_monomial(2 * l))
            coeffs.append(_monomial(big_n - 1 - 2 * l))
            norms.append(analytics.spherical_norm_alpha(big_n, l)
                         + analytics.spherical_norm_beta(big_n, l))
    else:
        for j in range((big_n - 1) // 2):
            if 2 * j < (big_n - 1) / 2:
                coeffs.append(_monomial(2 * j))
                coeffs.append(_monomial(big_n - 1 - 2 * j))
                norms.append(analytics.spherical_norm_alpha(big_n, j)
                             + analytics.spherical_norm_beta(big_n, j))
            else:
                coeffs.append(_monomial(2 * j + 1))
                coeffs.append(_monomial(big_n - 2 - 2 * j))
                norms.append(analytics.spherical_norm_alpha_half(big_n, j)
                             + analytics.spherical_norm_beta_half(big_n, j))
        coeffs.append(_monomial((big_n - 1) // 2))
    return PolynomialFamily("spherical", coeffs, norms, params={"N": big_n})


def truncated_family(n, big_l):
    """Skew-orthogonal polynomials and norms for the real truncated ensemble."""
    coeffs = []
    for j in range(n):
        if j % 2 == 0:
            coeffs.append(_monomial(j))
        else:
            c = _monomial(j)
            k = (j - 1) // 2
            if k > 0:
                c = P.polysub(c, (2.0 * k / (big_l + 2.0 * k)) * _monomial(j - 2))
            coeffs.append(c)
    norms = [math.exp(math.lgamma(big_l + 1) + math.lgamma(2 * k + 1)
                      - math.lgamma(big_l + 2 * k + 1))
             for k in range((n + 1) // 2)]
    return PolynomialFamily("truncated", coeffs, norms, params={"L": big_l})


# ---------------------------------------------------------------------------
# numerical skew inner products


def _gl_nodes(a, b, n):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w


def _sgn_pair_integral(f, g, weight, lo, hi, n=160):
    """Integral of w(x)w(y) f(x) g(y) sgn(y - x) over [lo, hi]^2.

    Evaluated as the integral of w(x)w(y)(f(x)g(y) - f(y)g(x)) over the
    triangle y > x, which is smooth and handled by nested Gauss-Legendre.
    """
    x, wx = _gl_nodes(lo, hi, n)
    total = 0.0
    for xi, wxi in zip(x, wx):
        y, wy = _gl_nodes(xi, hi, n)
        inner = np.sum(wy * weight(y) * (f(xi) * g(y) - f(y) * g(xi)))
        total += wxi * weight(xi) * inner
    return total


def _im_pair_integral(f, g, weight, xs, ys, n=160):
    """-4 * integral of W(x, y) Im(f(z) conj(g(z))) over a half-plane grid."""
    x, wx = _gl_nodes(xs[0], xs[1], n)
    y, wy = _gl_nodes(ys[0], ys[1], n)
    xg, yg = np.meshgrid(x, y, indexing="ij")
    z = xg + 1j * yg
    vals = weight(xg, yg) * np.imag(f(z) * np.conj(g(z)))
    return -4.0 * np.einsum("i,j,ij->", wx, wy, vals)


def _tail_integral(u, big_n):
    """Integral of (1 + t^2)^(-(N/2 + 1)) from u >= 0 to infinity."""
    b = (big_n + 1) / 2.0
    btot = sp.beta(0.5, b)
    return 0.5 * btot * sp.betainc(b, 0.5, 1.0 / (1.0 + u * u))


def inner_product_numeric(family, j, l, n=160):
    """Skew inner product of polynomials j and l of a family, by quadrature."""
    fj = family.coeffs[j]
    fl = family.coeffs[l]
    f = lambda t: eval_poly(fj, t)
    g = lambda t: eval_poly(fl, t)
    kind = family.ensemble

    if kind == "goe":
        w = lambda t: np.exp(-t * t / 2.0)
        return 0.5 * _sgn_pair_integral(f, g, w, -8.0, 8.0, n)

    if kind == "ginibre":
        w = lambda t: np.exp(-t * t / 2.0)
        alpha = _sgn_pair_integral(f, g, w, -8.0, 8.0, n)
        wc = lambda x, y: np.exp(y * y - x * x) * sp.erfc(math.sqrt(2.0) * y)
        beta = _im_pair_integral(f, g, wc, (-8.0, 8.0), (0.0, 8.0), n)
        return alpha + beta

    if kind == "partial":
        tau = family.params["tau"]
        w = lambda t: np.exp(-t * t / (2.0 * (1.0 + tau)))
        alpha = _sgn_pair_integral(f, g, w, -9.0, 9.0, n)
        c = math.sqrt(2.0 / (1.0 - tau * tau))
        wc = lambda x, y: np.exp((y * y - x * x) / (1.0 + tau)) * sp.erfc(c * y)
        beta = _im_pair_integral(f, g, wc, (-9.0, 9.0), (0.0, 9.0), n)
        return alpha + beta

    if kind == "spherical":
        big_n = family.params["N"]
        c_n = math.gamma((big_n + 1) / 2.0) / (2.0 * math.gamma(big_n / 2.0 + 1.0))
        halfshift = (big_n - 1) / 2.0
        ph = lambda t: np.exp(-1j * halfshift * t)
        th1, w1 = _gl_nodes(0.0, 2.0 * math.pi, 2 * n)
        circle = 0.0
        for t1, wt1 in zip(th1, w1):
            th2, w2 = _gl_nodes(t1, 2.0 * math.pi, 2 * n)
            e1 = np.exp(1j * t1)
            e2 = np.exp(1j * th2)
            inner = np.sum(w2 * ph(th2) * (f(e1) * g(e2) - f(e2) * g(e1)))
            circle += wt1 * ph(t1) * inner
        circle = (-0.5j) * c_n * circle
        # disk contribution: eigenvalue pairs sit at w and its mirror image
        # 1/conj(w); the pair weight carries one tail integral and a phase
        n_phi = 8 * n
        phi = 2.0 * math.pi * (np.arange(n_phi) + 0.5) / n_phi
        wphi = 2.0 * math.pi / n_phi
        disk = 0.0
        for lo, hi in ((1e-12, 0.25), (0.25, 0.75), (0.75, 1.0)):
            r, wr = _gl_nodes(lo, hi, n)
            rad = _tail_integral((1.0 / r - r) / 2.0, big_n) / math.sqrt(math.pi)
            rg, pg = np.meshgrid(r, phi, indexing="ij")
            w_pt = rg * np.exp(1j * pg)
            w_mirr = np.exp(1j * pg) / rg
            phase = np.exp(-1j * (big_n - 1) * pg)
            vals = phase * (f(w_pt) * g(w_mirr) - f(w_mirr) * g(w_pt)) / rg
            disk += wphi * np.sum(wr * rad * np.sum(vals, axis=1))
        total = circle + disk
        return float(np.real(total))

    if kind == "truncated":
        big_l = family.params["L"]
        cw = math.sqrt(big_l * math.gamma((big_l + 1) / 2.0) / math.gamma(big_l / 2.0))
        cw /= math.sqrt(2.0) * math.pi ** 0.25

        # real-real part: substitute x = sin(u) so the weight is smooth
        def alpha_part():
            u1, wu1 = _gl_nodes(-math.pi / 2.0, math.pi / 2.0, 2 * n)
            total = 0.0
            for ui, wi in zip(u1, wu1):
                u2, wu2 = _gl_nodes(ui, math.pi / 2.0, 2 * n)
                x = math.sin(ui)
                y = np.sin(u2)
                wx = cw * math.cos(ui) ** (big_l - 1)
                wy = cw * np.cos(u2) ** (big_l - 1)
                inner = np.sum(wu2 * wy * (f(x) * g(y) - f(y) * g(x)))
                total += wi * wx * inner
            return total

        def omega_sq(x, y):
            z = x + 1j * y
            q = np.abs(1.0 - z * z)
            if big_l == 1:
                return 1.0 / (2.0 * math.pi * q)
            u = np.clip(2.0 * np.abs(y) / q, 0.0, 1.0)
            a = 0.5
            b = (big_l - 1) / 2.0
            tail = 0.5 * sp.beta(a, b) * (1.0 - sp.betainc(a, b, u * u))
            return big_l * (big_l - 1) / (2.0 * math.pi) * q ** (big_l - 2) * tail

        def beta_part():
            r, wr = _gl_nodes(1e-9, 1.0 - 1e-12, 2 * n)
            p, wp = _gl_nodes(0.0, math.pi, 2 * n)
            rg, pg = np.meshgrid(r, p, indexing="ij")
            xg = rg * np.cos(pg)
            yg = rg * np.sin(pg)
            z = xg + 1j * yg
            vals = omega_sq(xg, yg) * np.imag(f(z) * np.conj(g(z))) * rg
            return -4.0 * np.einsum("i,j,ij->", wr, wp, vals)

        return alpha_part() + beta_part()

    raise ValueError("unknown ensemble %r" % (kind,))
