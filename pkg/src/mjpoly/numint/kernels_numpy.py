"""Vectorised numpy kernels (fallback path; same signatures as kernels_numba)."""
from __future__ import annotations

import numpy as np

# Lanczos approximation, g = 7, n = 9
LANCZOS_G = 7.0
LANCZOS_COEF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
HALF_LOG_2PI = 0.9189385332046727
SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 600


def lanczos_gamma(a):
    """Gamma(a) for a > 0 (no domain check here)."""
    a = np.asarray(a, dtype=float)
    small = a < 0.5
    z = np.where(small, a + 1.0, a) - 1.0
    acc = np.full_like(z, LANCZOS_COEF[0])
    for i in range(1, LANCZOS_COEF.size):
        acc = acc + LANCZOS_COEF[i] / (z + i)
    t = z + LANCZOS_G + 0.5
    out = np.exp(HALF_LOG_2PI + (z + 0.5) * np.log(t) - t) * acc
    return np.where(small, out / a, out)


# --- double-double arithmetic (error-free transforms, elementwise) ----------
# The ascending Bessel series alternates with terms far larger than the sum
# once z exceeds ~10; carrying ~32 digits keeps the cancellation harmless up
# to the series regime limit z = 40.

SPLITTER = 134217729.0  # 2^27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    return _quick_two_sum(s, e + (al + bl))


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    return _quick_two_sum(p, e + (ah * bl + al * bh))


def _dd_div(ah, al, bh, bl):
    q1 = ah / bh
    ph, pl = _dd_mul(bh, bl, q1, 0.0 * q1)
    rh, rl = _dd_add(ah, al, -ph, -pl)
    return _quick_two_sum(q1, rh / bh)


def bessel_j(alpha, z):
    """J_alpha(z) from the ascending series summed in double-double; alpha > -1, z >= 0."""
    z = np.asarray(z, dtype=float)
    half = 0.5 * z
    inv_gamma = 1.0 / float(lanczos_gamma(np.array([alpha + 1.0]))[0])
    # the leading factor only scales the sum, so plain double precision suffices
    lead = np.power(half, alpha) * inv_gamma
    qh, ql = _two_prod(half, half)
    qh, ql = -qh, -ql
    th, tl = np.ones_like(z), np.zeros_like(z)
    sh, sl = th.copy(), tl.copy()
    active = half > 0
    for m in range(1, SERIES_MAX_TERMS):
        if not active.any():
            break
        dh, dl = _two_sum(float(m), alpha)
        dh, dl = _dd_mul(dh, dl, float(m), 0.0)
        th, tl = _dd_mul(th, tl, qh, ql)
        th, tl = _dd_div(th, tl, dh, dl)
        nh, nl = _dd_add(sh, sl, th, tl)
        sh, sl = np.where(active, nh, sh), np.where(active, nl, sl)
        active &= ~((m > half) & (np.abs(th) <= SERIES_RTOL * np.abs(sh)))
    return lead * (sh + sl)


def laguerre_eval(n, alpha, z):
    """L_n^alpha(z) by the three-term recurrence."""
    z = np.asarray(z, dtype=float)
    prev = np.ones_like(z)
    if n == 0:
        return prev
    cur = 1.0 + alpha - z
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - z) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def theta_map(t):
    """theta = pi (3t^2 - 2t^3) on [0, 1] and its derivative."""
    return np.pi * t * t * (3.0 - 2.0 * t), 6.0 * np.pi * t * (1.0 - t)


def intrep_sums(j, ell, mu, x, t_nodes, t_weights, u_nodes, u_weights):
    """Double sum for the integral representation; returns (sum, sum of |.|)."""
    th, dth = theta_map(t_nodes)
    ang = np.power(np.abs(np.sin(th)), mu) * dth * t_weights          # (nt,)
    cos_t = np.cos(th)
    u = u_nodes
    radial = np.exp(-x * u) * np.power(u * u + 2.0 * u, ell) * u_weights  # (nu,)
    arg = x * (cos_t[:, None] + 1.0 + u[None, :])
    lag = laguerre_eval(j, ell + 0.5 * (mu + 1.0), arg)
    vals = ang[:, None] * radial[None, :] * lag
    pref = x ** (2 * ell + 1)
    return pref * vals.sum(), pref * np.abs(vals).sum()


def hankel_sums(j, mu, x, s_nodes, s_weights, y_max):
    """Quadrature of J_mu(xy)(xy)^(1/2) y^(mu+1/2) e^(-y^2/2) L_j^mu(y^2) with y = y_max s^2."""
    y = y_max * s_nodes * s_nodes
    dy = 2.0 * y_max * s_nodes
    xy = x * y
    vals = (bessel_j(mu, xy) * np.sqrt(xy) * np.power(y, mu + 0.5) * np.exp(-0.5 * y * y)
            * laguerre_eval(j, mu, y * y) * dy * s_weights)
    return vals.sum(), np.abs(vals).sum()
