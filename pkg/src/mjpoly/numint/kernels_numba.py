"""numba kernels; scalar loops mirroring kernels_numpy."""
from __future__ import annotations

import math

import numpy as np
from numba import njit

from .kernels_numpy import (
    HALF_LOG_2PI,
    LANCZOS_COEF,
    LANCZOS_G,
    SERIES_MAX_TERMS,
    SERIES_RTOL,
    SPLITTER,
)

_COEF = LANCZOS_COEF.copy()


@njit(cache=True)
def _gamma_scalar(a):
    small = a < 0.5
    z = (a + 1.0 if small else a) - 1.0
    acc = _COEF[0]
    for i in range(1, _COEF.size):
        acc += _COEF[i] / (z + i)
    t = z + LANCZOS_G + 0.5
    out = math.exp(HALF_LOG_2PI + (z + 0.5) * math.log(t) - t) * acc
    return out / a if small else out


@njit(cache=True)
def lanczos_gamma(a):
    a = np.asarray(a, dtype=np.float64)
    flat = a.ravel()
    out = np.empty(flat.size)
    for i in range(flat.size):
        out[i] = _gamma_scalar(flat[i])
    return out.reshape(a.shape)


@njit(cache=True)
def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit(cache=True)
def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


@njit(cache=True)
def _two_prod(a, b):
    p = a * b
    t = SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


@njit(cache=True)
def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    return _quick_two_sum(s, e + (al + bl))


@njit(cache=True)
def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    return _quick_two_sum(p, e + (ah * bl + al * bh))


@njit(cache=True)
def _dd_div(ah, al, bh, bl):
    q1 = ah / bh
    ph, pl = _dd_mul(bh, bl, q1, 0.0)
    rh, rl = _dd_add(ah, al, -ph, -pl)
    return _quick_two_sum(q1, rh / bh)


@njit(cache=True)
def _bessel_scalar(alpha, z, inv_gamma):
    half = 0.5 * z
    if half == 0.0:
        return inv_gamma if alpha == 0.0 else 0.0
    lead = math.pow(half, alpha) * inv_gamma
    qh, ql = _two_prod(half, half)
    qh, ql = -qh, -ql
    th, tl = 1.0, 0.0
    sh, sl = 1.0, 0.0
    for m in range(1, SERIES_MAX_TERMS):
        dh, dl = _two_sum(float(m), alpha)
        dh, dl = _dd_mul(dh, dl, float(m), 0.0)
        th, tl = _dd_mul(th, tl, qh, ql)
        th, tl = _dd_div(th, tl, dh, dl)
        sh, sl = _dd_add(sh, sl, th, tl)
        if m > half and abs(th) <= SERIES_RTOL * abs(sh):
            break
    return lead * (sh + sl)


@njit(cache=True)
def bessel_j(alpha, z):
    z = np.asarray(z, dtype=np.float64)
    flat = z.ravel()
    inv_gamma = 1.0 / _gamma_scalar(alpha + 1.0)
    out = np.empty(flat.size)
    for i in range(flat.size):
        out[i] = _bessel_scalar(alpha, flat[i], inv_gamma)
    return out.reshape(z.shape)


@njit(cache=True)
def _laguerre_scalar(n, alpha, z):
    prev = 1.0
    if n == 0:
        return prev
    cur = 1.0 + alpha - z
    for k in range(1, n):
        nxt = ((2 * k + 1 + alpha - z) * cur - (k + alpha) * prev) / (k + 1)
        prev = cur
        cur = nxt
    return cur


@njit(cache=True)
def laguerre_eval(n, alpha, z):
    z = np.asarray(z, dtype=np.float64)
    flat = z.ravel()
    out = np.empty(flat.size)
    for i in range(flat.size):
        out[i] = _laguerre_scalar(n, alpha, flat[i])
    return out.reshape(z.shape)


@njit(cache=True)
def intrep_sums(j, ell, mu, x, t_nodes, t_weights, u_nodes, u_weights):
    beta = ell + 0.5 * (mu + 1.0)
    nu = u_nodes.size
    radial = np.empty(nu)
    for k in range(nu):
        u = u_nodes[k]
        radial[k] = math.exp(-x * u) * (u * u + 2.0 * u) ** ell * u_weights[k]
    total = 0.0
    total_abs = 0.0
    for i in range(t_nodes.size):
        t = t_nodes[i]
        th = math.pi * t * t * (3.0 - 2.0 * t)
        ang = abs(math.sin(th)) ** mu * 6.0 * math.pi * t * (1.0 - t) * t_weights[i]
        c1 = math.cos(th) + 1.0
        for k in range(nu):
            v = ang * radial[k] * _laguerre_scalar(j, beta, x * (c1 + u_nodes[k]))
            total += v
            total_abs += abs(v)
    pref = x ** (2 * ell + 1)
    return pref * total, pref * total_abs


@njit(cache=True)
def hankel_sums(j, mu, x, s_nodes, s_weights, y_max):
    inv_gamma = 1.0 / _gamma_scalar(mu + 1.0)
    total = 0.0
    total_abs = 0.0
    for i in range(s_nodes.size):
        s = s_nodes[i]
        y = y_max * s * s
        xy = x * y
        v = (_bessel_scalar(mu, xy, inv_gamma) * math.sqrt(xy) * y ** (mu + 0.5)
             * math.exp(-0.5 * y * y) * _laguerre_scalar(j, mu, y * y) * 2.0 * y_max * s * s_weights[i])
        total += v
        total_abs += abs(v)
    return total, total_abs
