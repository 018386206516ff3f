"""Pure-numpy fallback for the planar real grid-sweep kernels.

Semantics match numrad._gridkern exactly: sample theta_i = theta0 + i*step
for i in [0, n), map to the unit sphere of the given norm, and maximize the
objective.  Kind codes: 0 = lp(p), 1 = l1, 2 = linf, 3 = mixed.
"""

from __future__ import annotations

import numpy as np

_ZT = 1e-14


def _unit_points(kind, p, theta0, step, n):
    th = theta0 + step * np.arange(n)
    c, s = np.cos(th), np.sin(th)
    if kind == 0:
        nr = (np.abs(c) ** p + np.abs(s) ** p) ** (1.0 / p)
    elif kind == 1:
        nr = np.abs(c) + np.abs(s)
    elif kind == 2:
        nr = np.maximum(np.abs(c), np.abs(s))
    else:
        nr = np.where(c * s >= 0, np.hypot(c, s), np.maximum(np.abs(c), np.abs(s)))
    return th, c / nr, s / nr


def _support(kind, p, x1, x2, y1, y2):
    """max over J(x) of |x*(y)| for unit x (closed form at extreme points)."""
    if kind == 0:
        a1 = np.sign(x1) * np.abs(x1) ** (p - 1.0)
        a2 = np.sign(x2) * np.abs(x2) ** (p - 1.0)
        return np.abs(a1 * y1 + a2 * y2)
    if kind == 1:
        z1 = np.abs(x1) < _ZT
        z2 = np.abs(x2) < _ZT
        base = np.where(z1, 0.0, np.sign(x1) * y1) + np.where(z2, 0.0, np.sign(x2) * y2)
        return np.abs(base) + np.where(z1, np.abs(y1), 0.0) + np.where(z2, np.abs(y2), 0.0)
    if kind == 2:
        gap = np.abs(x1) - np.abs(x2)
        return np.where(gap > _ZT, np.abs(y1),
                        np.where(gap < -_ZT, np.abs(y2),
                                 np.maximum(np.abs(y1), np.abs(y2))))
    prod = x1 * x2
    gap = np.abs(x1) - np.abs(x2)
    sq = np.where(gap > _ZT, np.abs(y1),
                  np.where(gap < -_ZT, np.abs(y2), np.maximum(np.abs(y1), np.abs(y2))))
    axis = np.where(np.abs(x1) > np.abs(x2), np.abs(y1), np.abs(y2))
    return np.where(prod > _ZT, np.abs(x1 * y1 + x2 * y2),
                    np.where(prod < -_ZT, sq, axis))


def radius_values(T, kind, p, theta0, step, n):
    """Full array of sup_{x* in J(x)} |x*(Tx)| along the grid."""
    th, x1, x2 = _unit_points(kind, p, theta0, step, n)
    y1 = T[0, 0] * x1 + T[0, 1] * x2
    y2 = T[1, 0] * x1 + T[1, 1] * x2
    return th, _support(kind, p, x1, x2, y1, y2)


def radius_sweep(T, kind, p, theta0, step, n):
    th, vals = radius_values(T, kind, p, theta0, step, n)
    k = int(np.argmax(vals))
    return float(vals[k]), float(th[k])


def opnorm_values(T, kind, p, theta0, step, n):
    th, x1, x2 = _unit_points(kind, p, theta0, step, n)
    y1 = T[0, 0] * x1 + T[0, 1] * x2
    y2 = T[1, 0] * x1 + T[1, 1] * x2
    if kind == 0:
        vals = (np.abs(y1) ** p + np.abs(y2) ** p) ** (1.0 / p)
    elif kind == 1:
        vals = np.abs(y1) + np.abs(y2)
    elif kind == 2:
        vals = np.maximum(np.abs(y1), np.abs(y2))
    else:
        vals = np.where(y1 * y2 >= 0, np.hypot(y1, y2), np.maximum(np.abs(y1), np.abs(y2)))
    return th, vals


def opnorm_sweep(T, kind, p, theta0, step, n):
    th, vals = opnorm_values(T, kind, p, theta0, step, n)
    k = int(np.argmax(vals))
    return float(vals[k]), float(th[k])
