# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled planar grid-sweep kernels (hot path of the radius engine).

Kind codes: 0 = lp(p), 1 = l1, 2 = linf, 3 = mixed.  Semantics mirror
numrad._gridkern_np.
"""

from libc.math cimport cos, sin, fabs, pow, sqrt, fmax, copysign

cdef double _ZT = 1e-14


cdef inline double _norm2d(int kind, double p, double x1, double x2) nogil:
    if kind == 0:
        return pow(pow(fabs(x1), p) + pow(fabs(x2), p), 1.0 / p)
    elif kind == 1:
        return fabs(x1) + fabs(x2)
    elif kind == 2:
        return fmax(fabs(x1), fabs(x2))
    else:
        if x1 * x2 >= 0.0:
            return sqrt(x1 * x1 + x2 * x2)
        return fmax(fabs(x1), fabs(x2))


cdef inline double _support2d(int kind, double p, double x1, double x2,
                              double y1, double y2) nogil:
    cdef double base, extra, gap
    if kind == 0:
        return fabs(copysign(pow(fabs(x1), p - 1.0), x1) * y1
                    + copysign(pow(fabs(x2), p - 1.0), x2) * y2)
    elif kind == 1:
        base = 0.0
        extra = 0.0
        if fabs(x1) < _ZT:
            extra += fabs(y1)
        else:
            base += copysign(1.0, x1) * y1
        if fabs(x2) < _ZT:
            extra += fabs(y2)
        else:
            base += copysign(1.0, x2) * y2
        return fabs(base) + extra
    elif kind == 2:
        gap = fabs(x1) - fabs(x2)
        if gap > _ZT:
            return fabs(y1)
        elif gap < -_ZT:
            return fabs(y2)
        return fmax(fabs(y1), fabs(y2))
    else:
        if x1 * x2 > _ZT:
            return fabs(x1 * y1 + x2 * y2)
        elif x1 * x2 < -_ZT:
            gap = fabs(x1) - fabs(x2)
            if gap > _ZT:
                return fabs(y1)
            elif gap < -_ZT:
                return fabs(y2)
            return fmax(fabs(y1), fabs(y2))
        if fabs(x1) > fabs(x2):
            return fabs(y1)
        return fabs(y2)


def radius_sweep(double[:, :] T, int kind, double p,
                 double theta0, double step, int n):
    cdef double t00 = T[0, 0], t01 = T[0, 1], t10 = T[1, 0], t11 = T[1, 1]
    cdef double best = -1.0, bt = theta0
    cdef double th, c, s, nr, x1, x2, y1, y2, v, a1, a2
    cdef int i
    with nogil:
        if kind == 0:
            # homogeneity: for x = (c,s)/||(c,s)||_p the support value is
            # |sgn(c)|c|^{p-1} (Tc)_1 + sgn(s)|s|^{p-1} (Tc)_2| / ||(c,s)||_p^p
            for i in range(n):
                th = theta0 + step * i
                c = cos(th)
                s = sin(th)
                a1 = pow(fabs(c), p - 1.0)
                a2 = pow(fabs(s), p - 1.0)
                y1 = t00 * c + t01 * s
                y2 = t10 * c + t11 * s
                v = fabs(copysign(a1, c) * y1 + copysign(a2, s) * y2) \
                    / (a1 * fabs(c) + a2 * fabs(s))
                if v > best:
                    best = v
                    bt = th
        else:
            for i in range(n):
                th = theta0 + step * i
                c = cos(th)
                s = sin(th)
                nr = _norm2d(kind, p, c, s)
                x1 = c / nr
                x2 = s / nr
                y1 = t00 * x1 + t01 * x2
                y2 = t10 * x1 + t11 * x2
                v = _support2d(kind, p, x1, x2, y1, y2)
                if v > best:
                    best = v
                    bt = th
    return best, bt


def opnorm_sweep(double[:, :] T, int kind, double p,
                 double theta0, double step, int n):
    cdef double t00 = T[0, 0], t01 = T[0, 1], t10 = T[1, 0], t11 = T[1, 1]
    cdef double best = -1.0, bt = theta0
    cdef double th, c, s, nr, x1, x2, y1, y2, v
    cdef int i
    with nogil:
        for i in range(n):
            th = theta0 + step * i
            c = cos(th)
            s = sin(th)
            nr = _norm2d(kind, p, c, s)
            x1 = c / nr
            x2 = s / nr
            y1 = t00 * x1 + t01 * x2
            y2 = t10 * x1 + t11 * x2
            v = _norm2d(kind, p, y1, y2)
            if v > best:
                best = v
                bt = th
    return best, bt
