# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Laguerre recurrence and batched small-block Jacobi eigensolver."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

DEF MAXDIM = 3
DEF MAXSWEEP = 64
cdef double TIE = 1e-9


def laguerre_table(Py_ssize_t nmax, long k, double x):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(nmax + 1)
    cdef double[::1] o = out
    cdef double prev, cur, nxt
    cdef Py_ssize_t m
    o[0] = 1.0
    if nmax == 0:
        return out
    o[1] = 1.0 + k - x
    prev = 1.0
    cur = o[1]
    for m in range(1, nmax):
        nxt = ((2 * m + k + 1 - x) * cur - (m + k) * prev) / (m + 1)
        o[m + 1] = nxt
        prev = cur
        cur = nxt
    return out


cdef void _jacobi(double a[MAXDIM][MAXDIM], double v[MAXDIM][MAXDIM], int m) nogil:
    cdef int sweep, p, q, r
    cdef double off, scale, apq, theta, t, c, s, tau, g, h
    for p in range(m):
        for q in range(m):
            v[p][q] = 1.0 if p == q else 0.0
    for sweep in range(MAXSWEEP):
        off = 0.0
        scale = 0.0
        for p in range(m):
            scale += a[p][p] * a[p][p]
            for q in range(p + 1, m):
                off += a[p][q] * a[p][q]
        if off == 0.0 or off <= 1e-36 * scale:
            return
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p][p] -= t * apq
                a[q][q] += t * apq
                a[p][q] = 0.0
                a[q][p] = 0.0
                for r in range(m):
                    if r != p and r != q:
                        g = a[r][p]
                        h = a[r][q]
                        a[r][p] = g - s * (h + g * tau)
                        a[p][r] = a[r][p]
                        a[r][q] = h + s * (g - h * tau)
                        a[q][r] = a[r][q]
                for r in range(m):
                    g = v[r][p]
                    h = v[r][q]
                    v[r][p] = g - s * (h + g * tau)
                    v[r][q] = h + s * (g - h * tau)


def block_eigh(blocks):
    cdef double[:, :, ::1] b = np.ascontiguousarray(blocks, dtype=np.float64)
    cdef Py_ssize_t nb = b.shape[0]
    cdef int m = <int>b.shape[1]
    if b.shape[2] != m or m > MAXDIM or m < 1:
        raise ValueError("block_eigh handles square blocks of size 1..3")
    out_vals = np.empty((nb, m))
    out_vecs = np.empty((nb, m, m))
    cdef double[:, ::1] vals = out_vals
    cdef double[:, :, ::1] vecs = out_vecs
    cdef double a[MAXDIM][MAXDIM]
    cdef double v[MAXDIM][MAXDIM]
    cdef int order[MAXDIM]
    cdef Py_ssize_t i
    cdef int p, q, r, tmp, lead
    cdef double peak, sign
    with nogil:
        for i in range(nb):
            for p in range(m):
                for q in range(m):
                    a[p][q] = b[i, p, q]
            _jacobi(a, v, m)
            for p in range(m):
                order[p] = p
            # insertion sort, ascending
            for p in range(1, m):
                r = p
                while r > 0 and a[order[r - 1]][order[r - 1]] > a[order[r]][order[r]]:
                    tmp = order[r]
                    order[r] = order[r - 1]
                    order[r - 1] = tmp
                    r -= 1
            for p in range(m):
                q = order[p]
                vals[i, p] = a[q][q]
                peak = 0.0
                for r in range(m):
                    if fabs(v[r][q]) > peak:
                        peak = fabs(v[r][q])
                lead = 0
                for r in range(m):
                    if fabs(v[r][q]) >= (1.0 - TIE) * peak:
                        lead = r
                        break
                sign = -1.0 if v[lead][q] < 0.0 else 1.0
                for r in range(m):
                    vecs[i, r, p] = sign * v[r][q]
    return out_vals, out_vecs
