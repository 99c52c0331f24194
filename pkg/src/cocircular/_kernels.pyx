# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: potential, gradient, Hessian, chord matrices.

Same surface and semantics as the pure fallback ``cocircular._kernels_py``;
pairwise sums are accumulated with Neumaier compensation.
"""

from libc.math cimport sin, cos, fabs, pow

import numpy as np

from .errors import CollisionError

COLLISION_EPS = 1e-13
BACKEND_NAME = "compiled"

cdef double _EPS = 1e-13


cdef inline double _chord(double ti, double tj) except -1.0:
    cdef double r = 2.0 * fabs(sin(0.5 * (ti - tj)))
    if r < _EPS:
        raise CollisionError(f"coincident angles (chord {r:.3e})")
    return r


def potential(const double[::1] m, const double[::1] theta, double alpha):
    cdef Py_ssize_t n = theta.shape[0]
    cdef Py_ssize_t i, j
    cdef double s = 0.0, comp = 0.0, term, t, r
    for i in range(n):
        for j in range(i + 1, n):
            r = _chord(theta[i], theta[j])
            term = m[i] * m[j] * pow(r, -alpha)
            t = s + term
            if fabs(s) >= fabs(term):
                comp += (s - t) + term
            else:
                comp += (term - t) + s
            s = t
    return s + comp


def gradient(const double[::1] m, const double[::1] theta, double alpha):
    cdef Py_ssize_t n = theta.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, j
    cdef double s, comp, term, t, d, r, sn
    for k in range(n):
        s = 0.0
        comp = 0.0
        for j in range(n):
            if j == k:
                continue
            d = 0.5 * (theta[k] - theta[j])
            sn = sin(d)
            r = 2.0 * fabs(sn)
            if r < _EPS:
                raise CollisionError(f"coincident angles (chord {r:.3e})")
            term = m[j] * pow(r, -alpha) * cos(d) / sn
            t = s + term
            if fabs(s) >= fabs(term):
                comp += (s - t) + term
            else:
                comp += (term - t) + s
            s = t
        out[k] = -0.5 * alpha * m[k] * (s + comp)
    return out_arr


def hessian(const double[::1] m, const double[::1] theta, double alpha):
    cdef Py_ssize_t n = theta.shape[0]
    out_arr = np.zeros((n, n))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t k, j
    cdef double s, comp, term, t, d, r, sn, ct, f2
    for k in range(n):
        s = 0.0
        comp = 0.0
        for j in range(n):
            if j == k:
                continue
            d = 0.5 * (theta[k] - theta[j])
            sn = sin(d)
            r = 2.0 * fabs(sn)
            if r < _EPS:
                raise CollisionError(f"coincident angles (chord {r:.3e})")
            ct = cos(d) / sn
            f2 = 0.25 * alpha * pow(r, -alpha) * ((alpha + 1.0) * ct * ct + 1.0)
            term = m[k] * m[j] * f2
            out[k, j] = -term
            t = s + term
            if fabs(s) >= fabs(term):
                comp += (s - t) + term
            else:
                comp += (term - t) + s
            s = t
        out[k, k] = s + comp
    return out_arr


def row_sums(const double[::1] m, const double[::1] theta, double alpha):
    cdef Py_ssize_t n = theta.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, j
    cdef double s, comp, term, t, r
    for k in range(n):
        s = 0.0
        comp = 0.0
        for j in range(n):
            if j == k:
                continue
            r = _chord(theta[k], theta[j])
            term = m[j] * pow(r, -alpha)
            t = s + term
            if fabs(s) >= fabs(term):
                comp += (s - t) + term
            else:
                comp += (term - t) + s
            s = t
        out[k] = s + comp
    return out_arr


def pair_matrix(const double[::1] theta, double alpha):
    cdef Py_ssize_t n = theta.shape[0]
    out_arr = np.zeros((n, n))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double v
    for i in range(n):
        for j in range(i + 1, n):
            v = pow(_chord(theta[i], theta[j]), -alpha)
            out[i, j] = v
            out[j, i] = v
    return out_arr


def quad_gaps(const double[::1] ta, const double[::1] tb, const double[::1] tc, const double[::1] td,
              double alpha):
    cdef Py_ssize_t n = ta.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = (pow(_chord(ta[i], tc[i]), -alpha)
                  + pow(_chord(tb[i], td[i]), -alpha)
                  - pow(_chord(ta[i], td[i]), -alpha)
                  - pow(_chord(tb[i], tc[i]), -alpha))
    return out_arr
