# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython implementation of the retarded-time kernel.

Same contract and iteration scheme as ``_pure.solve_retarded`` (ten
bisection steps, then bracket-guarded Newton), written as a tight scalar
loop over the reception times so large receiver series avoid Python and
NumPy overhead entirely.
"""

from libc.math cimport cos, exp, fabs, sin

import numpy as np

DEF BISECT_STEPS = 10


cdef inline double _alpha(int pid, double u) nogil:
    if pid == 1:
        return 1.0 - exp(-u)
    elif pid == 2:
        return sin(u)
    return 0.0


cdef inline double _alpha_prime(int pid, double u) nogil:
    if pid == 1:
        return exp(-u)
    elif pid == 2:
        return cos(u)
    return 0.0


cdef inline double _g(int pid, double v, double a, double Omega, double c,
                      double rhs, double s) nogil:
    return s - (v * s + a * _alpha(pid, Omega * s)) / c - rhs


cdef inline double _gprime(int pid, double v, double a, double Omega, double c,
                           double s) nogil:
    return 1.0 - (v + a * Omega * _alpha_prime(pid, Omega * s)) / c


def solve_retarded(int pid, double v, double a, double Omega, double c,
                   double x, t, double tol, int max_iter):
    """Emission times for an array of reception times; see the pure twin."""
    t_arr = np.ascontiguousarray(t, dtype=np.float64)
    cdef double[::1] tv = t_arr
    cdef Py_ssize_t n = tv.shape[0]

    te_arr = np.empty(n, dtype=np.float64)
    resid_arr = np.empty(n, dtype=np.float64)
    iters_arr = np.empty(n, dtype=np.int64)
    cdef double[::1] te = te_arr
    cdef double[::1] resid = resid_arr
    cdef long long[::1] iters = iters_arr

    cdef Py_ssize_t i
    cdef int it, k
    cdef double rhs, lo, hi, mid, s, gs, gp, cand

    with nogil:
        for i in range(n):
            rhs = tv[i] - x / c
            lo = 0.0
            hi = tv[i]
            for k in range(BISECT_STEPS):
                mid = 0.5 * (lo + hi)
                if _g(pid, v, a, Omega, c, rhs, mid) >= 0.0:
                    hi = mid
                else:
                    lo = mid
            s = 0.5 * (lo + hi)
            it = BISECT_STEPS
            gs = _g(pid, v, a, Omega, c, rhs, s)
            while fabs(gs) > tol and it < max_iter:
                if gs > 0.0:
                    if s < hi:
                        hi = s
                else:
                    if s > lo:
                        lo = s
                gp = _gprime(pid, v, a, Omega, c, s)
                if gp > 0.0:
                    cand = s - gs / gp
                else:
                    cand = 0.5 * (lo + hi)
                # Closed interval: Newton may land exactly on an endpoint.
                if cand < lo or cand > hi:
                    cand = 0.5 * (lo + hi)
                s = cand
                it += 1
                gs = _g(pid, v, a, Omega, c, rhs, s)
            te[i] = s
            resid[i] = fabs(gs)
            iters[i] = it

    return te_arr, resid_arr, iters_arr
