# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: fixed-step RK4 on the two-strain system and the
scalar fixed-point iteration. Mirrors :mod:`twostrain._kernels_py`."""

from libc.math cimport fabs, INFINITY

import numpy as np

RAN_ALL_STEPS = 0
CONVERGED = 1
LEFT_BOUNDS = 2
CLIP_EXCEEDED = 3


def run_rk4(double[::1] i1, double[::1] i2,
            double[::1] growth1, double[::1] growth2,
            double decay1, double decay2,
            double[::1] w, double dt, Py_ssize_t n_steps,
            double rhs_tol, double clip_tol, double bound_tol,
            double[:, :, ::1] traj=None, Py_ssize_t record_stride=1):
    """See twostrain._kernels_py.run_rk4 for the contract."""
    cdef Py_ssize_t K = i1.shape[0]
    cdef Py_ssize_t step, j, row
    cdef int status = RAN_ALL_STEPS
    cdef Py_ssize_t steps = 0
    cdef double max_clip = 0.0
    cdef double half = 0.5 * dt
    cdef double sixth = dt / 6.0
    cdef double th1, th2, free, d, sup, x1, x2, s, c, viol
    cdef bint has_traj = traj is not None

    work = np.empty((10, K), dtype=np.float64)
    cdef double[:, ::1] wk = work
    cdef double[::1] a1 = wk[0], b1 = wk[1]
    cdef double[::1] a2 = wk[2], b2 = wk[3]
    cdef double[::1] a3 = wk[4], b3 = wk[5]
    cdef double[::1] a4 = wk[6], b4 = wk[7]
    cdef double[::1] t1 = wk[8], t2 = wk[9]

    if has_traj:
        for j in range(K):
            traj[0, 0, j] = i1[j]
            traj[0, 1, j] = i2[j]

    with nogil:
        for step in range(n_steps + 1):
            # stage 1 is the derivative at the current state; it doubles
            # as the steady-state residual
            th1 = 0.0
            th2 = 0.0
            for j in range(K):
                th1 += w[j] * i1[j]
                th2 += w[j] * i2[j]
            sup = 0.0
            for j in range(K):
                free = 1.0 - i1[j] - i2[j]
                d = -decay1 * i1[j] + growth1[j] * free * th1
                a1[j] = d
                if fabs(d) > sup:
                    sup = fabs(d)
                d = -decay2 * i2[j] + growth2[j] * free * th2
                b1[j] = d
                if fabs(d) > sup:
                    sup = fabs(d)
            if rhs_tol > 0.0 and sup < rhs_tol:
                status = CONVERGED
                break
            if step == n_steps:
                break

            # stage 2
            th1 = 0.0
            th2 = 0.0
            for j in range(K):
                t1[j] = i1[j] + half * a1[j]
                t2[j] = i2[j] + half * b1[j]
                th1 += w[j] * t1[j]
                th2 += w[j] * t2[j]
            for j in range(K):
                free = 1.0 - t1[j] - t2[j]
                a2[j] = -decay1 * t1[j] + growth1[j] * free * th1
                b2[j] = -decay2 * t2[j] + growth2[j] * free * th2

            # stage 3
            th1 = 0.0
            th2 = 0.0
            for j in range(K):
                t1[j] = i1[j] + half * a2[j]
                t2[j] = i2[j] + half * b2[j]
                th1 += w[j] * t1[j]
                th2 += w[j] * t2[j]
            for j in range(K):
                free = 1.0 - t1[j] - t2[j]
                a3[j] = -decay1 * t1[j] + growth1[j] * free * th1
                b3[j] = -decay2 * t2[j] + growth2[j] * free * th2

            # stage 4
            th1 = 0.0
            th2 = 0.0
            for j in range(K):
                t1[j] = i1[j] + dt * a3[j]
                t2[j] = i2[j] + dt * b3[j]
                th1 += w[j] * t1[j]
                th2 += w[j] * t2[j]
            for j in range(K):
                free = 1.0 - t1[j] - t2[j]
                a4[j] = -decay1 * t1[j] + growth1[j] * free * th1
                b4[j] = -decay2 * t2[j] + growth2[j] * free * th2

            # combine, check bounds, clip onto the simplex
            viol = 0.0
            for j in range(K):
                x1 = i1[j] + sixth * (a1[j] + 2.0 * a2[j] + 2.0 * a3[j] + a4[j])
                x2 = i2[j] + sixth * (b1[j] + 2.0 * b2[j] + 2.0 * b3[j] + b4[j])
                if (x1 < -bound_tol or x2 < -bound_tol
                        or x1 > 1.0 + bound_tol or x2 > 1.0 + bound_tol):
                    status = LEFT_BOUNDS
                    break
                c = 0.0
                if x1 < 0.0:
                    c = -x1
                    x1 = 0.0
                if x2 < 0.0:
                    if -x2 > c:
                        c = -x2
                    x2 = 0.0
                s = x1 + x2
                if s > 1.0:
                    if s - 1.0 > c:
                        c = s - 1.0
                    x1 /= s
                    x2 /= s
                if c > viol:
                    viol = c
                t1[j] = x1
                t2[j] = x2
            if status == LEFT_BOUNDS:
                break
            if viol > max_clip:
                max_clip = viol
            if viol > clip_tol:
                status = CLIP_EXCEEDED
                break

            for j in range(K):
                i1[j] = t1[j]
                i2[j] = t2[j]
            steps = step + 1
            if has_traj and steps % record_stride == 0:
                row = steps // record_stride
                for j in range(K):
                    traj[row, 0, j] = i1[j]
                    traj[row, 1, j] = i2[j]

    return status, steps, max_clip


def theta_fixed_point(double[::1] k, double[::1] q, double psi,
                      double tol, Py_ssize_t max_iter):
    """See twostrain._kernels_py.theta_fixed_point for the contract."""
    cdef Py_ssize_t K = k.shape[0]
    cdef Py_ssize_t it, j
    cdef double x = 1.0
    cdef double xn, change
    cdef bint converged = False
    cdef Py_ssize_t n_done = max_iter

    change = INFINITY
    with nogil:
        for it in range(1, max_iter + 1):
            xn = 0.0
            for j in range(K):
                xn += q[j] * x / (1.0 + psi * k[j] * x)
            xn *= psi
            change = fabs(xn - x)
            x = xn
            if change < tol:
                converged = True
                n_done = it
                break

    return x, n_done, change, converged
