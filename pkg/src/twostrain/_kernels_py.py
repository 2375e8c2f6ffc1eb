"""Pure-NumPy fallback for the hot loops in :mod:`twostrain._kernels`.

Same call signatures and status codes as the compiled extension; used
when the extension is unavailable (or forced via TWOSTRAIN_PURE_PYTHON).
"""

from __future__ import annotations

import numpy as np

# run_rk4 status codes (shared with the compiled kernel)
RAN_ALL_STEPS = 0
CONVERGED = 1
LEFT_BOUNDS = 2
CLIP_EXCEEDED = 3


def run_rk4(i1, i2, growth1, growth2, decay1, decay2, w, dt, n_steps,
            rhs_tol, clip_tol, bound_tol, traj=None, record_stride=1):
    """Advance the two-strain degree-class system in place with fixed-step RK4.

    ``growth_i`` is zeta_i * k per degree class, ``decay_i`` is
    gamma_i + u_i, and ``w`` is k P(k) / <k> (the edge weights behind the
    coupling aggregates). After every step the state is clipped back onto
    the simplex {I1 >= 0, I2 >= 0, I1 + I2 <= 1} and the largest clipped
    violation is tracked.

    When ``rhs_tol`` > 0 the loop stops as soon as the sup-norm of the
    derivative falls below it (steady state). When ``traj`` is given, the
    state is recorded into row ``s // record_stride`` after every
    ``record_stride``-th step, with row 0 holding the initial state.

    Returns:
        (status, steps_done, max_clip) where status is one of
        RAN_ALL_STEPS, CONVERGED, LEFT_BOUNDS, CLIP_EXCEEDED.
    """

    def deriv(y1, y2):
        th1 = float(w @ y1)
        th2 = float(w @ y2)
        free = 1.0 - y1 - y2
        return (-decay1 * y1 + growth1 * free * th1,
                -decay2 * y2 + growth2 * free * th2)

    if traj is not None:
        traj[0, 0, :] = i1
        traj[0, 1, :] = i2

    status = RAN_ALL_STEPS
    steps = 0
    max_clip = 0.0
    half = 0.5 * dt
    sixth = dt / 6.0

    for step in range(n_steps + 1):
        d1, d2 = deriv(i1, i2)
        if rhs_tol > 0.0:
            sup = max(np.abs(d1).max(), np.abs(d2).max())
            if sup < rhs_tol:
                status = CONVERGED
                break
        if step == n_steps:
            break

        e1, e2 = deriv(i1 + half * d1, i2 + half * d2)
        f1, f2 = deriv(i1 + half * e1, i2 + half * e2)
        g1, g2 = deriv(i1 + dt * f1, i2 + dt * f2)
        n1 = i1 + sixth * (d1 + 2.0 * e1 + 2.0 * f1 + g1)
        n2 = i2 + sixth * (d2 + 2.0 * e2 + 2.0 * f2 + g2)

        lo = min(n1.min(), n2.min())
        hi = max(n1.max(), n2.max())
        if lo < -bound_tol or hi > 1.0 + bound_tol:
            status = LEFT_BOUNDS
            break

        viol = max(0.0, -lo)
        np.clip(n1, 0.0, None, out=n1)
        np.clip(n2, 0.0, None, out=n2)
        s = n1 + n2
        smax = float(s.max())
        if smax > 1.0:
            viol = max(viol, smax - 1.0)
            over = s > 1.0
            n1[over] /= s[over]
            n2[over] /= s[over]
        if viol > max_clip:
            max_clip = viol
        if viol > clip_tol:
            status = CLIP_EXCEEDED
            break

        i1[:] = n1
        i2[:] = n2
        steps = step + 1
        if traj is not None and steps % record_stride == 0:
            row = steps // record_stride
            traj[row, 0, :] = i1
            traj[row, 1, :] = i2
    else:  # pragma: no cover - loop always exits via break
        pass

    return status, steps, max_clip


def theta_fixed_point(k, q, psi, tol, max_iter):
    """Iterate theta <- psi * sum_j q_j theta / (1 + psi k_j theta) from 1.

    ``q`` is k^2 P(k) / <k>. The map is concave with f(0) = 0, so from
    theta = 1 the iterates decrease monotonically onto the positive root.

    Returns:
        (theta, iterations, last_change, converged)
    """
    x = 1.0
    change = np.inf
    for it in range(1, int(max_iter) + 1):
        xn = psi * float(np.sum(q * x / (1.0 + psi * k * x)))
        change = abs(xn - x)
        x = xn
        if change < tol:
            return x, it, change, True
    return x, int(max_iter), change, False
