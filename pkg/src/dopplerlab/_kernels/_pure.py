"""NumPy implementation of the retarded-time kernels.

Solves ``g(s) = s - X_s(s)/c - (t - x/c) = 0`` for the emission time ``s``
at each reception time in ``t``.  Subsonic motion makes ``g`` strictly
increasing with a root bracketed by ``[0, t]``, so the iteration is ten
lockstep bisection steps (bracket width ``t / 1024 < 1e-3 * t``) followed
by Newton steps that fall back to the bracket midpoint whenever a step
would leave the bracket.
"""

import numpy as np

#: Fixed bisection steps: shrinks the initial bracket [0, t] below 1e-3 * t.
BISECT_STEPS = 10


def _alpha01(pid, u):
    """(alpha, alpha') for built-in profile id ``pid`` at array argument ``u``."""
    if pid == 0:
        z = np.zeros_like(u)
        return z, z
    if pid == 1:
        e = np.exp(-u)
        return 1.0 - e, e
    if pid == 2:
        return np.sin(u), np.cos(u)
    raise ValueError(f"unknown profile id {pid}")


def solve_retarded(pid, v, a, Omega, c, x, t, tol, max_iter):
    """Vectorized emission-time solve for one receiver position.

    Parameters are the raw trajectory numbers (``X_s(s) = v*s + a*alpha(Omega*s)``),
    the receiver position ``x``, and an array ``t`` of reception times with
    ``t - x/c >= 0`` (caller-checked).  Returns ``(t_e, residual, iterations)``
    arrays; callers decide whether ``residual > tol`` is fatal.
    """
    t = np.asarray(t, dtype=float)
    rhs = t - x / c

    def g(s):
        alpha, _ = _alpha01(pid, Omega * s)
        return s - (v * s + a * alpha) / c - rhs

    def gprime(s):
        _, ap = _alpha01(pid, Omega * s)
        return 1.0 - (v + a * Omega * ap) / c

    lo = np.zeros_like(t)
    hi = t.astype(float).copy()
    for _ in range(BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        above = g(mid) >= 0.0
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)

    s = 0.5 * (lo + hi)
    iters = np.full(t.shape, BISECT_STEPS, dtype=np.int64)
    done = np.zeros(t.shape, dtype=bool)
    for _ in range(max(0, max_iter - BISECT_STEPS)):
        gs = g(s)
        done = done | (np.abs(gs) <= tol)
        if done.all():
            break
        hi = np.where(~done & (gs > 0.0), np.minimum(hi, s), hi)
        lo = np.where(~done & (gs < 0.0), np.maximum(lo, s), lo)
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = s - gs / gprime(s)
        # Closed-interval acceptance: a Newton step may land exactly on a
        # bracket endpoint (that IS the root when g is locally linear).
        bad = ~np.isfinite(cand) | (cand < lo) | (cand > hi)
        cand = np.where(bad, 0.5 * (lo + hi), cand)
        s = np.where(done, s, cand)
        iters = np.where(done, iters, iters + 1)

    resid = np.abs(g(s))
    return s, resid, iters


def solve_retarded_scalar(gfun, gpfun, t_hi, tol, max_iter):
    """Scalar solve of ``gfun(s) = 0`` on ``[0, t_hi]`` for callable profiles.

    Same bisection + bracket-guarded Newton scheme as the array kernels.
    Returns ``(s, residual, iterations)``.
    """
    lo, hi = 0.0, float(t_hi)
    it = 0
    for _ in range(BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        if gfun(mid) >= 0.0:
            hi = mid
        else:
            lo = mid
    it = BISECT_STEPS
    s = 0.5 * (lo + hi)
    while it < max_iter:
        gs = gfun(s)
        if abs(gs) <= tol:
            return s, abs(gs), it
        if gs > 0.0:
            hi = min(hi, s)
        else:
            lo = max(lo, s)
        gp = gpfun(s)
        cand = s - gs / gp if gp > 0.0 else 0.5 * (lo + hi)
        if not (lo <= cand <= hi):
            cand = 0.5 * (lo + hi)
        s = cand
        it += 1
    return s, abs(gfun(s)), it
