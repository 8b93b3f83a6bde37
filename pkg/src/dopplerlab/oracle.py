"""Exact outgoing-wave solution via the retarded-time equation.

For subsonic boundary motion the outgoing half-line solution is
``U(x, t) = exp(i * omega * t_e)`` where the emission time ``t_e`` solves
``t_e - X_s(t_e)/c = t - x/c``.  The map on the left is strictly
increasing (its derivative is ``1 - Xdot_s/c > 0``), so the root is unique
and bracketed by ``[0, t]``.  This module is the independent check against
which the multiple-scales approximation is measured.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from . import _kernels
from .asymptotics import BOUNDARY_CLAMP, am_dimensionless, lab_phase, lab_phase_rate
from .errors import (
    ArgumentOutOfRange,
    NoConvergence,
    NotYetReached,
    ObserverInsideBoundary,
)
from .motion import BoundaryMotion, MediumParams, boundary_position, validate

#: Default solver tolerance scale: |residual| <= 1e-12 / omega keeps the
#: oracle phase accurate to 1e-12 radians.
DEFAULT_TOL_SCALE = 1e-12

#: Iteration budget for the bisection + Newton solve.
MAX_ITERATIONS = 200


@dataclass(frozen=True)
class RetardedTimeResult:
    """Emission time with its achieved residual and iteration count."""

    t_e: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class ComparisonReport:
    """Error norms between the asymptotic and exact fields on one window."""

    max_modulus_error: float
    max_phase_error: float
    max_freq_rel_error: float


def _default_tol(medium: MediumParams) -> float:
    return DEFAULT_TOL_SCALE / medium.omega


def _check_point(motion: BoundaryMotion, medium: MediumParams, x: float, t: float):
    if t < 0.0:
        raise ArgumentOutOfRange(f"time must be >= 0, got {t}")
    if t - x / medium.c < 0.0:
        raise NotYetReached(
            f"(x={x}, t={t}) is outside the causal cone: no signal has arrived"
        )
    # Snap tolerance keeps receivers placed exactly on the boundary valid
    # through roundoff in X_s; matches the clamp in the asymptotics layer.
    if x < boundary_position(motion, t) - BOUNDARY_CLAMP * medium.c / medium.omega:
        raise ObserverInsideBoundary(
            f"x={x} lies behind the boundary at t={t}"
        )


def retarded_time(motion: BoundaryMotion, medium: MediumParams, x: float,
                  t: float, tol: float = None) -> RetardedTimeResult:
    """Solve ``t_e - X_s(t_e)/c = t - x/c`` for the emission time.

    Bisection narrows the ``[0, t]`` bracket below ``1e-3 * t``; Newton
    steps (rejected back to the bracket midpoint if they would escape)
    polish to ``|residual| <= tol`` (default ``1e-12 / omega``).
    """
    validate(motion, medium)
    _check_point(motion, medium, x, t)
    if tol is None:
        tol = _default_tol(medium)

    profile = motion.profile
    if profile.is_builtin:
        pid = _kernels.PROFILE_IDS[profile.kind]
        te, resid, iters = _kernels.solve_retarded(
            pid, motion.v, motion.a, motion.Omega, medium.c, x,
            np.array([t], dtype=float), tol, MAX_ITERATIONS)
        te, resid, iters = float(te[0]), float(resid[0]), int(iters[0])
    else:
        rhs = t - x / medium.c

        def g(s):
            return s - boundary_position(motion, s) / medium.c - rhs

        def gp(s):
            from .motion import boundary_velocity
            return 1.0 - boundary_velocity(motion, s) / medium.c

        te, resid, iters = _kernels.solve_retarded_scalar(
            g, gp, t, tol, MAX_ITERATIONS)

    if resid > tol:
        raise NoConvergence(
            f"retarded-time solve stalled at residual {resid:.3g} (> {tol:.3g}) "
            f"after {iters} iterations for (x={x}, t={t})"
        )
    return RetardedTimeResult(t_e=te, residual=resid, iterations=iters)


def _retarded_times_grid(motion: BoundaryMotion, medium: MediumParams, x: float,
                         ts: np.ndarray, tol: float = None) -> np.ndarray:
    """Vectorized emission times for a validated in-cone, in-domain grid."""
    if tol is None:
        tol = _default_tol(medium)
    profile = motion.profile
    if profile.is_builtin:
        pid = _kernels.PROFILE_IDS[profile.kind]
        te, resid, iters = _kernels.solve_retarded(
            pid, motion.v, motion.a, motion.Omega, medium.c, x,
            np.asarray(ts, dtype=float), tol, MAX_ITERATIONS)
        if np.any(resid > tol):
            worst = int(np.argmax(resid))
            raise NoConvergence(
                f"retarded-time solve stalled at residual {resid[worst]:.3g} "
                f"for t={ts[worst]}"
            )
        return te
    return np.array([retarded_time(motion, medium, x, float(t), tol).t_e
                     for t in ts])


def exact_field(motion: BoundaryMotion, medium: MediumParams, x: float,
                t: float) -> complex:
    """``exp(i*omega*t_e)`` inside the causal cone, 0 outside it.

    The exact outgoing field has unit modulus wherever it is nonzero.
    """
    validate(motion, medium)
    if t < 0.0 or t - x / medium.c < 0.0:
        return 0.0j
    if x < boundary_position(motion, t):
        raise ObserverInsideBoundary(f"x={x} lies behind the boundary at t={t}")
    res = retarded_time(motion, medium, x, t)
    return complex(np.exp(1j * medium.omega * res.t_e))


def exact_instantaneous_frequency(motion: BoundaryMotion, medium: MediumParams,
                                  x: float, t: float) -> float:
    """Received frequency ``omega / (1 - beta - delta*alpha'(Omega*t_e))``.

    The classical shift formula evaluated at the emission time; on the
    boundary itself (``x = X_s(t)``, so ``t_e = t``) this is exactly
    ``omega * fm_factor(t)``.
    """
    beta, delta, _ = validate(motion, medium)
    res = retarded_time(motion, medium, x, t)
    _, ap, _ = motion.profile.eval(motion.Omega * res.t_e)
    return medium.omega / (1.0 - beta - delta * ap)


def compare_fields(motion: BoundaryMotion, medium: MediumParams, x: float,
                   t_window: Tuple[float, float], n_samples: int,
                   include_phase_shift: bool = True) -> ComparisonReport:
    """Sample both solutions on a uniform time grid and report error norms.

    Moduli come from the sampled field values; phases and instantaneous
    frequencies are evaluated analytically on both sides (the asymptotic
    side by differentiating its closed-form phase, the exact side through
    the emission time), so the reported errors carry no finite-difference
    noise.  The whole window must lie inside the causal cone and ahead of
    the boundary.
    """
    beta, delta, eps = validate(motion, medium)
    t_lo, t_hi = float(t_window[0]), float(t_window[1])
    if not (t_hi > t_lo):
        raise ArgumentOutOfRange(f"empty comparison window {t_window}")
    if n_samples < 2:
        raise ArgumentOutOfRange(f"need at least 2 samples, got {n_samples}")
    ts = np.linspace(t_lo, t_hi, int(n_samples))
    _check_point(motion, medium, x, t_lo)
    xs = boundary_position(motion, ts)
    if np.any(np.asarray(xs) > x):
        raise ObserverInsideBoundary(
            f"boundary overtakes x={x} inside the window {t_window}"
        )

    omega = medium.omega
    te = _retarded_times_grid(motion, medium, x, ts)

    # Moduli of the two sampled fields: the exact field has unit modulus,
    # the asymptotic field's modulus is its AM factor.
    am = am_dimensionless(motion.profile, beta, delta, eps,
                          omega * x / medium.c, omega * ts)
    max_modulus = float(np.max(np.abs(np.abs(am) - 1.0)))

    phase_asym = lab_phase(motion, medium, x, ts, include_phase_shift)
    phase_exact = omega * te
    max_phase = float(np.max(np.abs(phase_asym - phase_exact)))

    freq_asym = lab_phase_rate(motion, medium, x, ts, include_phase_shift)
    _, ap_e, _ = motion.profile.eval(motion.Omega * te)
    freq_exact = omega / (1.0 - beta - delta * np.asarray(ap_e))
    max_freq = float(np.max(np.abs(freq_asym - freq_exact) / freq_exact))

    return ComparisonReport(max_modulus_error=max_modulus,
                            max_phase_error=max_phase,
                            max_freq_rel_error=max_freq)
