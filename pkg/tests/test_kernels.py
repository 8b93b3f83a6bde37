"""Backend parity and selection for the retarded-time solver kernels."""

import os
import subprocess
import sys

import numpy as np
import pytest

from dopplerlab._kernels import (
    PROFILE_IDS,
    available_backends,
    backend_name,
    solve_retarded_scalar,
)

HAS_NATIVE = "native" in available_backends()

CASES = [
    # (profile, v, a, Omega, x)
    ("constant", 0.0, 0.0, 0.1, 5.0),
    ("constant", 0.4, 0.0, 0.1, 150.0),  # stays ahead of the boundary
    ("decelerating", 0.0, -2.0, 0.1, 5.0),
    ("oscillatory", 0.0, 2.0, 0.1, 5.0),
    ("oscillatory", 0.1, 3.0, 0.1, 30.0),
]


@pytest.mark.skipif(not HAS_NATIVE, reason="compiled kernel not built")
@pytest.mark.parametrize("profile,v,a,Omega,x", CASES)
def test_backend_parity(profile, v, a, Omega, x, rng):
    backends = available_backends()
    ts = x + rng.uniform(0.05, 150.0, 2000)
    ts.sort()
    te_p, r_p, _ = backends["pure"](PROFILE_IDS[profile], v, a, Omega, 1.0,
                                    x, ts, 1e-12, 200)
    te_n, r_n, _ = backends["native"](PROFILE_IDS[profile], v, a, Omega, 1.0,
                                      x, ts, 1e-12, 200)
    assert np.max(np.abs(te_p - te_n)) < 1e-12
    assert np.max(r_p) <= 1e-12
    assert np.max(r_n) <= 1e-12


def test_scalar_solver_matches_array_solver(rng):
    v, a, Omega, x = 0.0, 2.0, 0.1, 5.0
    ts = x + rng.uniform(0.05, 100.0, 50)
    arr = available_backends()["pure"]
    te_arr, _, _ = arr(PROFILE_IDS["oscillatory"], v, a, Omega, 1.0, x, ts,
                       1e-12, 200)
    for i, t in enumerate(ts):
        rhs = t - x

        def g(s):
            return s - (v * s + a * np.sin(Omega * s)) - rhs

        def gp(s):
            return 1.0 - (v + a * Omega * np.cos(Omega * s))

        te, resid, _ = solve_retarded_scalar(g, gp, float(t), 1e-12, 200)
        assert abs(te - te_arr[i]) < 1e-12
        assert resid <= 1e-12


def test_iteration_budget_respected(rng):
    ts = 5.0 + rng.uniform(0.05, 100.0, 500)
    for name, solver in available_backends().items():
        _, _, iters = solver(PROFILE_IDS["oscillatory"], 0.0, 2.0, 0.1, 1.0,
                             5.0, ts, 1e-12, 200)
        assert int(np.max(iters)) <= 200, name


def test_forced_pure_backend_env(tmp_path):
    env = dict(os.environ, DOPPLERLAB_PURE_KERNELS="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from dopplerlab._kernels import backend_name; print(backend_name())"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure"


def test_backend_name_is_consistent():
    assert backend_name() in available_backends()
