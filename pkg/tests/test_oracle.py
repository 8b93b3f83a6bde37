"""Exact retarded-time reference solution and asymptotic comparison."""

import math

import numpy as np
import pytest

import dopplerlab.oracle as oracle_mod
from dopplerlab.asymptotics import fm_factor
from dopplerlab.errors import (
    ArgumentOutOfRange,
    NoConvergence,
    NotYetReached,
    ObserverInsideBoundary,
)
from dopplerlab.motion import MotionProfile, boundary_position
from dopplerlab.oracle import (
    compare_fields,
    exact_field,
    exact_instantaneous_frequency,
    retarded_time,
)

from conftest import make_motion


class TestRetardedTime:
    def test_constant_velocity_linear_solution(self, medium):
        m = make_motion("constant", beta=0.5, delta=0.0, eps=0.1)
        res = retarded_time(m, medium, 2.0, 3.0)
        assert res.t_e == pytest.approx(2.0, abs=1e-12)
        assert res.residual <= 1e-12

    def test_stationary_boundary(self, medium):
        m = make_motion("constant", beta=0.0, delta=0.0, eps=0.1)
        res = retarded_time(m, medium, 1.0, 4.0)
        assert res.t_e == pytest.approx(3.0, abs=1e-12)

    def test_oscillatory_reference_point(self, medium):
        # Frozen from an independent bisection-only solve at 1e-14.
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        res = retarded_time(m, medium, 5.0, 9.0)
        assert res.t_e == pytest.approx(4.950076822855712, abs=1e-11)
        assert res.residual < 1e-12

    def test_residual_definition(self, medium):
        m = make_motion("oscillatory", beta=0.1, delta=0.2, eps=0.1)
        res = retarded_time(m, medium, 4.0, 11.0)
        g = res.t_e - boundary_position(m, res.t_e) - (11.0 - 4.0)  # c = 1
        assert abs(g) == pytest.approx(res.residual, abs=1e-15)

    def test_custom_profile_solves(self, medium):
        prof = MotionProfile.custom(
            lambda u: 1.0 - math.cos(u),
            lambda u: math.sin(u),
            lambda u: math.cos(u),
            horizon=4.0 * math.pi,
        )
        m = make_motion(prof, beta=0.0, delta=0.3, eps=0.1)
        res = retarded_time(m, medium, 3.0, 8.0)
        assert res.residual < 1e-12
        g = res.t_e - boundary_position(m, res.t_e) - (8.0 - 3.0)
        assert abs(g) < 1e-12

    def test_before_arrival_rejected(self, medium):
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        with pytest.raises(NotYetReached):
            retarded_time(m, medium, 5.0, 3.0)

    def test_negative_time_rejected(self, medium):
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        with pytest.raises(ArgumentOutOfRange):
            retarded_time(m, medium, 1.0, -1.0)

    def test_receiver_behind_boundary_rejected(self, medium):
        m = make_motion("constant", beta=0.5, delta=0.0, eps=0.1)
        with pytest.raises(ObserverInsideBoundary):
            retarded_time(m, medium, 0.5, 8.0)

    def test_exhausted_budget_raises(self, medium, monkeypatch):
        # With the iteration budget capped below the bisection prefix the
        # residual cannot reach tolerance.
        monkeypatch.setattr(oracle_mod, "MAX_ITERATIONS", 10)
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        with pytest.raises(NoConvergence):
            retarded_time(m, medium, 5.0, 9.0)

    def test_strictly_increasing_in_reception_time(self, medium):
        m = make_motion("oscillatory", beta=0.1, delta=0.4, eps=0.1)
        ts = np.linspace(21.0, 120.0, 400)
        tes = [retarded_time(m, medium, 20.0, float(t)).t_e for t in ts]
        assert np.all(np.diff(tes) > 0.0)


class TestExactField:
    def test_classical_reduction(self, medium, rng):
        for beta in (-0.5, 0.0, 0.5):
            m = make_motion("constant", beta=beta, delta=0.0, eps=0.1)
            for _ in range(50):
                t = rng.uniform(0.0, 40.0)
                x = rng.uniform(max(0.0, beta * t), t)
                got = exact_field(m, medium, x, t)
                want = np.exp(1j * (t - x) / (1.0 - beta))
                assert abs(got - want) < 1e-12

    def test_outside_cone_is_zero(self, medium):
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        assert exact_field(m, medium, 8.0, 4.0) == 0.0

    def test_unit_modulus_inside_cone(self, medium, rng):
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        for _ in range(200):
            t = rng.uniform(0.1, 80.0)
            x = rng.uniform(0.0, t)
            x = max(x, boundary_position(m, t))
            val = exact_field(m, medium, x, t)
            assert abs(abs(val) - 1.0) < 1e-14


class TestExactFrequency:
    def test_boundary_matches_fm(self, medium):
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        for t in (0.5, 3.0, 9.0, 31.0):
            xs = boundary_position(m, t)
            got = exact_instantaneous_frequency(m, medium, xs, t)
            assert abs(got - fm_factor(m, medium, t)) < 1e-10  # omega = 1

    def test_classical_value(self, medium):
        m = make_motion("constant", beta=0.25, delta=0.0, eps=0.1)
        got = exact_instantaneous_frequency(m, medium, 2.0, 7.0)
        assert got == pytest.approx(1.0 / 0.75, rel=1e-14)

    def test_oscillatory_range(self, medium):
        m = make_motion("oscillatory", beta=0.0, delta=0.2, eps=0.1)
        vals = [exact_instantaneous_frequency(m, medium, 5.0, float(t))
                for t in np.linspace(5.0, 5.0 + 4.0 * 2.0 * math.pi / 0.1, 500)]
        assert min(vals) >= 1.0 / 1.2 - 1e-12
        assert max(vals) <= 1.25 + 1e-12
        assert min(vals) == pytest.approx(1.0 / 1.2, abs=1e-3)
        assert max(vals) == pytest.approx(1.25, abs=1e-3)


class TestCompareFields:
    def test_classical_errors_vanish(self, medium):
        m = make_motion("constant", beta=0.3, delta=0.0, eps=0.1)
        report = compare_fields(m, medium, 10.0, (10.0, 30.0), 500)
        assert report.max_phase_error < 1e-12
        assert report.max_freq_rel_error < 1e-12
        assert report.max_modulus_error < 1e-12

    def test_decelerating_reference_window(self, medium):
        # Frozen diagnostic values for the canonical comparison setup.
        m = make_motion("decelerating", beta=0.0, delta=-0.2, eps=0.1)
        report = compare_fields(m, medium, 1.0, (1.0, 1.0 + 20.0 * 2.0 * math.pi),
                                2001, include_phase_shift=True)
        assert report.max_freq_rel_error == pytest.approx(2.418064e-3, rel=1e-4)
        assert report.max_freq_rel_error <= 5.0 * 0.1
        assert report.max_phase_error == pytest.approx(1.6199e-2, rel=1e-3)
        assert report.max_modulus_error == pytest.approx(1.0011e-2, rel=1e-3)

    def test_window_before_arrival_rejected(self, medium):
        m = make_motion("decelerating", beta=0.0, delta=-0.2, eps=0.1)
        with pytest.raises(NotYetReached):
            compare_fields(m, medium, 5.0, (2.0, 30.0), 100)
