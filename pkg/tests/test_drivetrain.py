import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gripsize import (
    FreeFall,
    GearStage,
    GearTrain,
    PwmSettings,
    SpeedOutOfRange,
    gear_stage_output_torque,
    linear_actuator_force,
    motor_torque_at_speed,
    pwm_effective_stall_torque,
    stall_winding_temperature,
    train_output_torque,
)
from gripsize.drivetrain import motor_issues

from conftest import make_motor

stages = st.builds(
    GearStage,
    st.integers(8, 40),
    st.integers(8, 120),
    st.floats(0.5, 1.0),
)


@pytest.mark.parametrize(
    "stage, expected",
    [
        (GearStage(12, 48, 1.0), 4.0),
        (GearStage(20, 20, 1.0), 1.0),
        (GearStage(12, 48, 0.9), 3.6),
    ],
)
def test_stage_torque(stage, expected):
    assert gear_stage_output_torque(1.0, stage) == pytest.approx(expected, abs=1e-12)


def test_default_mesh_efficiency():
    assert GearStage(12, 48).efficiency == 0.9


def test_train_torque():
    assert train_output_torque(1.0, GearTrain()) == 1.0
    train = GearTrain((GearStage(10, 40, 0.9), GearStage(10, 20, 0.9)))
    assert train_output_torque(1.0, train) == pytest.approx(6.48, abs=1e-12)
    assert train_output_torque(0.0, train) == 0.0
    assert train.ratio == 8.0
    assert train.efficiency == pytest.approx(0.81, abs=1e-15)


@given(st.lists(stages, max_size=5), st.randoms(use_true_random=False))
def test_train_torque_is_order_independent(stage_list, rnd):
    shuffled = list(stage_list)
    rnd.shuffle(shuffled)
    a = train_output_torque(1.0, GearTrain(tuple(stage_list)))
    b = train_output_torque(1.0, GearTrain(tuple(shuffled)))
    assert math.isclose(a, b, rel_tol=1e-12)


class TestMotorCurve:
    motor = make_motor(stall=1.2, no_load_speed_rad_s=300.0)

    def test_points(self):
        assert motor_torque_at_speed(self.motor, 0.0) == 1.2
        assert motor_torque_at_speed(self.motor, 300.0) == 0.0
        assert motor_torque_at_speed(self.motor, 150.0) == pytest.approx(0.6, abs=1e-15)

    @pytest.mark.parametrize("omega", [-1e-9, 300.0001])
    def test_out_of_range(self, omega):
        with pytest.raises(SpeedOutOfRange):
            motor_torque_at_speed(self.motor, omega)

    @given(st.floats(0.01, 10.0), st.floats(1.0, 2000.0))
    def test_affine(self, stall, w_nl):
        m = make_motor(stall=stall, no_load_speed_rad_s=w_nl)
        lhs = motor_torque_at_speed(m, 0.0) + motor_torque_at_speed(m, w_nl)
        assert lhs == pytest.approx(2 * motor_torque_at_speed(m, w_nl / 2), rel=1e-12)


class TestPwm:
    motor = make_motor(stall=1.2)

    @pytest.mark.parametrize("duty, expected", [(1.0, 1.2), (0.0, 0.0), (0.5, 0.6)])
    def test_derating(self, duty, expected):
        assert pwm_effective_stall_torque(self.motor, PwmSettings(duty)) == expected

    @given(st.floats(0, 1), st.floats(0, 1))
    def test_monotone_in_duty(self, d1, d2):
        lo, hi = sorted((d1, d2))
        assert pwm_effective_stall_torque(self.motor, PwmSettings(lo)) <= pwm_effective_stall_torque(
            self.motor, PwmSettings(hi)
        )


class TestThermal:
    def test_worked_example(self):
        m = make_motor(stall_current_a=2.0, winding_resistance_ohm=3.0, thermal_resistance_k_per_w=10.0)
        r = stall_winding_temperature(m, PwmSettings(0.5), 25.0)
        assert r.dissipated_power_w == pytest.approx(6.0, abs=1e-12)
        assert r.steady_temp_c == pytest.approx(85.0, abs=1e-9)
        assert r.feasible

    def test_zero_duty_is_ambient(self):
        r = stall_winding_temperature(make_motor(), PwmSettings(0.0), 25.0)
        assert r.steady_temp_c == 25.0 and r.feasible

    def test_over_limit(self):
        m = make_motor(max_winding_temp_c=80.0)
        r = stall_winding_temperature(m, PwmSettings(0.5), 25.0)
        assert r.steady_temp_c == pytest.approx(85.0, abs=1e-9)
        assert not r.feasible

    @given(st.floats(0, 1), st.floats(0, 1), st.floats(0.1, 10.0), st.floats(0.1, 10.0))
    def test_monotone(self, d1, d2, i1, i2):
        dlo, dhi = sorted((d1, d2))
        ilo, ihi = sorted((i1, i2))
        t = lambda d, i: stall_winding_temperature(
            make_motor(stall_current_a=i), PwmSettings(d), 25.0
        ).steady_temp_c
        assert t(dlo, ilo) <= t(dhi, ilo) <= t(dhi, ihi)


class TestActuator:
    def test_examples(self):
        assert linear_actuator_force(0.8, 2.0, 9.81, 0.0) == pytest.approx(27.468, abs=1e-12)
        assert linear_actuator_force(0.8, 2.0, 9.81, 2.0) == pytest.approx(33.068, abs=1e-12)
        assert linear_actuator_force(0.0, 0.0, 9.81, 0.0) == 0.0

    def test_free_fall(self):
        with pytest.raises(FreeFall):
            linear_actuator_force(1.0, 1.0, 9.81, -9.81)

    @given(st.floats(0, 5), st.floats(0, 5), st.floats(-5, 5), st.floats(0.1, 4))
    def test_linear(self, mg, mo, acc, k):
        f = linear_actuator_force(mg, mo, 9.81, acc)
        assert linear_actuator_force(k * mg, k * mo, 9.81, acc) == pytest.approx(k * f, rel=1e-12, abs=1e-12)


def test_motor_issues():
    assert motor_issues(make_motor()) == []
    bad = make_motor(stall=-1.0, max_winding_temp_c=20.0, id="")
    paths = {i.path for i in motor_issues(bad)}
    assert paths == {"id", "stall_torque_nm", "max_winding_temp_c"}
