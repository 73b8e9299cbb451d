"""Drive side of the gripper: gear train, DC motor, PWM and winding heat.

The motor is a brushed DC machine with a linear torque-speed line between
the stall point ``(0, stall_torque)`` and the no-load point
``(no_load_speed, 0)``.  While the jaws hold an object the rotor is
stationary, so the PWM model treats every on-phase as a stall and averages
torque and copper loss over the period.  Switching frequency is carried for
completeness but does not enter the averaged model.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._checks import Checker
from .errors import FreeFall, InvalidField, SpeedOutOfRange

DEFAULT_GEAR_EFFICIENCY = 0.9
DEFAULT_PWM_DUTY = 1.0
DEFAULT_PWM_FREQUENCY_HZ = 1000.0


@dataclass(frozen=True)
class GearStage:
    """One pinion/gear mesh, motor side first."""

    pinion_teeth: int
    gear_teeth: int
    efficiency: float = DEFAULT_GEAR_EFFICIENCY

    @property
    def ratio(self) -> float:
        return self.gear_teeth / self.pinion_teeth


@dataclass(frozen=True)
class GearTrain:
    stages: tuple[GearStage, ...] = ()

    @property
    def ratio(self) -> float:
        r = 1.0
        for stage in self.stages:
            r *= stage.ratio
        return r

    @property
    def efficiency(self) -> float:
        eta = 1.0
        for stage in self.stages:
            eta *= stage.efficiency
        return eta


@dataclass(frozen=True)
class PwmSettings:
    duty: float = DEFAULT_PWM_DUTY
    frequency_hz: float = DEFAULT_PWM_FREQUENCY_HZ


@dataclass(frozen=True)
class MotorSpec:
    """A catalog entry for a brushed DC motor (SI units throughout)."""

    id: str
    rated_voltage_v: float
    stall_torque_nm: float
    no_load_speed_rad_s: float
    stall_current_a: float
    winding_resistance_ohm: float
    thermal_resistance_k_per_w: float
    max_winding_temp_c: float
    mass_kg: float
    cost: float
    name: str = ""


@dataclass(frozen=True)
class ThermalResult:
    dissipated_power_w: float
    steady_temp_c: float
    feasible: bool


def check_gear_train(chk: Checker, train: GearTrain, prefix: str) -> None:
    for i, stage in enumerate(train.stages):
        p = f"{prefix}.stages[{i}]"
        chk.integer_at_least(f"{p}.pinion_teeth", stage.pinion_teeth, 1)
        chk.integer_at_least(f"{p}.gear_teeth", stage.gear_teeth, 1)
        chk.within(f"{p}.efficiency", stage.efficiency, 0.0, 1.0, lo_open=True)


def check_pwm(chk: Checker, pwm: PwmSettings, prefix: str) -> None:
    chk.within(f"{prefix}.duty", pwm.duty, 0.0, 1.0)
    chk.positive(f"{prefix}.frequency_hz", pwm.frequency_hz)


def motor_issues(motor: MotorSpec) -> list[InvalidField]:
    """Return every invariant a catalog entry violates (empty when valid)."""
    chk = Checker()
    if not isinstance(motor.id, str) or not motor.id.strip():
        chk.fail("id", "must be a non-empty string")
    for name in (
        "rated_voltage_v",
        "stall_torque_nm",
        "no_load_speed_rad_s",
        "stall_current_a",
        "winding_resistance_ohm",
        "thermal_resistance_k_per_w",
        "mass_kg",
    ):
        chk.positive(name, getattr(motor, name))
    chk.greater("max_winding_temp_c", motor.max_winding_temp_c, 25.0)
    chk.non_negative("cost", motor.cost)
    return chk.issues


def gear_stage_output_torque(t_in: float, stage: GearStage) -> float:
    return t_in * (stage.gear_teeth / stage.pinion_teeth) * stage.efficiency


def train_output_torque(t_in: float, train: GearTrain) -> float:
    """Torque at the last driven gear for ``t_in`` at the motor shaft."""
    t = t_in
    for stage in train.stages:
        t = gear_stage_output_torque(t, stage)
    return t


def motor_torque_at_speed(motor: MotorSpec, omega: float) -> float:
    if not 0.0 <= omega <= motor.no_load_speed_rad_s:
        raise SpeedOutOfRange(omega, motor.no_load_speed_rad_s)
    return motor.stall_torque_nm * (1.0 - omega / motor.no_load_speed_rad_s)


def pwm_effective_stall_torque(motor: MotorSpec, pwm: PwmSettings) -> float:
    """Period-averaged stall torque under PWM excitation."""
    return pwm.duty * motor.stall_torque_nm


def stall_winding_temperature(
    motor: MotorSpec, pwm: PwmSettings, ambient_c: float
) -> ThermalResult:
    """Steady-state winding temperature while stalled under PWM.

    Lumped single-node model: average copper loss
    ``duty * I_stall**2 * R_winding`` flows through ``thermal_resistance``.
    """
    power = pwm.duty * motor.stall_current_a**2 * motor.winding_resistance_ohm
    temp = ambient_c + power * motor.thermal_resistance_k_per_w
    return ThermalResult(
        dissipated_power_w=power,
        steady_temp_c=temp,
        feasible=temp <= motor.max_winding_temp_c,
    )


def linear_actuator_force(
    gripper_mass_kg: float, object_mass_kg: float, g: float, lift_accel_m_s2: float = 0.0
) -> float:
    """Peak force the lift actuator must supply to raise gripper and payload."""
    if lift_accel_m_s2 <= -g:
        raise FreeFall(lift_accel_m_s2, g)
    return (gripper_mass_kg + object_mass_kg) * (g + lift_accel_m_s2)
