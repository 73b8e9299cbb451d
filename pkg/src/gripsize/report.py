"""Full analysis of one scenario, bundled as a serialisable report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .drivetrain import MotorSpec, linear_actuator_force, train_output_torque
from .errors import InfeasibleGeometry, NoFeasibleMotor
from .model import Scenario
from .sizing import (
    AuditReport,
    MotorChoice,
    SizingRequest,
    effective_finger_beam,
    guideline_audit,
    required_motor_torque,
    select_motor,
)
from .statics import GraspSolution, required_normal_force, solve_scenario
from .structural import StiffnessResult, stiffness_check


@dataclass(frozen=True)
class Provenance:
    defaults_applied: dict[str, float] = field(default_factory=dict)
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class DrivetrainSummary:
    train_ratio: float
    train_efficiency: float
    torque_multiplier: float
    safety_factor: float
    target_output_torque_nm: float
    required_motor_torque_nm: float | None  # None when the geometry is self-locking
    pwm_duty: float


@dataclass(frozen=True)
class AnalysisReport:
    scenario: Scenario
    grasp: GraspSolution
    drivetrain: DrivetrainSummary
    structural: StiffnessResult | None
    motor: MotorChoice | None
    motor_status: str
    audit: AuditReport
    actuator_force_n: float
    infeasible: tuple[str, ...]
    provenance: Provenance


def analyze(
    scenario: Scenario,
    catalog: Iterable[MotorSpec] | None = None,
    *,
    safety_factor: float | None = None,
    defaults_applied: Mapping[str, float] | None = None,
) -> AnalysisReport:
    """Run every model on ``scenario`` and collect the results.

    Infeasibility (self-locking geometry, no adequate motor) is recorded in
    ``report.infeasible`` rather than raised, so the report is always
    complete enough to explain itself.

    The fingers are assumed to press with ``safety_factor * R``, which is
    what a drive sized for ``safety_factor * T`` delivers; slip, crush and
    finger deflection are all evaluated at that applied force.
    """
    request = SizingRequest.from_scenario(scenario, catalog or (), safety_factor)
    sf = request.safety_factor
    notes: list[str] = []
    infeasible: list[str] = []
    defaults = dict(defaults_applied or {})
    if safety_factor is not None:
        defaults.pop("sizing.safety_factor", None)
        notes.append(f"safety_factor overridden to {sf:g}")

    m = scenario.object.mass_kg
    mu = scenario.contact.mu
    g = scenario.environment.g_m_s2
    R_applied = sf * required_normal_force(m, mu, g)
    grasp = solve_scenario(scenario, applied_normal_force=R_applied)
    notes.append(f"normal force applied at safety_factor x R = {sf:g} x R")
    if grasp.note:
        notes.append(grasp.note)

    train = scenario.gear_train
    try:
        motor_torque = required_motor_torque(scenario, sf)
    except InfeasibleGeometry:
        motor_torque = None
        infeasible.append("InfeasibleGeometry")
    drivetrain = DrivetrainSummary(
        train_ratio=train.ratio,
        train_efficiency=train.efficiency,
        torque_multiplier=train_output_torque(1.0, train),
        safety_factor=sf,
        target_output_torque_nm=sf * grasp.holding_torque_nm,
        required_motor_torque_nm=motor_torque,
        pwm_duty=scenario.pwm.duty,
    )

    beam = effective_finger_beam(scenario)
    structural = None if beam is None else stiffness_check(R_applied, beam)

    motor = None
    if not request.catalog:
        motor_status = "not evaluated: no motor catalog supplied"
    elif motor_torque is None:
        motor_status = "not evaluated: geometry is self-locking"
    else:
        try:
            motor = select_motor(request)
            motor_status = f"selected {motor.motor.id}"
        except NoFeasibleMotor as exc:
            motor_status = str(exc)
            infeasible.append("NoFeasibleMotor")

    actuator = linear_actuator_force(
        scenario.gripper_mass_kg, m, g, scenario.lift_accel_m_s2
    )

    return AnalysisReport(
        scenario=scenario,
        grasp=grasp,
        drivetrain=drivetrain,
        structural=structural,
        motor=motor,
        motor_status=motor_status,
        audit=guideline_audit(scenario, grasp, structural),
        actuator_force_n=actuator,
        infeasible=tuple(infeasible),
        provenance=Provenance(defaults_applied=defaults, notes=tuple(notes)),
    )
