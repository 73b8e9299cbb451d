"""Inverse problems over the gripping model.

* the torque a motor must produce behind the gear train,
* choosing the lightest adequate motor from a catalog,
* grid search over the moment arms for the smallest holding torque,
* a five-point audit against the mechanical design guidelines.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ._checks import Checker
from .drivetrain import (
    MotorSpec,
    ThermalResult,
    pwm_effective_stall_torque,
    stall_winding_temperature,
    train_output_torque,
)
from .errors import (
    EmptyCatalog,
    InfeasibleGeometry,
    NoFeasibleMotor,
    NoFeasiblePoint,
)
from .model import DEFAULT_SAFETY_FACTOR, GeometryBounds, Scenario, check_bounds
from .statics import GraspSolution, holding_torque
from .structural import FingerBeam, StiffnessResult

PASS = "pass"
FAIL = "fail"
NOT_EVALUATED = "not-evaluated"

GUIDELINE_TITLES = {
    1: "minimize gripper weight",
    2: "secure grasp",
    3: "encompass the object",
    4: "grasp without deformation",
    5: "minimize finger length",
}

Constraint = Callable[[float, float], bool]


@dataclass(frozen=True)
class SizingRequest:
    scenario: Scenario
    catalog: tuple[MotorSpec, ...] = ()
    safety_factor: float = DEFAULT_SAFETY_FACTOR
    geometry_bounds: GeometryBounds | None = None

    @classmethod
    def from_scenario(
        cls,
        scenario: Scenario,
        catalog: Iterable[MotorSpec] = (),
        safety_factor: float | None = None,
    ) -> "SizingRequest":
        """Build a request from the scenario's own sizing options."""
        sf = scenario.sizing.safety_factor if safety_factor is None else safety_factor
        request = cls(
            scenario=scenario,
            catalog=tuple(catalog),
            safety_factor=sf,
            geometry_bounds=scenario.sizing.geometry_bounds,
        )
        validate_request(request)
        return request


@dataclass(frozen=True)
class MotorChoice:
    motor: MotorSpec
    required_motor_torque_nm: float
    effective_torque_nm: float
    thermal: ThermalResult
    margin_nm: float


@dataclass(frozen=True)
class GeometryOptimum:
    a_opt_m: float
    b_opt_m: float
    T_opt_nm: float
    points_evaluated: int
    points_feasible: int


@dataclass(frozen=True)
class AuditEntry:
    guideline: int
    title: str
    status: str
    measured: float | bool | None
    limit: float | None
    note: str


@dataclass(frozen=True)
class AuditReport:
    entries: tuple[AuditEntry, ...]

    def status(self, guideline: int) -> str:
        return self.entries[guideline - 1].status


def validate_request(request: SizingRequest) -> SizingRequest:
    chk = Checker()
    chk.at_least("safety_factor", request.safety_factor, 1.0)
    if request.geometry_bounds is not None:
        check_bounds(chk, request.geometry_bounds, "geometry_bounds")
    chk.raise_if_any()
    return request


def _scenario_torque(scenario: Scenario, a: float, b: float) -> float:
    return holding_torque(
        scenario.object.mass_kg,
        scenario.contact.mu,
        scenario.environment.g_m_s2,
        a,
        b,
    )


def required_motor_torque(
    scenario: Scenario, safety_factor: float = DEFAULT_SAFETY_FACTOR
) -> float:
    """Motor shaft torque for the train to deliver ``safety_factor * T``.

    Raises:
        InfeasibleGeometry: if the holding torque is not positive.
    """
    T = _scenario_torque(scenario, scenario.geometry.arm_a_m, scenario.geometry.arm_b_m)
    if not T > 0:
        raise InfeasibleGeometry(T)
    return safety_factor * T / train_output_torque(1.0, scenario.gear_train)


def _selection_key(motor: MotorSpec) -> tuple[float, float, str]:
    return (motor.mass_kg, motor.cost, motor.id)


def select_motor(request: SizingRequest) -> MotorChoice:
    """Lightest catalog motor whose derated stall torque covers the demand.

    A motor qualifies when ``duty * stall_torque`` reaches the required
    shaft torque and its stalled winding stays within temperature limits.
    Ties on mass go to the cheaper motor, then to the smaller id.
    """
    if not request.catalog:
        raise EmptyCatalog()
    scenario = request.scenario
    required = required_motor_torque(scenario, request.safety_factor)
    pwm = scenario.pwm
    ambient = scenario.environment.ambient_temp_c

    best: MotorChoice | None = None
    best_shortfall = float("inf")
    for motor in request.catalog:
        effective = pwm_effective_stall_torque(motor, pwm)
        best_shortfall = min(best_shortfall, max(0.0, required - effective))
        if effective < required:
            continue
        thermal = stall_winding_temperature(motor, pwm, ambient)
        if not thermal.feasible:
            continue
        if best is None or _selection_key(motor) < _selection_key(best.motor):
            best = MotorChoice(
                motor=motor,
                required_motor_torque_nm=required,
                effective_torque_nm=effective,
                thermal=thermal,
                margin_nm=effective - required,
            )
    if best is None:
        raise NoFeasibleMotor(required, best_shortfall)
    return best


def grid_axis(lo: float, hi: float, n: int) -> list[float]:
    """``n`` evenly spaced samples of ``[lo, hi]`` with exact endpoints."""
    step = (hi - lo) / (n - 1)
    points = [lo + i * step for i in range(n - 1)]
    points.append(hi)
    return points


def optimize_geometry(
    request: SizingRequest, constraints: Sequence[Constraint] = ()
) -> GeometryOptimum:
    """Exhaustive grid search for the moment arms minimising holding torque.

    A grid point is feasible when ``b > mu * a`` (positive holding torque)
    and every extra ``constraint(a, b)`` returns true.  Ties on torque go
    to the smaller ``b``, then the smaller ``a``.

    Raises:
        ValueError: if the request carries no geometry bounds.
        NoFeasiblePoint: if no grid point is feasible.
    """
    bounds = request.geometry_bounds
    if bounds is None:
        raise ValueError("optimize_geometry needs geometry bounds")
    scenario = request.scenario
    a_axis = grid_axis(bounds.a_min_m, bounds.a_max_m, bounds.a_points)
    b_axis = grid_axis(bounds.b_min_m, bounds.b_max_m, bounds.b_points)

    best: tuple[float, float, float] | None = None
    feasible = 0
    for a in a_axis:
        for b in b_axis:
            T = _scenario_torque(scenario, a, b)
            if not T > 0 or not all(c(a, b) for c in constraints):
                continue
            feasible += 1
            key = (T, b, a)
            if best is None or key < best:
                best = key
    evaluated = len(a_axis) * len(b_axis)
    if best is None:
        raise NoFeasiblePoint(evaluated)
    T, b, a = best
    return GeometryOptimum(
        a_opt_m=a,
        b_opt_m=b,
        T_opt_nm=T,
        points_evaluated=evaluated,
        points_feasible=feasible,
    )


def effective_finger_beam(scenario: Scenario) -> FingerBeam | None:
    """The scenario's finger with the tighter of its two deflection limits."""
    beam = scenario.finger
    if beam is None:
        return None
    limits = [beam.deflection_limit_m]
    if scenario.limits is not None:
        limits.append(scenario.limits.max_deflection_m)
    present = [x for x in limits if x is not None]
    limit = min(present) if present else None
    return dataclasses.replace(beam, deflection_limit_m=limit)


def _threshold(measured: float, limit: float | None) -> str:
    if limit is None:
        return NOT_EVALUATED
    return PASS if measured <= limit else FAIL


def guideline_audit(
    scenario: Scenario,
    solution: GraspSolution,
    structural: StiffnessResult | None,
) -> AuditReport:
    limits = scenario.limits
    entries = []

    max_mass = limits.max_gripper_mass_kg if limits else None
    entries.append(
        AuditEntry(
            1,
            GUIDELINE_TITLES[1],
            _threshold(scenario.gripper_mass_kg, max_mass),
            scenario.gripper_mass_kg,
            max_mass,
            "gripper_mass_kg <= limits.max_gripper_mass_kg"
            if max_mass is not None
            else "no gripper mass limit configured",
        )
    )

    entries.append(
        AuditEntry(
            2,
            GUIDELINE_TITLES[2],
            PASS if solution.slip_margin_n >= 0 else FAIL,
            solution.slip_margin_n,
            0.0,
            "interpreted as slip margin 2*mu*R - m*g >= 0 at the applied normal force",
        )
    )

    enc = scenario.encompassing
    entries.append(
        AuditEntry(
            3,
            GUIDELINE_TITLES[3],
            NOT_EVALUATED if enc is None else (PASS if enc else FAIL),
            enc,
            None,
            "user declaration echoed; not derivable from the planar point-contact model",
        )
    )

    crush = solution.crush_margin_n
    entries.append(
        AuditEntry(
            4,
            GUIDELINE_TITLES[4],
            NOT_EVALUATED if crush is None else (PASS if crush >= 0 else FAIL),
            crush,
            0.0 if crush is not None else None,
            "crush margin crush_limit_n - R >= 0"
            if crush is not None
            else "no crush limit configured",
        )
    )

    max_len = limits.max_finger_length_m if limits else None
    length_status = _threshold(scenario.geometry.finger_length_m, max_len)
    if structural is None or structural.passed is None:
        stiff_status = NOT_EVALUATED
        stiff_note = "stiffness not evaluated"
    else:
        stiff_status = PASS if structural.passed else FAIL
        stiff_note = (
            f"tip deflection {structural.deflection_m:.6g} m "
            f"vs limit {structural.deflection_limit_m:.6g} m"
        )
    parts = (length_status, stiff_status)
    if FAIL in parts:
        status = FAIL
    elif NOT_EVALUATED in parts:
        status = NOT_EVALUATED
    else:
        status = PASS
    length_note = (
        "finger length within limit" if length_status == PASS
        else "finger length exceeds limit" if length_status == FAIL
        else "no finger length limit configured"
    )
    entries.append(
        AuditEntry(
            5,
            GUIDELINE_TITLES[5],
            status,
            scenario.geometry.finger_length_m,
            max_len,
            f"{length_note}; {stiff_note}",
        )
    )
    return AuditReport(tuple(entries))
