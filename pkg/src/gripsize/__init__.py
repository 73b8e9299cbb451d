"""Gripper statics and actuator sizing.

Quasistatic two-finger friction grip model, DC motor / PWM / gear train
drive model, cantilever finger check, and the sizing problems built on
them (motor selection, moment-arm optimisation, guideline audit).
"""

from .drivetrain import (
    GearStage,
    GearTrain,
    MotorSpec,
    PwmSettings,
    ThermalResult,
    gear_stage_output_torque,
    linear_actuator_force,
    motor_torque_at_speed,
    pwm_effective_stall_torque,
    stall_winding_temperature,
    train_output_torque,
)
from .errors import (
    BadHeader,
    BadRow,
    DuplicateId,
    EmptyCatalog,
    FreeFall,
    Infeasible,
    InfeasibleGeometry,
    InputError,
    InvalidField,
    NoFeasibleMotor,
    NoFeasiblePoint,
    NonPositiveFriction,
    ParseError,
    SpeedOutOfRange,
    UnknownKey,
    ValidationError,
)
from .io import (
    load_scenario,
    parse_motor_catalog,
    parse_report,
    parse_scenario,
    render_report,
    render_scenario,
)
from .model import (
    AuditLimits,
    ContactModel,
    Environment,
    GeometryBounds,
    GripperGeometry,
    ObjectSpec,
    Scenario,
    SizingOptions,
    validate_scenario,
)
from .report import AnalysisReport, analyze
from .sizing import (
    AuditReport,
    MotorChoice,
    SizingRequest,
    guideline_audit,
    optimize_geometry,
    required_motor_torque,
    select_motor,
)
from .statics import (
    GraspSolution,
    TorqueSensitivities,
    crush_margin,
    equilibrium_residual,
    holding_torque,
    link_reaction_torque,
    required_normal_force,
    slip_margin,
    solve_grasp,
    torque_sensitivities,
)
from .structural import (
    FingerBeam,
    StiffnessResult,
    rect_second_moment,
    stiffness_check,
    tip_deflection,
)

__version__ = "0.1.0"
