"""Validated SI domain types and scenario validation.

Every quantity is SI: kg, m, s, N, N*m, rad/s, W, with temperatures in
degrees Celsius.  Field names carry their unit suffix.  The dataclasses are
frozen but do not validate on construction; :func:`validate_scenario`
checks a whole :class:`Scenario` and reports every violation at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._checks import Checker, is_finite_number
from .drivetrain import GearTrain, PwmSettings, check_gear_train, check_pwm
from .structural import FingerBeam, check_finger_beam

STANDARD_GRAVITY = 9.80665
DEFAULT_AMBIENT_C = 25.0
DEFAULT_SAFETY_FACTOR = 1.5
MAX_FRICTION_COEFFICIENT = 2.0
SHAPES = ("cuboid", "cylinder")


@dataclass(frozen=True)
class ObjectSpec:
    """The grasped object. ``mass_kg`` excludes fingers and end effectors."""

    mass_kg: float
    shape: str | None = None
    crush_limit_n: float | None = None


@dataclass(frozen=True)
class ContactModel:
    mu: float


@dataclass(frozen=True)
class GripperGeometry:
    """Moment arms about the finger pivot and the free finger length.

    ``arm_a_m`` is the lever of the tangential friction force, ``arm_b_m``
    the lever of the normal reaction.
    """

    arm_a_m: float
    arm_b_m: float
    finger_length_m: float


@dataclass(frozen=True)
class Environment:
    g_m_s2: float = STANDARD_GRAVITY
    ambient_temp_c: float = DEFAULT_AMBIENT_C


@dataclass(frozen=True)
class AuditLimits:
    max_gripper_mass_kg: float | None = None
    max_finger_length_m: float | None = None
    max_deflection_m: float | None = None


@dataclass(frozen=True)
class GeometryBounds:
    """Search box for the moment arms, sampled on an inclusive grid."""

    a_min_m: float
    a_max_m: float
    b_min_m: float
    b_max_m: float
    a_points: int = 11
    b_points: int = 11


@dataclass(frozen=True)
class SizingOptions:
    safety_factor: float = DEFAULT_SAFETY_FACTOR
    geometry_bounds: GeometryBounds | None = None


@dataclass(frozen=True)
class Scenario:
    object: ObjectSpec
    contact: ContactModel
    geometry: GripperGeometry
    gear_train: GearTrain = field(default_factory=GearTrain)
    pwm: PwmSettings = field(default_factory=PwmSettings)
    finger: FingerBeam | None = None
    environment: Environment = field(default_factory=Environment)
    limits: AuditLimits | None = None
    gripper_mass_kg: float = 0.0
    lift_accel_m_s2: float = 0.0
    # Declared by the user; a point-contact model cannot infer it.
    encompassing: bool | None = None
    sizing: SizingOptions = field(default_factory=SizingOptions)


def _check_optional_positive(chk: Checker, path: str, value) -> None:
    if value is not None:
        chk.positive(path, value)


def check_bounds(chk: Checker, bounds: GeometryBounds, prefix: str) -> None:
    for axis in ("a", "b"):
        lo = getattr(bounds, f"{axis}_min_m")
        hi = getattr(bounds, f"{axis}_max_m")
        chk.positive(f"{prefix}.{axis}_min_m", lo)
        chk.positive(f"{prefix}.{axis}_max_m", hi)
        if is_finite_number(lo) and is_finite_number(hi) and not lo < hi:
            chk.fail(f"{prefix}.{axis}_max_m", f"must be > {axis}_min_m")
        chk.integer_at_least(f"{prefix}.{axis}_points", getattr(bounds, f"{axis}_points"), 2)


def validate_scenario(raw: Scenario) -> Scenario:
    """Check every invariant of ``raw`` and return it unchanged.

    Raises:
        ValidationError: listing each violated field, never clamping.
    """
    chk = Checker()

    obj = raw.object
    chk.positive("object.mass_kg", obj.mass_kg)
    if obj.shape is not None and obj.shape not in SHAPES:
        chk.fail("object.shape", f"must be one of {', '.join(SHAPES)}")
    _check_optional_positive(chk, "object.crush_limit_n", obj.crush_limit_n)

    mu = raw.contact.mu
    chk.within("contact.mu", mu, 0.0, MAX_FRICTION_COEFFICIENT, lo_open=True)

    geo = raw.geometry
    chk.positive("geometry.arm_a_m", geo.arm_a_m)
    chk.positive("geometry.arm_b_m", geo.arm_b_m)
    chk.positive("geometry.finger_length_m", geo.finger_length_m)

    check_gear_train(chk, raw.gear_train, "drivetrain")
    check_pwm(chk, raw.pwm, "drivetrain.pwm")

    if raw.finger is not None:
        check_finger_beam(chk, raw.finger, "finger")

    env = raw.environment
    g_ok = chk.number("environment.g_m_s2", env.g_m_s2)
    if g_ok and not env.g_m_s2 > 0:
        chk.fail("environment.g_m_s2", "must be > 0")
        g_ok = False
    chk.number("environment.ambient_temp_c", env.ambient_temp_c)

    if raw.limits is not None:
        lim = raw.limits
        _check_optional_positive(chk, "limits.max_gripper_mass_kg", lim.max_gripper_mass_kg)
        _check_optional_positive(chk, "limits.max_finger_length_m", lim.max_finger_length_m)
        _check_optional_positive(chk, "limits.max_deflection_m", lim.max_deflection_m)

    chk.non_negative("gripper_mass_kg", raw.gripper_mass_kg)
    if g_ok:
        chk.greater("lift_accel_m_s2", raw.lift_accel_m_s2, -env.g_m_s2, "-environment.g_m_s2")
    else:
        chk.number("lift_accel_m_s2", raw.lift_accel_m_s2)

    if raw.encompassing is not None and not isinstance(raw.encompassing, bool):
        chk.fail("encompassing", "must be true, false or absent")

    chk.at_least("sizing.safety_factor", raw.sizing.safety_factor, 1.0)
    if raw.sizing.geometry_bounds is not None:
        check_bounds(chk, raw.sizing.geometry_bounds, "sizing.geometry_bounds")

    chk.raise_if_any()
    return raw
