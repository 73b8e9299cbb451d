"""Scenario, catalog and report formats.

Scenarios are JSON documents whose keys carry their SI unit
(``mass_kg``, ``arm_a_m``, ...).  Parsing is strict: unknown keys, wrong
types, NaN/Infinity and duplicate keys are all rejected.  Motor catalogs
are CSV with a fixed header.  Reports render either as canonical JSON
(sorted keys, every float as 9 significant digits in lowercase scientific
notation) or as plain text with a unit on every number.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import types
import typing
from typing import Any, Union

from .drivetrain import (
    DEFAULT_GEAR_EFFICIENCY,
    DEFAULT_PWM_DUTY,
    DEFAULT_PWM_FREQUENCY_HZ,
    GearStage,
    GearTrain,
    MotorSpec,
    PwmSettings,
    motor_issues,
)
from .errors import BadHeader, BadRow, DuplicateId, ParseError, UnknownKey
from .model import (
    DEFAULT_AMBIENT_C,
    DEFAULT_SAFETY_FACTOR,
    STANDARD_GRAVITY,
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
from .report import AnalysisReport
from .structural import ALUMINIUM_YOUNGS_MODULUS_PA, FingerBeam

CATALOG_HEADER = [
    "id",
    "name",
    "rated_voltage_v",
    "stall_torque_nm",
    "no_load_speed_rad_s",
    "stall_current_a",
    "winding_resistance_ohm",
    "thermal_resistance_k_per_w",
    "max_winding_temp_c",
    "mass_kg",
    "cost",
]
_CATALOG_NUMERIC = CATALOG_HEADER[2:]

_REQUIRED = object()


# -- JSON reading ------------------------------------------------------------


def _reject_constant(name: str):
    raise ParseError(f"{name} is not a valid number")


def _no_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ParseError("duplicate key", key=key)
        out[key] = value
    return out


def load_json(text: str) -> Any:
    try:
        return json.loads(
            text, parse_constant=_reject_constant, object_pairs_hook=_no_duplicates
        )
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


class _Reader:
    """Typed, strict access to a nested JSON mapping; records defaults used."""

    def __init__(self) -> None:
        self.defaults: dict[str, float] = {}

    def section(self, data, path: str, allowed: tuple[str, ...]) -> dict:
        if not isinstance(data, dict):
            raise ParseError("expected an object", key=path or None)
        for key in data:
            if key not in allowed:
                raise UnknownKey(_join(path, key))
        return data

    def _lookup(self, data: dict, key: str, path: str, default):
        full = _join(path, key)
        value = data.get(key)
        if value is None:
            if default is _REQUIRED:
                raise ParseError("missing required key", key=full)
            return full, None
        return full, value

    def number(self, data: dict, key: str, path: str, default=_REQUIRED, record=True):
        full, value = self._lookup(data, key, path, default)
        if value is None:
            if default is not None and record:
                self.defaults[full] = float(default)
            return default
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError("expected a number", key=full)
        return float(value)

    def integer(self, data: dict, key: str, path: str, default=_REQUIRED):
        full, value = self._lookup(data, key, path, default)
        if value is None:
            if default is not None:
                self.defaults[full] = float(default)
            return default
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError("expected an integer", key=full)
        return value

    def string(self, data: dict, key: str, path: str):
        full, value = self._lookup(data, key, path, None)
        if value is not None and not isinstance(value, str):
            raise ParseError("expected a string", key=full)
        return value

    def boolean(self, data: dict, key: str, path: str):
        full, value = self._lookup(data, key, path, None)
        if value is not None and not isinstance(value, bool):
            raise ParseError("expected true or false", key=full)
        return value

    def optional_section(self, data: dict, key: str, path: str, allowed):
        value = data.get(key)
        if value is None:
            return None
        return self.section(value, _join(path, key), allowed)


def scenario_from_data(data: Any) -> tuple[Scenario, dict[str, float]]:
    """Build and validate a scenario from decoded JSON.

    Returns the scenario and a ``{dotted.path: value}`` map of every
    default that was filled in.
    """
    rd = _Reader()
    top = rd.section(
        data,
        "",
        (
            "object", "contact", "geometry", "drivetrain", "finger",
            "environment", "limits", "gripper_mass_kg", "lift_accel_m_s2",
            "encompassing", "sizing",
        ),
    )

    if top.get("object") is None:
        raise ParseError("missing required key", key="object")
    o = rd.section(top["object"], "object", ("mass_kg", "shape", "crush_limit_n"))
    obj = ObjectSpec(
        mass_kg=rd.number(o, "mass_kg", "object"),
        shape=rd.string(o, "shape", "object"),
        crush_limit_n=rd.number(o, "crush_limit_n", "object", None),
    )

    if top.get("contact") is None:
        raise ParseError("missing required key", key="contact")
    c = rd.section(top["contact"], "contact", ("mu",))
    contact = ContactModel(mu=rd.number(c, "mu", "contact"))

    if top.get("geometry") is None:
        raise ParseError("missing required key", key="geometry")
    gm = rd.section(top["geometry"], "geometry", ("arm_a_m", "arm_b_m", "finger_length_m"))
    geometry = GripperGeometry(
        arm_a_m=rd.number(gm, "arm_a_m", "geometry"),
        arm_b_m=rd.number(gm, "arm_b_m", "geometry"),
        finger_length_m=rd.number(gm, "finger_length_m", "geometry"),
    )

    dt = rd.optional_section(top, "drivetrain", "", ("stages", "pwm")) or {}
    raw_stages = dt.get("stages") or []
    if not isinstance(raw_stages, list):
        raise ParseError("expected a list", key="drivetrain.stages")
    stages = []
    for i, raw in enumerate(raw_stages):
        p = f"drivetrain.stages[{i}]"
        st = rd.section(raw, p, ("pinion_teeth", "gear_teeth", "efficiency"))
        stages.append(
            GearStage(
                pinion_teeth=rd.integer(st, "pinion_teeth", p),
                gear_teeth=rd.integer(st, "gear_teeth", p),
                efficiency=rd.number(st, "efficiency", p, DEFAULT_GEAR_EFFICIENCY),
            )
        )
    pw = rd.optional_section(dt, "pwm", "drivetrain", ("duty", "frequency_hz")) or {}
    pwm = PwmSettings(
        duty=rd.number(pw, "duty", "drivetrain.pwm", DEFAULT_PWM_DUTY),
        frequency_hz=rd.number(pw, "frequency_hz", "drivetrain.pwm", DEFAULT_PWM_FREQUENCY_HZ),
    )

    finger = None
    fg = rd.optional_section(
        top,
        "finger",
        "",
        ("length_m", "width_m", "thickness_m", "youngs_modulus_pa", "deflection_limit_m"),
    )
    if fg is not None:
        finger = FingerBeam(
            length_m=rd.number(fg, "length_m", "finger"),
            width_m=rd.number(fg, "width_m", "finger"),
            thickness_m=rd.number(fg, "thickness_m", "finger"),
            youngs_modulus_pa=rd.number(
                fg, "youngs_modulus_pa", "finger", ALUMINIUM_YOUNGS_MODULUS_PA
            ),
            deflection_limit_m=rd.number(fg, "deflection_limit_m", "finger", None),
        )

    env = rd.optional_section(top, "environment", "", ("g_m_s2", "ambient_temp_c")) or {}
    environment = Environment(
        g_m_s2=rd.number(env, "g_m_s2", "environment", STANDARD_GRAVITY),
        ambient_temp_c=rd.number(env, "ambient_temp_c", "environment", DEFAULT_AMBIENT_C),
    )

    limits = None
    lm = rd.optional_section(
        top,
        "limits",
        "",
        ("max_gripper_mass_kg", "max_finger_length_m", "max_deflection_m"),
    )
    if lm is not None:
        limits = AuditLimits(
            max_gripper_mass_kg=rd.number(lm, "max_gripper_mass_kg", "limits", None),
            max_finger_length_m=rd.number(lm, "max_finger_length_m", "limits", None),
            max_deflection_m=rd.number(lm, "max_deflection_m", "limits", None),
        )

    sz = rd.optional_section(top, "sizing", "", ("safety_factor", "geometry_bounds")) or {}
    bounds = None
    gb = rd.optional_section(
        sz,
        "geometry_bounds",
        "sizing",
        ("a_min_m", "a_max_m", "b_min_m", "b_max_m", "a_points", "b_points"),
    )
    if gb is not None:
        p = "sizing.geometry_bounds"
        bounds = GeometryBounds(
            a_min_m=rd.number(gb, "a_min_m", p),
            a_max_m=rd.number(gb, "a_max_m", p),
            b_min_m=rd.number(gb, "b_min_m", p),
            b_max_m=rd.number(gb, "b_max_m", p),
            a_points=rd.integer(gb, "a_points", p, 11),
            b_points=rd.integer(gb, "b_points", p, 11),
        )
    sizing = SizingOptions(
        safety_factor=rd.number(sz, "safety_factor", "sizing", DEFAULT_SAFETY_FACTOR),
        geometry_bounds=bounds,
    )

    scenario = Scenario(
        object=obj,
        contact=contact,
        geometry=geometry,
        gear_train=GearTrain(tuple(stages)),
        pwm=pwm,
        finger=finger,
        environment=environment,
        limits=limits,
        gripper_mass_kg=rd.number(top, "gripper_mass_kg", "", 0.0),
        lift_accel_m_s2=rd.number(top, "lift_accel_m_s2", "", 0.0),
        encompassing=rd.boolean(top, "encompassing", ""),
        sizing=sizing,
    )
    return validate_scenario(scenario), rd.defaults


def load_scenario(text: str) -> tuple[Scenario, dict[str, float]]:
    """Parse a scenario document, also returning the defaults applied."""
    return scenario_from_data(load_json(text))


def parse_scenario(text: str) -> Scenario:
    return load_scenario(text)[0]


def scenario_to_data(s: Scenario) -> dict:
    """Inverse of :func:`scenario_from_data`, with every field explicit."""
    asdict = dataclasses.asdict
    bounds = s.sizing.geometry_bounds
    return {
        "object": asdict(s.object),
        "contact": asdict(s.contact),
        "geometry": asdict(s.geometry),
        "drivetrain": {
            "stages": [asdict(st) for st in s.gear_train.stages],
            "pwm": asdict(s.pwm),
        },
        "finger": None if s.finger is None else asdict(s.finger),
        "environment": asdict(s.environment),
        "limits": None if s.limits is None else asdict(s.limits),
        "gripper_mass_kg": s.gripper_mass_kg,
        "lift_accel_m_s2": s.lift_accel_m_s2,
        "encompassing": s.encompassing,
        "sizing": {
            "safety_factor": s.sizing.safety_factor,
            "geometry_bounds": None if bounds is None else asdict(bounds),
        },
    }


# -- canonical JSON writing --------------------------------------------------


def format_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"cannot serialise non-finite float {x!r}")
    return f"{x:.8e}"


def _encode(value: Any, level: int, out: list[str]) -> None:
    pad = "  " * (level + 1)
    if value is None:
        out.append("null")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(format_float(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, key in enumerate(sorted(value)):
            if i:
                out.append(",\n")
            out.append(pad + json.dumps(str(key), ensure_ascii=False) + ": ")
            _encode(value[key], level + 1, out)
        out.append("\n" + "  " * level + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            if i:
                out.append(",\n")
            out.append(pad)
            _encode(item, level + 1, out)
        out.append("\n" + "  " * level + "]")
    else:
        raise TypeError(f"cannot serialise {type(value).__name__}")


def dumps_canonical(data: Any) -> str:
    out: list[str] = []
    _encode(data, 0, out)
    out.append("\n")
    return "".join(out)


def to_data(obj: Any) -> Any:
    """Plain JSON-ready structure for any result dataclass."""
    if isinstance(obj, Scenario):
        return scenario_to_data(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_data(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, (list, tuple)):
        return [to_data(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): to_data(v) for k, v in obj.items()}
    return obj


def render_scenario(scenario: Scenario) -> str:
    return dumps_canonical(scenario_to_data(scenario))


# -- report reading ----------------------------------------------------------

_HINTS: dict[type, dict[str, Any]] = {}


def _hints(cls: type) -> dict[str, Any]:
    if cls not in _HINTS:
        _HINTS[cls] = typing.get_type_hints(cls)
    return _HINTS[cls]


def _from_data(tp: Any, value: Any, path: str) -> Any:
    origin = typing.get_origin(tp)
    if origin in (Union, types.UnionType):
        options = typing.get_args(tp)
        if value is None:
            if type(None) in options:
                return None
            raise ParseError("unexpected null", key=path)
        if isinstance(value, bool) and bool in options:
            return value
        for option in options:
            if option is type(None) or option is bool:
                continue
            return _from_data(option, value, path)
        raise ParseError("unexpected value", key=path)
    if tp is Scenario:
        return scenario_from_data(value)[0]
    if dataclasses.is_dataclass(tp):
        if not isinstance(value, dict):
            raise ParseError("expected an object", key=path)
        hints = _hints(tp)
        names = {f.name for f in dataclasses.fields(tp)}
        for key in value:
            if key not in names:
                raise UnknownKey(_join(path, key))
        kwargs = {}
        for name in names:
            if name not in value:
                raise ParseError("missing required key", key=_join(path, name))
            kwargs[name] = _from_data(hints[name], value[name], _join(path, name))
        return tp(**kwargs)
    if origin is tuple:
        if not isinstance(value, list):
            raise ParseError("expected a list", key=path)
        (item_tp, _) = typing.get_args(tp)
        return tuple(_from_data(item_tp, v, f"{path}[{i}]") for i, v in enumerate(value))
    if origin is dict:
        if not isinstance(value, dict):
            raise ParseError("expected an object", key=path)
        _, val_tp = typing.get_args(tp)
        return {k: _from_data(val_tp, v, _join(path, k)) for k, v in value.items()}
    if tp is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError("expected a number", key=path)
        return float(value)
    if tp is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError("expected an integer", key=path)
        return value
    if tp is bool:
        if not isinstance(value, bool):
            raise ParseError("expected true or false", key=path)
        return value
    if tp is str:
        if not isinstance(value, str):
            raise ParseError("expected a string", key=path)
        return value
    raise TypeError(f"unsupported field type {tp!r} at {path}")


def report_from_data(data: Any) -> AnalysisReport:
    return _from_data(AnalysisReport, data, "")


def parse_report(text: str) -> AnalysisReport:
    return report_from_data(load_json(text))


# -- report rendering --------------------------------------------------------


def _q(value: float | None, unit: str) -> str:
    if value is None:
        return "not evaluated"
    return f"{value:.6g} {unit}"


def _render_text(report: AnalysisReport) -> str:
    s = report.scenario
    gr = report.grasp
    dt = report.drivetrain
    lines = [
        "Scenario",
        f"  m = {_q(s.object.mass_kg, 'kg')}",
        f"  mu = {s.contact.mu:.6g} (dimensionless)",
        f"  a = {_q(s.geometry.arm_a_m, 'm')}",
        f"  b = {_q(s.geometry.arm_b_m, 'm')}",
        f"  g = {_q(s.environment.g_m_s2, 'm/s²')}",
        "",
        "Grasp",
        f"  R = {_q(gr.normal_force_n, 'N')}",
        f"  T' = {_q(gr.link_torque_nm, 'N·m')}",
        f"  T = {_q(gr.holding_torque_nm, 'N·m')}",
        f"  geometry feasible: {'yes' if gr.geometry_feasible else 'no'}",
        f"  applied R = {_q(gr.applied_normal_force_n, 'N')}",
        f"  slip margin = {_q(gr.slip_margin_n, 'N')}",
        f"  crush margin = {_q(gr.crush_margin_n, 'N')}",
        f"  dT/da = {_q(gr.sensitivities.dT_da, 'N·m/m')}",
        f"  dT/db = {_q(gr.sensitivities.dT_db, 'N·m/m')}",
        f"  dT/dmu = {_q(gr.sensitivities.dT_dmu, 'N·m')}",
    ]
    if gr.note:
        lines.append(f"  note: {gr.note}")
    lines += [
        "",
        "Drivetrain",
        f"  gear ratio = {dt.train_ratio:.6g} (dimensionless)",
        f"  train efficiency = {dt.train_efficiency:.6g} (fraction)",
        f"  safety factor = {dt.safety_factor:.6g} (dimensionless)",
        f"  target output torque = {_q(dt.target_output_torque_nm, 'N·m')}",
        f"  required motor torque = {_q(dt.required_motor_torque_nm, 'N·m')}",
        f"  PWM duty = {dt.pwm_duty:.6g} (fraction)",
        f"  lift actuator force = {_q(report.actuator_force_n, 'N')}",
        "",
        "Motor",
        f"  {report.motor_status}",
    ]
    if report.motor is not None:
        mc = report.motor
        lines += [
            f"  derated stall torque = {_q(mc.effective_torque_nm, 'N·m')}",
            f"  torque margin = {_q(mc.margin_nm, 'N·m')}",
            f"  stall winding temperature = {_q(mc.thermal.steady_temp_c, '°C')}"
            f" (limit {_q(mc.motor.max_winding_temp_c, '°C')})",
            f"  mass = {_q(mc.motor.mass_kg, 'kg')}",
        ]
    lines += ["", "Finger"]
    st = report.structural
    if st is None:
        lines.append("  not evaluated: no finger beam configured")
    else:
        lines += [
            f"  load = {_q(st.force_n, 'N')}",
            f"  tip deflection = {_q(st.deflection_m, 'm')}",
            f"  stiffness = {_q(st.stiffness_n_per_m, 'N/m')}",
            f"  deflection limit = {_q(st.deflection_limit_m, 'm')}",
        ]
    lines += ["", "Guideline audit"]
    for e in report.audit.entries:
        lines.append(f"  {e.guideline}. {e.title}: {e.status} ({e.note})")
    if report.infeasible:
        lines += ["", "Infeasible: " + ", ".join(report.infeasible)]
    prov = report.provenance
    if prov.defaults_applied or prov.notes:
        lines += ["", "Provenance"]
        for key in sorted(prov.defaults_applied):
            lines.append(f"  default {key} = {prov.defaults_applied[key]:.6g}")
        for note in prov.notes:
            lines.append(f"  {note}")
    return "\n".join(lines) + "\n"


def render_report(report: AnalysisReport, format: str = "text") -> str:
    if format == "json":
        return dumps_canonical(to_data(report))
    if format == "text":
        return _render_text(report)
    raise ValueError(f"unknown format {format!r}")


# -- motor catalogs ----------------------------------------------------------


def parse_motor_catalog(text: str) -> list[MotorSpec]:
    """One validated :class:`MotorSpec` per CSV data row."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    found = [c.strip() for c in header] if header is not None else []
    if found != CATALOG_HEADER:
        raise BadHeader(found, CATALOG_HEADER)
    motors: list[MotorSpec] = []
    seen: set[str] = set()
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(CATALOG_HEADER):
            raise BadRow(line, f"expected {len(CATALOG_HEADER)} columns, got {len(row)}")
        cells = dict(zip(CATALOG_HEADER, (c.strip() for c in row)))
        values = {}
        for key in _CATALOG_NUMERIC:
            try:
                values[key] = float(cells[key])
            except ValueError:
                raise BadRow(line, f"{key}: {cells[key]!r} is not a number") from None
        motor = MotorSpec(id=cells["id"], name=cells["name"], **values)
        issues = motor_issues(motor)
        if issues:
            raise BadRow(line, "; ".join(str(i) for i in issues))
        if motor.id in seen:
            raise DuplicateId(motor.id)
        seen.add(motor.id)
        motors.append(motor)
    return motors


def render_motor_catalog(motors: list[MotorSpec]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CATALOG_HEADER)
    for m in motors:
        writer.writerow(
            [m.id, m.name] + [repr(float(getattr(m, key))) for key in _CATALOG_NUMERIC]
        )
    return buf.getvalue()
