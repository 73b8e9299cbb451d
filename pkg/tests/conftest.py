import time
from pathlib import Path

import pytest

from gripsize import (
    AuditLimits,
    ContactModel,
    Environment,
    FingerBeam,
    GearStage,
    GearTrain,
    GripperGeometry,
    MotorSpec,
    ObjectSpec,
    PwmSettings,
    Scenario,
)

SAMPLE_DIR = Path(__file__).resolve().parent.parent / "sample"


def make_scenario(
    m=2.0, mu=0.4, a=0.05, b=0.07, g=9.81, *, stages=(), duty=1.0, **kwargs
) -> Scenario:
    return Scenario(
        object=kwargs.pop("object", ObjectSpec(mass_kg=m)),
        contact=ContactModel(mu=mu),
        geometry=kwargs.pop("geometry", GripperGeometry(a, b, 0.1)),
        gear_train=GearTrain(tuple(stages)),
        pwm=PwmSettings(duty=duty),
        environment=Environment(g_m_s2=g),
        **kwargs,
    )


def make_motor(id="M", stall=1.2, mass=0.2, cost=10.0, **kw) -> MotorSpec:
    fields = dict(
        rated_voltage_v=12.0,
        stall_torque_nm=stall,
        no_load_speed_rad_s=300.0,
        stall_current_a=2.0,
        winding_resistance_ohm=3.0,
        thermal_resistance_k_per_w=10.0,
        max_winding_temp_c=155.0,
        mass_kg=mass,
        cost=cost,
    )
    fields.update(kw)
    return MotorSpec(id=id, **fields)


@pytest.fixture
def s1() -> Scenario:
    """m = 2 kg, mu = 0.4, a = 50 mm, b = 70 mm, g = 9.81."""
    return make_scenario()


@pytest.fixture
def full_scenario() -> Scenario:
    return make_scenario(
        object=ObjectSpec(mass_kg=2.0, shape="cuboid", crush_limit_n=50.0),
        stages=[GearStage(12, 48, 0.9)],
        finger=FingerBeam(0.1, 0.01, 0.003, deflection_limit_m=0.01),
        limits=AuditLimits(max_gripper_mass_kg=1.0, max_finger_length_m=0.12),
        gripper_mass_kg=0.8,
        encompassing=True,
    )


@pytest.fixture
def sample_dir() -> Path:
    return SAMPLE_DIR


# -- acceptance reporting -----------------------------------------------------

SUITE_BUDGET_S = 30.0
_criteria: dict[int, tuple[str, str]] = {}
_session_start = time.perf_counter()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, text = marker.args
    _criteria[n] = (text, "PASS" if call.excinfo is None else "FAIL")


def _suite_runtime() -> float:
    return time.perf_counter() - _session_start


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        text, verdict = _criteria[n]
        tr.write_line(f"criterion {n:>2}: {verdict}  {text}")
    elapsed = _suite_runtime()
    verdict = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
    tr.write_line(f"criterion 10: {verdict}  (suite runtime) full suite ran in {elapsed:.1f} s (< {SUITE_BUDGET_S:g} s)")


def pytest_sessionfinish(session, exitstatus):
    if _criteria and _suite_runtime() >= SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1
