import json
import math
import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gripsize import (
    GearStage,
    ObjectSpec,
    analyze,
    load_scenario,
    parse_motor_catalog,
    parse_report,
    parse_scenario,
    render_report,
    render_scenario,
)
from gripsize import BadHeader, BadRow, DuplicateId, ParseError, UnknownKey, ValidationError
from gripsize.io import CATALOG_HEADER, render_motor_catalog, to_data

from conftest import make_motor, make_scenario

MINIMAL = {
    "object": {"mass_kg": 2},
    "contact": {"mu": 0.4},
    "geometry": {"arm_a_m": 0.05, "arm_b_m": 0.07, "finger_length_m": 0.1},
    "drivetrain": {"stages": [{"pinion_teeth": 12, "gear_teeth": 48}]},
}
HEADER = ",".join(CATALOG_HEADER)
ROW_12V = "M1,can motor,12,1.2,250,2,3,10,130,0.3,14"


def doc(**changes):
    d = json.loads(json.dumps(MINIMAL))
    d.update(changes)
    return json.dumps(d)


class TestParseScenario:
    def test_minimal_gets_defaults(self):
        s, defaults = load_scenario(json.dumps(MINIMAL))
        assert s.environment.g_m_s2 == 9.80665
        assert s.sizing.safety_factor == 1.5
        assert s.gear_train.stages == (GearStage(12, 48, 0.9),)
        assert s.object.mass_kg == 2.0 and isinstance(s.object.mass_kg, float)
        assert defaults["environment.g_m_s2"] == 9.80665
        assert defaults["sizing.safety_factor"] == 1.5
        assert defaults["drivetrain.stages[0].efficiency"] == 0.9
        assert defaults["drivetrain.pwm.duty"] == 1.0

    def test_missing_required_key(self):
        d = json.loads(json.dumps(MINIMAL))
        del d["object"]["mass_kg"]
        with pytest.raises(ParseError) as ei:
            parse_scenario(json.dumps(d))
        assert ei.value.key == "object.mass_kg"

    def test_missing_section(self):
        d = json.loads(json.dumps(MINIMAL))
        del d["contact"]
        with pytest.raises(ParseError) as ei:
            parse_scenario(json.dumps(d))
        assert ei.value.key == "contact"

    def test_unit_suffix_typo_is_unknown(self):
        with pytest.raises(UnknownKey) as ei:
            parse_scenario(doc(object={"mass_g": 2000}))
        assert ei.value.key == "object.mass_g"

    def test_unknown_top_level_key(self):
        with pytest.raises(UnknownKey):
            parse_scenario(doc(colour="red"))

    def test_syntax_error_reports_line(self):
        with pytest.raises(ParseError) as ei:
            parse_scenario('{\n  "object": {"mass_kg": 2,}\n}')
        assert ei.value.line == 2

    @pytest.mark.parametrize(
        "text",
        [
            '{"object": {"mass_kg": NaN}}',
            '{"object": {"mass_kg": 1, "mass_kg": 2}}',
        ],
    )
    def test_rejects_nan_and_duplicates(self, text):
        with pytest.raises(ParseError):
            parse_scenario(text)

    def test_wrong_types(self):
        with pytest.raises(ParseError) as ei:
            parse_scenario(doc(contact={"mu": "0.4"}))
        assert ei.value.key == "contact.mu"
        with pytest.raises(ParseError):
            parse_scenario(doc(drivetrain={"stages": [{"pinion_teeth": 12.0, "gear_teeth": 48}]}))
        with pytest.raises(ParseError):
            parse_scenario(doc(encompassing="yes"))

    def test_invariants_propagate(self):
        with pytest.raises(ValidationError) as ei:
            parse_scenario(doc(contact={"mu": 0}))
        assert [f.path for f in ei.value.fields] == ["contact.mu"]

    def test_sample_round_trip(self, sample_dir):
        s = parse_scenario((sample_dir / "s1.json").read_text())
        assert parse_scenario(render_scenario(s)) == s

    def test_programmatic_round_trip(self, full_scenario):
        assert parse_scenario(render_scenario(full_scenario)) == full_scenario


def _nine(x: float) -> float:
    return float(f"{x:.8e}")


nine_digit = lambda lo, hi: st.floats(lo, hi).map(_nine).filter(lambda v: lo <= v <= hi)


@settings(max_examples=100)
@given(
    nine_digit(0.01, 50.0),
    nine_digit(0.05, 2.0),
    nine_digit(0.005, 0.3),
    nine_digit(0.005, 0.3),
    st.lists(
        st.builds(GearStage, st.integers(8, 30), st.integers(8, 120), nine_digit(0.5, 1.0)),
        max_size=3,
    ),
    st.one_of(st.none(), nine_digit(1.0, 500.0)),
    st.one_of(st.none(), st.booleans()),
)
def test_scenario_json_round_trip(m, mu, a, b, stages, crush, enc):
    s = make_scenario(
        object=ObjectSpec(m, "cylinder", crush), mu=mu, a=a, b=b, stages=stages, encompassing=enc
    )
    assert parse_scenario(render_scenario(s)) == s


class TestCatalog:
    def test_single_row(self):
        motors = parse_motor_catalog(f"{HEADER}\n{ROW_12V}\n")
        assert len(motors) == 1
        assert motors[0].rated_voltage_v == 12.0
        assert motors[0].id == "M1" and motors[0].name == "can motor"

    def test_header_only(self):
        assert parse_motor_catalog(HEADER + "\n") == []

    def test_negative_stall_torque(self):
        with pytest.raises(BadRow) as ei:
            parse_motor_catalog(f"{HEADER}\nM1,x,12,-1,250,2,3,10,130,0.3,14\n")
        assert ei.value.line_number == 2

    def test_injected_bad_row_line_number(self):
        rows = [HEADER, ROW_12V, ROW_12V.replace("M1", "M2"), "", "M3,x,12,1,250,2,3,10,oops,0.3,1"]
        with pytest.raises(BadRow) as ei:
            parse_motor_catalog("\n".join(rows) + "\n")
        assert ei.value.line_number == 5

    def test_column_count(self):
        with pytest.raises(BadRow) as ei:
            parse_motor_catalog(f"{HEADER}\nM1,12,1.2\n")
        assert ei.value.line_number == 2

    @pytest.mark.parametrize("header", ["", "id,name", HEADER.replace("cost", "price")])
    def test_bad_header(self, header):
        with pytest.raises(BadHeader):
            parse_motor_catalog(header + "\n" + ROW_12V)

    def test_duplicate_id(self):
        with pytest.raises(DuplicateId) as ei:
            parse_motor_catalog(f"{HEADER}\n{ROW_12V}\n{ROW_12V}\n")
        assert ei.value.id == "M1"

    def test_render_round_trip(self):
        motors = [make_motor("A", stall=0.3333333333333333), make_motor("B", name="big one")]
        assert parse_motor_catalog(render_motor_catalog(motors)) == motors


FLOAT_TOKEN = re.compile(r"-?\d+\.\d{8}e[+-]\d{2}")


def _close(x, y) -> bool:
    """Structural equality with floats compared at the 9-digit rendering precision."""
    if isinstance(x, float) and isinstance(y, float):
        return math.isclose(x, y, rel_tol=1e-8, abs_tol=1e-300)
    if isinstance(x, dict) and isinstance(y, dict):
        return x.keys() == y.keys() and all(_close(x[k], y[k]) for k in x)
    if isinstance(x, list) and isinstance(y, list):
        return len(x) == len(y) and all(_close(a, b) for a, b in zip(x, y))
    return x == y


class TestReport:
    @pytest.fixture
    def report(self, full_scenario):
        catalog = [make_motor("A", stall=2.0, mass=0.2), make_motor("B", stall=0.3, mass=0.1)]
        return analyze(full_scenario, catalog, defaults_applied={"environment.ambient_temp_c": 25.0})

    def test_json_round_trip(self, report):
        text = render_report(report, "json")
        back = parse_report(text)
        assert _close(to_data(back), to_data(report))
        assert parse_report(render_report(back, "json")) == back
        assert render_report(back, "json") == text

    def test_rendered_report_is_a_fixed_point(self, s1):
        once = parse_report(render_report(analyze(s1), "json"))
        assert parse_report(render_report(once, "json")) == once
        assert once.scenario == s1

    def test_deterministic(self, report):
        assert render_report(report, "json") == render_report(report, "json")
        assert render_report(report, "text") == render_report(report, "text")

    def test_canonical_form(self, report):
        text = render_report(report, "json")
        data = json.loads(text)
        assert list(data) == sorted(data)
        # every non-integer number token is 9 significant digits, lowercase exponent
        for tok in re.findall(r":\s(-?[\d.eE+-]+)[,\n]", text):
            assert FLOAT_TOKEN.fullmatch(tok) or tok.lstrip("-").isdigit(), tok

    def test_text_form(self, s1):
        text = render_report(analyze(s1), "text")
        assert "T = 2.4525 N·m" in text
        assert "R = 24.525 N" in text
        assert "T' = 1.22625 N·m" in text

    def test_unknown_format(self, report):
        with pytest.raises(ValueError):
            render_report(report, "xml")

    def test_provenance_lists_parse_defaults(self):
        s, defaults = load_scenario(json.dumps(MINIMAL))
        report = analyze(s, defaults_applied=defaults)
        data = json.loads(render_report(report, "json"))
        applied = data["provenance"]["defaults_applied"]
        for key in defaults:
            assert key in applied
        assert "drivetrain.stages[0].efficiency" in applied

    def test_safety_factor_override_replaces_default(self):
        s, defaults = load_scenario(json.dumps(MINIMAL))
        report = analyze(s, safety_factor=2.0, defaults_applied=defaults)
        assert "sizing.safety_factor" not in report.provenance.defaults_applied
        assert report.drivetrain.safety_factor == 2.0

    def test_self_locking_report(self):
        report = analyze(make_scenario(mu=0.8, b=0.02), [make_motor()])
        assert report.infeasible == ("InfeasibleGeometry",)
        assert report.drivetrain.required_motor_torque_nm is None
        assert report.motor is None
        assert _close(to_data(parse_report(render_report(report, "json"))), to_data(report))
