import pytest
import json
from datetime import datetime
from src.config import config
from src.container import Container
from src.diophantine.errors import CoefficientTooLargeError, NotCoprimeError, NotSquareFreeError
from src.diophantine.models import (
    GeneralEquation,
    LegendreConditions,
    NormalConditions,
    NormalEquation,
    Solution,
)

@pytest.fixture
def container():
    return Container()

@pytest.fixture
def output_dir(tmp_path, mocker):
    mocker.patch.object(config.directories, "output_dir", tmp_path / "output")
    return tmp_path / "output"

def test_max_coeff_defaults_to_config(mocker):
    mocker.patch.object(config.solver, "max_coeff", 50)
    assert Container().max_coeff == 50
    assert Container(max_coeff=7).max_coeff == 7

def test_parse_equation(container):
    assert container.parse_equation(17, 13) == NormalEquation(a=17, b=13)
    assert container.parse_equation(3, 5, -2) == GeneralEquation(a=3, b=5, c=-2)

def test_parse_equation_rejects(container):
    with pytest.raises(NotSquareFreeError):
        container.parse_equation(4, 3)
    with pytest.raises(NotCoprimeError):
        container.parse_equation(6, 10, -1)
    with pytest.raises(CoefficientTooLargeError):
        Container(max_coeff=10).parse_equation(17, 13)

def test_solve(container):
    result = container.solve(container.parse_equation(17, 13))
    assert result.solution == Solution(x=1, y=4, z=15)
    result = container.solve(container.parse_equation(1, 1, -3))
    assert not result.solvable

def test_check_normal(container):
    conditions = container.check(NormalEquation(a=3, b=13))
    assert isinstance(conditions, NormalConditions)
    assert conditions.holds

def test_check_general_uses_canonical_form(container):
    conditions = container.check(GeneralEquation(a=-5, b=2, c=-3))
    assert isinstance(conditions, LegendreConditions)
    assert conditions.a > 0 and conditions.b > 0 and conditions.c < 0
    assert conditions.holds

def test_verify_primitive(container):
    ok, witnesses = container.verify(NormalEquation(a=17, b=13), 1, -4, 15)
    assert ok
    assert witnesses.a_mod_b.verifies()
    assert witnesses.b_mod_a.verifies()

def test_verify_non_primitive(container):
    assert container.verify(NormalEquation(a=17, b=13), 3, 12, 45) == (True, None)

def test_verify_rejects(container):
    assert container.verify(NormalEquation(a=17, b=13), 1, 4, 16) == (False, None)
    assert container.verify(NormalEquation(a=17, b=13), 0, 0, 0) == (False, None)

def test_verify_general(container):
    ok, witnesses = container.verify(GeneralEquation(a=3, b=5, c=-2), 1, 1, 2)
    assert ok
    assert isinstance(witnesses, LegendreConditions)

def test_load_schema_and_validate(container):
    schema = container.load_schema()
    assert schema["title"] == "Solve report"
    eq = NormalEquation(a=3, b=13)
    report = container.build_report(eq, container.solve(eq))
    assert container.validate_report(report, schema)
    assert not container.validate_report({"result": "solvable"}, schema)

def test_save_report(container, output_dir):
    eq = NormalEquation(a=17, b=13)
    report = container.build_report(eq, container.solve(eq))
    path = container.save_report(report, timestamp=datetime(2024, 1, 15, 10, 30, 0))

    assert path == output_dir / "report_17_13_20240115_103000.json"
    with open(path, encoding="utf-8") as f:
        assert json.load(f) == report

def test_save_report_stamps_in_configured_timezone(container, output_dir):
    eq = GeneralEquation(a=3, b=5, c=-2)
    report = container.build_report(eq, container.solve(eq))
    path = container.save_report(report)
    assert path.parent == output_dir
    assert path.name.startswith("report_3_5_-2_")
    assert path.exists()
