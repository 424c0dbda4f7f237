"""JSON reports for solve results.

All integers are serialized as decimal strings. A report can be checked
against schemas/report.schema.json and re-verified from its parsed form
without access to the solver.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import jsonschema

from src.logging_config import get_logger
from src.diophantine.arith import prime_factors
from src.diophantine.descent import lift_components
from src.diophantine.models import (
    BaseCase,
    DescentTrace,
    GeneralEquation,
    LegendreConditions,
    NoSolution,
    NormalConditions,
    NormalEquation,
    ReductionStep,
    Side,
    Solution,
    SolveResult,
)
from src.diophantine.oracle import residue_table
from src.diophantine.residues import is_square_mod
from src.diophantine.solutions import evaluate, is_primitive

logger = get_logger("cli")

Equation = Union[NormalEquation, GeneralEquation]


def _s(value: int) -> str:
    return str(value)


def _triple(solution: Solution) -> List[str]:
    return [_s(v) for v in solution.as_tuple()]


def equation_dict(eq: Equation) -> Dict[str, str]:
    data = {"a": _s(eq.a), "b": _s(eq.b)}
    if isinstance(eq, GeneralEquation):
        data["c"] = _s(eq.c)
    return data


def _step_entry(step: ReductionStep, lifted: Solution) -> Dict[str, Any]:
    a, b = step.after
    cond = step.conditions
    return {
        "i": _s(step.index),
        "side": step.side.value,
        "root": _s(step.root),
        "h": _s(step.h),
        "k": _s(step.k),
        "A": _s(a),
        "B": _s(b),
        "lifted": _triple(lifted),
        "witnesses": {
            "norm1": _s(cond.a_mod_b.root),
            "norm2": _s(cond.b_mod_a.root),
            "norm3": _s(cond.neg_ab_mod_d.root),
            "d": _s(cond.d),
        },
    }


def trace_entries(trace: DescentTrace) -> List[Dict[str, Any]]:
    """Entry i carries the solution of E_{i-1} obtained by lifting through step i."""
    return [_step_entry(step, trace.lifted[i]) for i, step in enumerate(trace.steps)]


def _failure_dict(result: NoSolution, with_tables: bool) -> Dict[str, Any]:
    failure = result.failure
    data: Dict[str, Any] = {
        "condition": failure.condition,
        "value": _s(failure.value),
        "modulus": _s(failure.modulus),
        "message": failure.message,
    }
    if failure.prime is not None:
        data["prime"] = _s(failure.prime)
    if with_tables:
        data["residue_tables"] = [
            {
                "prime": _s(p),
                "value_residue": _s(failure.value % p),
                "residues": [_s(r) for r in sorted(residue_table(p))],
            }
            for p in prime_factors(failure.modulus)
        ]
    return data


def build_report(eq: Equation, result: SolveResult, residue_tables: bool = False) -> Dict[str, Any]:
    report: Dict[str, Any] = {
        "equation": equation_dict(eq),
        "form": "general" if isinstance(eq, GeneralEquation) else "normal",
    }
    if isinstance(result, NoSolution):
        report["result"] = "no_solution"
        report["failed_condition"] = _failure_dict(result, residue_tables)
        return report

    trace = result.trace
    report.update({
        "result": "solvable",
        "solution": _triple(result.solution),
        "raw_solution": _triple(trace.raw_solution),
        "bound": _s(trace.bound),
        "length": _s(trace.length),
        "base_case": trace.base_case.value,
        "base_solution": _triple(trace.base_solution),
        "trace": trace_entries(trace),
    })
    if isinstance(eq, GeneralEquation):
        report["normal_equation"] = equation_dict(trace.equation)
    return report


def build_invalid_report(equation: Dict[str, Any], error: Exception) -> Dict[str, Any]:
    return {
        "equation": {k: _s(v) for k, v in equation.items() if v is not None},
        "form": "general" if equation.get("c") is not None else "normal",
        "result": "invalid",
        "error": str(error),
    }


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2)


def load_json_schema(schema_path: Union[str, Path]) -> dict:
    """Load a JSON schema from a file."""
    try:
        with open(schema_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except Exception as e:
        logger.error(f"Failed to load schema from {schema_path}: {e}")
        raise


def validate_report(report: Dict[str, Any], schema: dict) -> bool:
    """Validate a report against the JSON schema."""
    try:
        jsonschema.validate(instance=report, schema=schema)
        return True
    except jsonschema.exceptions.ValidationError as e:
        logger.error(f"Report validation failed: {e.message}")
        return False


def _ints(values: List[str]) -> Tuple[int, ...]:
    return tuple(int(v) for v in values)


def _check_solvable(report: Dict[str, Any]) -> List[str]:
    problems: List[str] = []
    eq = report["equation"]
    coefficients = parse_equation(eq).coefficients()
    normal = parse_equation(report.get("normal_equation", eq))
    a, b = normal.a, normal.b

    solution = _ints(report["solution"])
    if not any(solution) or evaluate(coefficients, solution) != 0:
        problems.append(f"solution {solution} does not solve the equation")
    elif not is_primitive(Solution(x=solution[0], y=solution[1], z=solution[2])):
        problems.append(f"solution {solution} is not primitive")

    entries = report["trace"]
    lifted = [_ints(entry["lifted"]) for entry in entries] + [_ints(report["base_solution"])]
    if lifted[0] != _ints(report["raw_solution"]):
        problems.append("raw_solution differs from the first lifted solution")
    if int(report["length"]) != len(entries):
        problems.append(f"length {report['length']} but {len(entries)} trace entries")
    if max(lifted[0]) > int(report["bound"]):
        problems.append(f"raw solution {lifted[0]} exceeds bound {report['bound']}")

    for n, entry in enumerate(entries):
        side = Side(entry["side"])
        root, h, k = int(entry["root"]), int(entry["h"]), int(entry["k"])
        new_a, new_b = int(entry["A"]), int(entry["B"])
        if side is Side.REDUCE_A:
            carried, partner, new, kept = a, b, new_a, new_b
        else:
            carried, partner, new, kept = b, a, new_b, new_a
        label = f"step {entry['i']}"

        if kept != partner:
            problems.append(f"{label}: kept coefficient changed")
        if k * carried != root * root - partner or k != h * h * new:
            problems.append(f"{label}: {root}^2 - {partner} != {h}^2*{new}*{carried}")
        if 4 * new * h >= carried:
            problems.append(f"{label}: no contraction")
        if evaluate((a, b, -1), lifted[n]) != 0:
            problems.append(f"{label}: lifted {lifted[n]} does not solve ({a}, {b})")
        if lift_components(side, root, h, new, partner, lifted[n + 1]) != lifted[n]:
            problems.append(f"{label}: lifted {lifted[n]} is not the lift of {lifted[n + 1]}")

        w = entry["witnesses"]
        d = int(w["d"])
        if d != math.gcd(new_a, new_b):
            problems.append(f"{label}: d is not gcd({new_a}, {new_b})")
        for value, modulus, root_w in (
            (new_a, new_b, w["norm1"]),
            (new_b, new_a, w["norm2"]),
            (-(new_a // d) * (new_b // d), d, w["norm3"]),
        ):
            if (int(root_w) ** 2 - value) % modulus:
                problems.append(f"{label}: witness {root_w} does not certify {value} R {modulus}")
        a, b = new_a, new_b

    base_case = BaseCase(report["base_case"])
    expected = {BaseCase.A_IS_ONE: a == 1, BaseCase.B_IS_ONE: b == 1, BaseCase.EQUAL: a == b}
    if not expected[base_case]:
        problems.append(f"base case {base_case.value} does not match ({a}, {b})")
    if evaluate((a, b, -1), lifted[-1]) != 0:
        problems.append(f"base solution {lifted[-1]} does not solve ({a}, {b})")
    return problems


def report_problems(report: Dict[str, Any]) -> List[str]:
    """Re-verify every step, lift and certificate of a parsed report."""
    result = report.get("result")
    if result == "solvable":
        return _check_solvable(report)
    if result == "no_solution":
        failure = report["failed_condition"]
        value, modulus = int(failure["value"]), int(failure["modulus"])
        if is_square_mod(value, modulus):
            return [f"{failure['condition']}: {value} is a square mod {modulus}"]
        return []
    return [f"nothing to verify for result {result!r}"]


def verify_report(report: Dict[str, Any]) -> bool:
    problems = report_problems(report)
    for problem in problems:
        logger.error(f"Report verification failed: {problem}")
    return not problems


def parse_equation(data: Dict[str, Any]) -> Equation:
    """Equation from a {"a", "b"[, "c"]} mapping of ints or decimal strings."""
    a, b = int(data["a"]), int(data["b"])
    if data.get("c") is None:
        return NormalEquation(a=a, b=b)
    return GeneralEquation(a=a, b=b, c=int(data["c"]))


def condition_rows(conditions: Union[NormalConditions, LegendreConditions]) -> List[Dict[str, Any]]:
    """One row per condition: name, value, modulus and the witness root if it holds."""
    if isinstance(conditions, NormalConditions):
        a, b, d = conditions.a, conditions.b, conditions.d
        rows = [
            ("Norm.1", a, b, conditions.a_mod_b),
            ("Norm.2", b, a, conditions.b_mod_a),
            ("Norm.3", -(a // d) * (b // d), d, conditions.neg_ab_mod_d),
        ]
    else:
        a, b, c = conditions.a, conditions.b, conditions.c
        rows = [
            ("Leg.1", -a * b, abs(c), conditions.neg_ab_mod_c),
            ("Leg.2", -b * c, abs(a), conditions.neg_bc_mod_a),
            ("Leg.3", -a * c, abs(b), conditions.neg_ac_mod_b),
        ]
    return [
        {
            "condition": name,
            "value": _s(value),
            "modulus": _s(modulus),
            "holds": witness is not None,
            "root": _s(witness.root) if witness is not None else None,
        }
        for name, value, modulus, witness in rows
    ]
