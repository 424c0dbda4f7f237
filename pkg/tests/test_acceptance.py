"""Exhaustive sweeps of the solver against the brute-force oracle."""

import itertools

import pytest
from src.diophantine.arith import ceil_log4, is_squarefree
from src.diophantine.descent import check_normal_conditions, solve_normal
from src.diophantine.legendre import extract_necessity_witnesses, make_primitive, solve_general, validate_input
from src.diophantine.errors import InvalidInputError
from src.diophantine.models import GeneralEquation, NormalEquation
from src.diophantine.oracle import brute_force_general, brute_force_normal
from src.diophantine.solutions import evaluate, is_primitive

pytestmark = pytest.mark.slow

# A solvable equation has a solution with every component at most the
# square root of the product of the other two coefficients.
NORMAL_LIMIT = 60
GENERAL_LIMIT = 20

SQUAREFREE = [n for n in range(1, 61) if is_squarefree(n)]


def _valid_triples():
    values = [n for n in range(-20, 21) if n and is_squarefree(abs(n))]
    for a, b, c in itertools.product(values, repeat=3):
        try:
            yield validate_input(GeneralEquation(a=a, b=b, c=c))
        except InvalidInputError:
            continue


@pytest.mark.parametrize("a", SQUAREFREE)
def test_normal_sweep(a):
    for b in SQUAREFREE:
        eq = NormalEquation(a=a, b=b)
        result = solve_normal(eq)
        hit = brute_force_normal(a, b, NORMAL_LIMIT)

        assert result.solvable == check_normal_conditions(eq).holds, (a, b)
        if not result.solvable:
            assert hit is None, (a, b, hit)
            continue
        assert hit is not None, (a, b)
        assert extract_necessity_witnesses(eq, make_primitive(eq, hit)).holds, (a, b, hit)

        trace = result.trace
        solution = result.solution.as_tuple()
        assert evaluate((a, b, -1), solution) == 0
        assert is_primitive(result.solution)
        assert max(trace.raw_solution.as_tuple()) <= trace.bound
        assert trace.length <= ceil_log4(a) + ceil_log4(b)
        for step in trace.steps:
            assert 4 * step.new_coeff * step.h < step.carried_coeff, (a, b, step.index)
        assert extract_necessity_witnesses(eq, result.solution).holds


def test_general_sweep():
    checked = 0
    for eq in _valid_triples():
        result = solve_general(eq)
        hit = brute_force_general(eq.a, eq.b, eq.c, GENERAL_LIMIT)
        key = eq.coefficients()
        if not result.solvable:
            assert hit is None, (key, hit)
            continue
        assert hit is not None, key
        assert extract_necessity_witnesses(eq, make_primitive(eq, hit)).holds, (key, hit)
        assert evaluate(key, result.solution.as_tuple()) == 0, key
        assert is_primitive(result.solution), key
        checked += 1
    assert checked > 0
