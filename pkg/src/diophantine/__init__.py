"""Solver for ternary quadratic equations a*x^2 + b*y^2 + c*z^2 = 0."""

from .descent import check_normal_conditions, solve_normal, solution_bound
from .errors import DescentInvariantError, DiophantineError, InvalidInputError
from .legendre import (
    check_legendre_conditions,
    extract_necessity_witnesses,
    make_primitive,
    solve_general,
    validate_input,
)
from .models import GeneralEquation, NoSolution, NormalEquation, Solution, Solvable

__all__ = [
    'check_normal_conditions',
    'solve_normal',
    'solution_bound',
    'check_legendre_conditions',
    'extract_necessity_witnesses',
    'make_primitive',
    'solve_general',
    'validate_input',
    'DiophantineError',
    'InvalidInputError',
    'DescentInvariantError',
    'GeneralEquation',
    'NormalEquation',
    'Solution',
    'Solvable',
    'NoSolution',
]
