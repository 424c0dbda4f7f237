"""Substitution checks and primitivity for a*x^2 + b*y^2 + c*z^2 = 0.

The normal form a*x^2 + b*y^2 = z^2 is the coefficient triple (a, b, -1).
"""

import math
from typing import Sequence, Tuple

from src.diophantine.arith import factorize
from src.diophantine.errors import DescentInvariantError, InvalidInputError
from src.diophantine.models import Solution

Coefficients = Tuple[int, int, int]


def evaluate(coefficients: Coefficients, triple: Sequence[int]) -> int:
    a, b, c = coefficients
    x, y, z = triple
    return a * x * x + b * y * y + c * z * z


def is_solution(coefficients: Coefficients, triple: Sequence[int]) -> bool:
    """True iff triple is a non-trivial zero of the form."""
    return any(triple) and evaluate(coefficients, triple) == 0


def require_solution(coefficients: Coefficients, solution: Solution, context: str) -> Solution:
    """Substitution check on a constructed solution; failure is a bug."""
    if evaluate(coefficients, solution.as_tuple()) != 0:
        raise DescentInvariantError(
            f"{context}: {solution.as_tuple()} does not solve coefficients {coefficients}"
        )
    return solution


def is_primitive(solution: Solution) -> bool:
    x, y, z = solution.as_tuple()
    return math.gcd(x, y) == 1 and math.gcd(x, z) == 1 and math.gcd(y, z) == 1


def make_primitive(coefficients: Coefficients, solution: Solution) -> Solution:
    """Divide out primes shared by two components until pairwise coprime.

    A prime dividing two components divides the third because every
    coefficient is square-free.
    """
    if not is_solution(coefficients, solution.as_tuple()):
        raise InvalidInputError(f"{solution.as_tuple()} does not solve coefficients {coefficients}")

    triple = list(solution.as_tuple())
    while True:
        for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            g = math.gcd(triple[i], triple[j])
            if g > 1:
                break
        else:
            return Solution.of(*triple)

        p = factorize(g)[0][0]
        if triple[k] % p:
            raise DescentInvariantError(
                f"prime {p} divides two components of {tuple(triple)} but not the third"
            )
        triple = [v // p for v in triple]
