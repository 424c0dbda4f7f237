"""General form a*x^2 + b*y^2 + c*z^2 = 0 with square-free, pairwise coprime,
mixed-sign coefficients.

Solving goes through the normal form: canonicalize to a, b > 0 > c, check
Leg.1-3, map to (-ac)x^2 + (-bc)y^2 = Z^2, solve, divide Z by c and undo the
canonicalization.
"""

import math
from typing import List, Optional, Union

from src.config import config
from src.logging_config import get_logger
from src.diophantine.arith import is_squarefree, mod_inverse
from src.diophantine.descent import solve_normal
from src.diophantine.errors import (
    AllSameSignError,
    CoefficientTooLargeError,
    DescentInvariantError,
    InvalidInputError,
    NotCoprimeError,
    NotSquareFreeError,
    ZeroCoefficientError,
)
from src.diophantine.models import (
    Canonicalization,
    ConditionFailure,
    GeneralEquation,
    LegendreConditions,
    NoSolution,
    NormalConditions,
    NormalEquation,
    ResidueWitness,
    Solution,
    Solvable,
    SolveResult,
)
from src.diophantine.residues import make_witness, non_residue_prime, sqrt_mod_squarefree
from src.diophantine.solutions import is_solution, require_solution
from src.diophantine.solutions import make_primitive as _make_primitive

__all__ = [
    "validate_input",
    "canonicalize",
    "check_legendre_conditions",
    "to_normal",
    "from_normal_solution",
    "normal_to_general",
    "general_to_normal_solution",
    "solve_general",
    "make_primitive",
    "extract_necessity_witnesses",
]

logger = get_logger("solver")

_SLOTS = ("a", "b", "c")


def validate_input(eq: GeneralEquation, max_coeff: Optional[int] = None) -> GeneralEquation:
    """Check nonzero, size, square-free, pairwise coprime and mixed signs, in that order."""
    if max_coeff is None:
        max_coeff = config.solver.max_coeff
    coefficients = dict(zip(_SLOTS, eq.coefficients()))

    for which, value in coefficients.items():
        if value == 0:
            raise ZeroCoefficientError(which)
    for which, value in coefficients.items():
        if abs(value) > max_coeff:
            raise CoefficientTooLargeError(which, value, max_coeff)
    for which, value in coefficients.items():
        if not is_squarefree(value):
            raise NotSquareFreeError(which, value)
    for first, second in (("a", "b"), ("a", "c"), ("b", "c")):
        g = math.gcd(coefficients[first], coefficients[second])
        if g != 1:
            raise NotCoprimeError((first, second), g)
    if all(v > 0 for v in coefficients.values()) or all(v < 0 for v in coefficients.values()):
        raise AllSameSignError()
    return eq


def canonicalize(eq: GeneralEquation) -> Canonicalization:
    """Flip all signs if two are negative, then move the negative coefficient to slot c."""
    values = eq.coefficients()
    flipped = sum(v < 0 for v in values) == 2
    if flipped:
        values = tuple(-v for v in values)

    negative = next(i for i, v in enumerate(values) if v < 0)
    permutation = tuple(i for i in range(3) if i != negative) + (negative,)
    a, b, c = (values[i] for i in permutation)

    return Canonicalization(
        original=eq,
        equation=GeneralEquation(a=a, b=b, c=c),
        permutation=permutation,
        flipped=flipped,
    )


def _require_canonical(eq: GeneralEquation) -> None:
    if not (eq.a > 0 and eq.b > 0 and eq.c < 0):
        raise InvalidInputError(f"{eq} is not canonical (a, b > 0 > c)")


def _residue_check(
    condition: str, value: int, modulus: int, failures: List[ConditionFailure]
) -> Optional[ResidueWitness]:
    witness = sqrt_mod_squarefree(value, modulus)
    if witness is None:
        failures.append(ConditionFailure(
            condition=condition, value=value, modulus=modulus,
            prime=non_residue_prime(value, modulus),
        ))
    return witness


def check_legendre_conditions(eq: GeneralEquation) -> LegendreConditions:
    """Leg.1 -ab R |c|, Leg.2 -bc R |a|, Leg.3 -ac R |b|."""
    _require_canonical(eq)
    a, b, c = eq.coefficients()

    failures: List[ConditionFailure] = []
    neg_ab_mod_c = _residue_check("Leg.1", -a * b, abs(c), failures)
    neg_bc_mod_a = _residue_check("Leg.2", -b * c, abs(a), failures)
    neg_ac_mod_b = _residue_check("Leg.3", -a * c, abs(b), failures)

    return LegendreConditions(
        a=a, b=b, c=c,
        neg_ab_mod_c=neg_ab_mod_c,
        neg_bc_mod_a=neg_bc_mod_a,
        neg_ac_mod_b=neg_ac_mod_b,
        failures=tuple(failures),
    )


def to_normal(eq: GeneralEquation) -> NormalEquation:
    """(-ac, -bc); Z = c*z carries solutions across."""
    _require_canonical(eq)
    a, b = -eq.a * eq.c, -eq.b * eq.c
    if not (is_squarefree(a) and is_squarefree(b)):
        raise DescentInvariantError(f"normal form ({a}, {b}) of {eq} is not square-free")
    return NormalEquation(a=a, b=b)


def from_normal_solution(eq: GeneralEquation, sol: Solution) -> Solution:
    _require_canonical(eq)
    normal = to_normal(eq)
    if not is_solution(normal.coefficients(), sol.as_tuple()):
        raise InvalidInputError(f"{sol.as_tuple()} does not solve {normal}")

    z, rest = divmod(sol.z, abs(eq.c))
    if rest:
        raise DescentInvariantError(f"|c| = {abs(eq.c)} does not divide Z = {sol.z}")
    general = Solution(x=sol.x, y=sol.y, z=z)
    return require_solution(eq.coefficients(), general, "from_normal_solution")


def normal_to_general(eq: NormalEquation) -> GeneralEquation:
    """(a/d, b/d, -d) for d = gcd(a, b)."""
    d = eq.d
    return GeneralEquation(a=eq.a // d, b=eq.b // d, c=-d)


def general_to_normal_solution(eq: NormalEquation, sol: Solution) -> Solution:
    """(x, y, d*z) from a solution of normal_to_general(eq)."""
    general = normal_to_general(eq)
    if not is_solution(general.coefficients(), sol.as_tuple()):
        raise InvalidInputError(f"{sol.as_tuple()} does not solve {general}")
    normal = Solution(x=sol.x, y=sol.y, z=eq.d * sol.z)
    return require_solution(eq.coefficients(), normal, "general_to_normal_solution")


def solve_general(eq: GeneralEquation, max_coeff: Optional[int] = None) -> SolveResult:
    """Solve a*x^2 + b*y^2 + c*z^2 = 0 or report the first failing Leg condition."""
    validate_input(eq, max_coeff)
    canonical = canonicalize(eq)
    normal = to_normal(canonical.equation)
    limit = max_coeff if max_coeff is not None else config.solver.max_coeff
    # the descent factors the normal-form coefficients
    for which, value in (("-ac", normal.a), ("-bc", normal.b)):
        if value > limit:
            raise CoefficientTooLargeError(which, value, limit)
    conditions = check_legendre_conditions(canonical.equation)
    if not conditions.holds:
        failure = conditions.first_failure()
        logger.info(f"{eq} has no solution: {failure.message}")
        return NoSolution(failure=failure, conditions=conditions)

    logger.debug(f"{eq} -> canonical {canonical.equation} -> normal {normal}")
    result = solve_normal(normal, max_coeff=limit)
    if not result.solvable:
        logger.error(f"{normal} refused although Leg.1-3 hold for {eq}")
        raise DescentInvariantError(f"{normal} has no solution although Leg.1-3 hold")

    general = from_normal_solution(canonical.equation, result.solution)
    restored = canonical.restore_solution(general)
    solution = make_primitive(eq, restored)
    require_solution(eq.coefficients(), solution, "solve_general")
    return Solvable(solution=solution, trace=result.trace)


def make_primitive(eq: Union[NormalEquation, GeneralEquation], sol: Solution) -> Solution:
    """Divide out primes shared by two components; the result is pairwise coprime."""
    return _make_primitive(eq.coefficients(), sol)


def _normal_witnesses(eq: NormalEquation, sol: Solution) -> NormalConditions:
    a, b, d = eq.a, eq.b, eq.d
    x, y, z = sol.as_tuple()
    return NormalConditions(
        a=a, b=b, d=d,
        a_mod_b=make_witness(a, b, z * mod_inverse(x, b)),
        b_mod_a=make_witness(b, a, z * mod_inverse(y, a)),
        neg_ab_mod_d=make_witness(-(a // d) * (b // d), d, (b // d) * y * mod_inverse(x, d)),
    )


def _general_witnesses(eq: GeneralEquation, sol: Solution) -> LegendreConditions:
    a, b, c = eq.coefficients()
    x, y, z = sol.as_tuple()
    return LegendreConditions(
        a=a, b=b, c=c,
        neg_ab_mod_c=make_witness(-a * b, abs(c), a * x * mod_inverse(y, abs(c))),
        neg_bc_mod_a=make_witness(-b * c, abs(a), c * z * mod_inverse(y, abs(a))),
        neg_ac_mod_b=make_witness(-a * c, abs(b), c * z * mod_inverse(x, abs(b))),
    )


def extract_necessity_witnesses(
    eq: Union[NormalEquation, GeneralEquation], sol: Solution
) -> Union[NormalConditions, LegendreConditions]:
    """Residue roots read off a primitive solution.

    Normal form: b R a via z/y mod a, a R b via z/x mod b and
    -(a/d)(b/d) R d via (b/d)*y/x mod d. General form: -bc R a via c*z/y,
    -ac R b via c*z/x and -ab R c via a*x/y. A NotInvertibleError means the
    solution was not primitive.
    """
    if not is_solution(eq.coefficients(), sol.as_tuple()):
        raise InvalidInputError(f"{sol.as_tuple()} does not solve {eq}")
    if isinstance(eq, NormalEquation):
        return _normal_witnesses(eq, sol)
    return _general_witnesses(eq, sol)
