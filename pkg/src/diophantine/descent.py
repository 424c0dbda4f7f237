"""Normal-form solver for a*x^2 + b*y^2 = z^2.

The larger coefficient is replaced step by step with a smaller square-free
one until a base case is reached; the base solution is then lifted back
level by level. Every step carries residue witnesses for the new equation
derived from the witnesses of the old one.
"""

from fractions import Fraction
import math
from typing import List, Optional, Tuple

from pydantic import ValidationError

from src.config import config
from src.logging_config import get_logger
from src.diophantine.arith import ceil_log4, is_squarefree, mod_inverse, squarefree_split
from src.diophantine.errors import (
    CoefficientTooLargeError,
    DescentInvariantError,
    InvalidInputError,
    NotSquareFreeError,
)
from src.diophantine.models import (
    BaseCase,
    ConditionFailure,
    DescentTrace,
    NoSolution,
    NormalConditions,
    NormalEquation,
    ReductionStep,
    ResidueWitness,
    Side,
    Solution,
    Solvable,
    SolveResult,
    TwoSquares,
)
from src.diophantine.residues import (
    combine_roots,
    make_witness,
    non_residue_prime,
    roots_per_prime,
    sqrt_mod_squarefree,
)
from src.diophantine.solutions import is_solution, make_primitive, require_solution
from src.diophantine.two_squares import two_squares_squarefree

logger = get_logger("solver")


def validate_normal_input(a: int, b: int, max_coeff: Optional[int] = None) -> NormalEquation:
    if max_coeff is None:
        max_coeff = config.solver.max_coeff
    for which, value in (("a", a), ("b", b)):
        if value < 1:
            raise InvalidInputError(f"{which} must be >= 1, got {value}")
        if value > max_coeff:
            raise CoefficientTooLargeError(which, value, max_coeff)
        if not is_squarefree(value):
            raise NotSquareFreeError(which, value)
    return NormalEquation(a=a, b=b)


def _residue_check(
    condition: str, value: int, modulus: int, failures: List[ConditionFailure]
) -> Optional[ResidueWitness]:
    witness = sqrt_mod_squarefree(value, modulus)
    if witness is None:
        failures.append(ConditionFailure(
            condition=condition,
            value=value,
            modulus=modulus,
            prime=non_residue_prime(value, modulus),
        ))
    return witness


def check_normal_conditions(eq: NormalEquation) -> NormalConditions:
    """Norm.1 a R b, Norm.2 b R a, Norm.3 -(a/d)(b/d) R d, failures in that order."""
    a, b, d = eq.a, eq.b, eq.d
    for which, value in (("a", a), ("b", b)):
        if not is_squarefree(value):
            raise NotSquareFreeError(which, value)

    failures: List[ConditionFailure] = []
    a_mod_b = _residue_check("Norm.1", a, b, failures)
    b_mod_a = _residue_check("Norm.2", b, a, failures)
    neg_ab_mod_d = _residue_check("Norm.3", -(a // d) * (b // d), d, failures)

    return NormalConditions(
        a=a, b=b, d=d,
        a_mod_b=a_mod_b,
        b_mod_a=b_mod_a,
        neg_ab_mod_d=neg_ab_mod_d,
        failures=tuple(failures),
    )


def _derived_witness(value: int, modulus: int, x: int) -> ResidueWitness:
    if (x * x - value) % modulus:
        logger.error(f"derived root {x} does not certify {value} R {modulus}")
        raise DescentInvariantError(f"derived root {x} does not certify {value} R {modulus}")
    return make_witness(value, modulus, x)


def derive_conditions(
    carried: int, partner: int, beta: int, h: int, new: int, conditions: NormalConditions
) -> NormalConditions:
    """Witnesses of Theta(new, partner) computed from those of Theta(carried, partner).

    conditions is oriented as (a, b) = (carried, partner) and
    beta^2 - partner = h^2 * new * carried. The result is oriented as
    (a, b) = (new, partner).
    """
    if conditions.a != carried or conditions.b != partner or not conditions.holds:
        raise InvalidInputError(f"conditions do not certify Theta({carried}, {partner})")

    rho = conditions.a_mod_b.root
    t = conditions.neg_ab_mod_d.root
    d = conditions.d
    carried1, partner1 = carried // d, partner // d

    # new R d and new R partner/d glue to new R partner
    on_d = _derived_witness(new, d, t * mod_inverse(h, d) * mod_inverse(carried1, d))
    on_partner1 = _derived_witness(
        new, partner1, beta * mod_inverse(h, partner1) * mod_inverse(rho, partner1)
    )
    new_mod_partner = combine_roots(on_d, on_partner1)

    partner_mod_new = _derived_witness(partner, new, beta)

    r = math.gcd(new, partner)
    new2, partner2 = new // r, partner // r
    neg_mod_r = _derived_witness(
        -new2 * partner2, r, partner2 * mod_inverse(h, r) * mod_inverse(rho, r)
    )

    return NormalConditions(
        a=new, b=partner, d=r,
        a_mod_b=new_mod_partner,
        b_mod_a=partner_mod_new,
        neg_ab_mod_d=neg_mod_r,
    )


def reduce_once(
    a: int,
    b: int,
    beta: int,
    *,
    conditions: Optional[NormalConditions] = None,
    index: int = 1,
    side: Side = Side.REDUCE_A,
) -> ReductionStep:
    """Replace a by the square-free part A of k = (beta^2 - b)/a = h^2 * A.

    a is the coefficient being reduced and b its partner, 1 < b < a. For a
    REDUCE_B step the caller passes (B, A) and conditions.swapped().
    """
    if not 1 < b < a:
        raise InvalidInputError(f"reduce_once needs 1 < b < a, got a={a}, b={b}")
    if conditions is None:
        conditions = check_normal_conditions(NormalEquation(a=a, b=b))
        if not conditions.holds:
            raise InvalidInputError(conditions.first_failure().message)
    if beta < 0 or 2 * beta > a:
        raise InvalidInputError(f"root {beta} outside [0, {a}/2]")

    k, rest = divmod(beta * beta - b, a)
    if rest or k < 1:
        raise InvalidInputError(f"{beta}^2 - {b} is not a positive multiple of {a}")

    split = squarefree_split(k)
    h, new = split.h, split.s
    if 4 * new * h >= a:
        logger.error(f"contraction failed: {new}*{h} >= {a}/4")
        raise DescentInvariantError(f"new coefficient {new} with h={h} did not contract below {a}/4")

    derived = derive_conditions(a, b, beta, h, new, conditions)
    if not check_normal_conditions(NormalEquation(a=new, b=b)).holds:
        logger.error(f"Theta({new}, {b}) fails after reducing {a}")
        raise DescentInvariantError(f"Theta({new}, {b}) does not hold after reducing {a}")

    if side is Side.REDUCE_B:
        derived = derived.swapped()

    logger.debug(f"step {index} {side.value}: {beta}^2 - {b} = {h}^2*{new}*{a}")
    try:
        return ReductionStep(
            index=index,
            side=side,
            root=beta,
            h=h,
            k=k,
            new_coeff=new,
            carried_coeff=a,
            partner_coeff=b,
            conditions=derived,
        )
    except ValidationError as exc:
        raise DescentInvariantError(f"step {index} violates its invariant: {exc}") from exc


def _check_inner(coefficients: Tuple[int, int, int], inner: Solution) -> None:
    if not is_solution(coefficients, inner.as_tuple()):
        raise InvalidInputError(f"{inner.as_tuple()} does not solve coefficients {coefficients}")


def lift_components(
    side: Side, root: int, h: int, new: int, partner: int, inner: Tuple[int, int, int]
) -> Tuple[int, int, int]:
    x, y, z = inner
    if side is Side.REDUCE_A:
        return (new * x * h, z + y * root, z * root + partner * y)
    return (z + x * root, new * y * h, z * root + partner * x)


def lift_beta(step: ReductionStep, inner: Solution) -> Solution:
    """(A*x*h, z + y*beta, z*beta + b*y) from a solution of A*x^2 + b*y^2 = z^2."""
    if step.side is not Side.REDUCE_A:
        raise InvalidInputError("lift_beta needs a reduce_a step")
    new, b, beta, h = step.new_coeff, step.partner_coeff, step.root, step.h
    _check_inner((new, b, -1), inner)

    lifted = Solution.of(*lift_components(Side.REDUCE_A, beta, h, new, b, inner.as_tuple()))
    logger.debug(f"lift {step.index}: {inner.as_tuple()} -> {lifted.as_tuple()}")
    return require_solution((step.carried_coeff, b, -1), lifted, f"lift_beta at step {step.index}")


def lift_alpha(step: ReductionStep, inner: Solution) -> Solution:
    """(z + x*alpha, B*y*h, z*alpha + a*x) from a solution of a*x^2 + B*y^2 = z^2."""
    if step.side is not Side.REDUCE_B:
        raise InvalidInputError("lift_alpha needs a reduce_b step")
    a, new, alpha, h = step.partner_coeff, step.new_coeff, step.root, step.h
    _check_inner((a, new, -1), inner)

    lifted = Solution.of(*lift_components(Side.REDUCE_B, alpha, h, new, a, inner.as_tuple()))
    logger.debug(f"lift {step.index}: {inner.as_tuple()} -> {lifted.as_tuple()}")
    return require_solution((a, step.carried_coeff, -1), lifted, f"lift_alpha at step {step.index}")


def _solve_base(
    a: int, b: int, cond: NormalConditions
) -> Tuple[BaseCase, Optional[TwoSquares], Solution]:
    if a == 1:
        return BaseCase.A_IS_ONE, None, Solution(x=1, y=0, z=1)
    if b == 1:
        return BaseCase.B_IS_ONE, None, Solution(x=0, y=1, z=1)
    if a != b:
        raise InvalidInputError(f"({a}, {b}) is not a base case")
    if cond.neg_ab_mod_d is None or cond.d != b:
        raise InvalidInputError(f"a witness of -1 R {b} is required")

    rep = two_squares_squarefree(b, roots_per_prime(cond.neg_ab_mod_d))
    solution = Solution(x=rep.r, y=rep.s, z=b)
    return BaseCase.EQUAL, rep, require_solution((a, b, -1), solution, "two-squares base")


def solve_base(a: int, b: int, cond: NormalConditions) -> Solution:
    """(1,0,1) for a = 1, (0,1,1) for b = 1, (r,s,b) with b = r^2 + s^2 for a = b."""
    return _solve_base(a, b, cond)[2]


def solution_bound(a: int, b: int) -> int:
    """ceil(b * (3a/2)^ceil_log4(a) * (3b/2)^ceil_log4(b))."""
    if a < 1 or b < 1:
        raise InvalidInputError(f"solution_bound needs a, b >= 1, got ({a}, {b})")
    value = Fraction(b) * Fraction(3 * a, 2) ** ceil_log4(a) * Fraction(3 * b, 2) ** ceil_log4(b)
    return math.ceil(value)


def solve_normal(eq: NormalEquation, max_coeff: Optional[int] = None) -> SolveResult:
    """Solve a*x^2 + b*y^2 = z^2 or report the first failing condition."""
    eq = validate_normal_input(eq.a, eq.b, max_coeff)
    current = check_normal_conditions(eq)
    if not current.holds:
        failure = current.first_failure()
        logger.info(f"{eq} has no solution: {failure.message}")
        return NoSolution(failure=failure, conditions=current)

    max_length = ceil_log4(eq.a) + ceil_log4(eq.b)
    steps: List[ReductionStep] = []
    a, b = eq.a, eq.b
    while not (a == 1 or b == 1 or a == b):
        if len(steps) >= max_length + 2:
            logger.error(f"descent on {eq} exceeded {max_length + 2} steps")
            raise DescentInvariantError(f"descent on {eq} did not terminate")

        index = len(steps) + 1
        if a > b:
            step = reduce_once(a, b, current.b_mod_a.root,
                               conditions=current, index=index, side=Side.REDUCE_A)
            a = step.new_coeff
        else:
            step = reduce_once(b, a, current.a_mod_b.root,
                               conditions=current.swapped(), index=index, side=Side.REDUCE_B)
            b = step.new_coeff
        steps.append(step)
        current = check_normal_conditions(NormalEquation(a=a, b=b))

    if len(steps) > max_length:
        raise DescentInvariantError(f"trace length {len(steps)} exceeds {max_length}")

    base_case, rep, base = _solve_base(a, b, current)
    logger.debug(f"base case {base_case.value} for ({a}, {b}): {base.as_tuple()}")

    lifted = [base]
    for step in reversed(steps):
        lift = lift_beta if step.side is Side.REDUCE_A else lift_alpha
        lifted.append(lift(step, lifted[-1]))
    lifted.reverse()
    raw = lifted[0]

    bound = solution_bound(eq.a, eq.b)
    if config.solver.check_bound and max(raw.as_tuple()) > bound:
        logger.error(f"raw solution {raw.as_tuple()} exceeds bound {bound}")
        raise DescentInvariantError(f"raw solution {raw.as_tuple()} exceeds bound {bound}")

    solution = make_primitive(eq.coefficients(), raw)
    trace = DescentTrace(
        equation=eq,
        steps=tuple(steps),
        base_case=base_case,
        base_two_squares=rep,
        lifted=tuple(lifted),
        solution=solution,
        bound=bound,
    )
    logger.debug(f"{eq}: raw {raw.as_tuple()}, primitive {solution.as_tuple()}, length {len(steps)}")
    return Solvable(solution=solution, trace=trace)
