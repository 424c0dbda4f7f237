"""Domain records. Every record checks its own invariant on construction."""

import math
from enum import Enum
from typing import Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True)


class BezoutCertificate(_Record):
    """u*x + v*y = g for the inputs (x, y)."""
    g: int = Field(ge=0)
    u: int
    v: int


class SquareFreeSplit(_Record):
    """n = h^2 * s with |s| square-free."""
    h: int = Field(ge=1)
    s: int

    @property
    def value(self) -> int:
        return self.h * self.h * self.s


class ResidueWitness(_Record):
    """root^2 = value (mod modulus), with 0 <= root <= modulus/2."""
    value: int
    modulus: int = Field(ge=1)
    root: int

    @model_validator(mode="after")
    def _check_root(self) -> "ResidueWitness":
        if self.root < 0 or 2 * self.root > self.modulus:
            raise ValueError(f"root {self.root} outside [0, {self.modulus}/2]")
        if not self.verifies():
            raise ValueError(f"{self.root}^2 is not {self.value} modulo {self.modulus}")
        return self

    def verifies(self) -> bool:
        return (self.root * self.root - self.value) % self.modulus == 0


class CongruenceSystem(_Record):
    """Congruences u = r (mod f); residues are stored reduced into [0, f)."""
    congruences: Tuple[Tuple[int, int], ...] = ()

    @field_validator("congruences")
    @classmethod
    def _reduce(cls, value: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
        reduced = []
        for residue, modulus in value:
            if modulus < 1:
                raise ValueError(f"modulus must be >= 1, got {modulus}")
            reduced.append((residue % modulus, modulus))
        return tuple(reduced)

    @property
    def modulus(self) -> int:
        return math.prod(f for _, f in self.congruences)


class TwoSquares(_Record):
    r: int = Field(ge=0)
    s: int = Field(ge=0)
    n: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_sum(self) -> "TwoSquares":
        if self.r * self.r + self.s * self.s != self.n:
            raise ValueError(f"{self.r}^2 + {self.s}^2 != {self.n}")
        return self


class Solution(_Record):
    x: int = Field(ge=0)
    y: int = Field(ge=0)
    z: int = Field(ge=0)

    @model_validator(mode="after")
    def _non_trivial(self) -> "Solution":
        if self.x == 0 and self.y == 0 and self.z == 0:
            raise ValueError("the zero triple is not a solution")
        return self

    @classmethod
    def of(cls, x: int, y: int, z: int) -> "Solution":
        return cls(x=abs(x), y=abs(y), z=abs(z))

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)


class NormalEquation(_Record):
    """a*x^2 + b*y^2 = z^2."""
    a: int = Field(ge=1)
    b: int = Field(ge=1)

    @property
    def d(self) -> int:
        return math.gcd(self.a, self.b)

    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, -1)

    def __str__(self) -> str:
        return f"{self.a}x^2 + {self.b}y^2 = z^2"


class GeneralEquation(_Record):
    """a*x^2 + b*y^2 + c*z^2 = 0."""
    a: int
    b: int
    c: int

    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"{self.a}x^2 + {self.b}y^2 + {self.c}z^2 = 0"


class ConditionFailure(_Record):
    """A named residue condition that does not hold."""
    condition: str
    value: int
    modulus: int = Field(ge=1)
    prime: Optional[int] = None

    @property
    def message(self) -> str:
        text = f"{self.condition} fails: {self.value} is not a square mod {self.modulus}"
        if self.prime is not None and self.prime != self.modulus:
            text += f" (non-residue mod prime {self.prime})"
        return text


class NormalConditions(_Record):
    """Norm.1 a R b, Norm.2 b R a, Norm.3 -(ab/d^2) R d."""
    a: int
    b: int
    d: int
    a_mod_b: Optional[ResidueWitness] = None
    b_mod_a: Optional[ResidueWitness] = None
    neg_ab_mod_d: Optional[ResidueWitness] = None
    failures: Tuple[ConditionFailure, ...] = ()

    @model_validator(mode="after")
    def _check_d(self) -> "NormalConditions":
        if self.d != math.gcd(self.a, self.b):
            raise ValueError(f"d={self.d} is not gcd({self.a}, {self.b})")
        return self

    @property
    def holds(self) -> bool:
        return not self.failures and None not in (self.a_mod_b, self.b_mod_a, self.neg_ab_mod_d)

    def first_failure(self) -> Optional[ConditionFailure]:
        return self.failures[0] if self.failures else None

    def swapped(self) -> "NormalConditions":
        """The same conditions read for b*x^2 + a*y^2 = z^2."""
        names = {"Norm.1": "Norm.2", "Norm.2": "Norm.1"}
        failures = tuple(
            f.model_copy(update={"condition": names.get(f.condition, f.condition)})
            for f in self.failures
        )
        failures = tuple(sorted(failures, key=lambda f: f.condition))
        return NormalConditions(
            a=self.b, b=self.a, d=self.d,
            a_mod_b=self.b_mod_a, b_mod_a=self.a_mod_b,
            neg_ab_mod_d=self.neg_ab_mod_d, failures=failures,
        )


class LegendreConditions(_Record):
    """Leg.1 -ab R c, Leg.2 -bc R a, Leg.3 -ac R b (moduli taken in absolute value)."""
    a: int
    b: int
    c: int
    neg_ab_mod_c: Optional[ResidueWitness] = None
    neg_bc_mod_a: Optional[ResidueWitness] = None
    neg_ac_mod_b: Optional[ResidueWitness] = None
    failures: Tuple[ConditionFailure, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.failures and None not in (self.neg_ab_mod_c, self.neg_bc_mod_a, self.neg_ac_mod_b)

    def first_failure(self) -> Optional[ConditionFailure]:
        return self.failures[0] if self.failures else None


class Side(str, Enum):
    REDUCE_A = "reduce_a"
    REDUCE_B = "reduce_b"


class BaseCase(str, Enum):
    A_IS_ONE = "a_is_one"
    B_IS_ONE = "b_is_one"
    EQUAL = "equal"


class ReductionStep(_Record):
    """One descent step root^2 - partner = h^2 * new * carried.

    carried_coeff is the coefficient being replaced (A_{i-1} or B_{i-1}),
    partner_coeff the one kept, new_coeff the square-free replacement.
    conditions are the Theta witnesses of the new equation, derived from
    the previous level's witnesses.
    """
    index: int = Field(ge=1)
    side: Side
    root: int = Field(ge=0)
    h: int = Field(ge=1)
    k: int = Field(ge=1)
    new_coeff: int = Field(ge=1)
    carried_coeff: int = Field(ge=2)
    partner_coeff: int = Field(ge=1)
    conditions: NormalConditions

    @model_validator(mode="after")
    def _check_step(self) -> "ReductionStep":
        if self.k * self.carried_coeff != self.root * self.root - self.partner_coeff:
            raise ValueError("root^2 - partner != k * carried")
        if self.k != self.h * self.h * self.new_coeff:
            raise ValueError("k != h^2 * new")
        if 4 * self.new_coeff * self.h >= self.carried_coeff:
            raise ValueError("new * h is not below carried / 4")
        if 2 * self.root > self.carried_coeff:
            raise ValueError("root exceeds carried / 2")
        return self

    @property
    def before(self) -> Tuple[int, int]:
        """(A_{i-1}, B_{i-1})."""
        if self.side is Side.REDUCE_A:
            return (self.carried_coeff, self.partner_coeff)
        return (self.partner_coeff, self.carried_coeff)

    @property
    def after(self) -> Tuple[int, int]:
        """(A_i, B_i)."""
        if self.side is Side.REDUCE_A:
            return (self.new_coeff, self.partner_coeff)
        return (self.partner_coeff, self.new_coeff)


class DescentTrace(_Record):
    """E_0 ... E_l with base case and the solution of every level.

    lifted[i] solves E_i; lifted[-1] is the base solution and lifted[0] the
    raw solution of the input equation before primitivity reduction.
    """
    equation: NormalEquation
    steps: Tuple[ReductionStep, ...] = ()
    base_case: BaseCase
    base_two_squares: Optional[TwoSquares] = None
    lifted: Tuple[Solution, ...]
    solution: Solution
    bound: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_levels(self) -> "DescentTrace":
        if len(self.lifted) != len(self.steps) + 1:
            raise ValueError("one lifted solution per level is required")
        return self

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def base_solution(self) -> Solution:
        return self.lifted[-1]

    @property
    def raw_solution(self) -> Solution:
        return self.lifted[0]

    def levels(self) -> Tuple[Tuple[int, int], ...]:
        """(A_i, B_i) for i = 0..l."""
        coefficients = [(self.equation.a, self.equation.b)]
        coefficients.extend(step.after for step in self.steps)
        return tuple(coefficients)


class Canonicalization(_Record):
    """Sign flip and slot permutation bringing an equation to a, b > 0 > c.

    Canonical slot i holds input slot permutation[i].
    """
    original: GeneralEquation
    equation: GeneralEquation
    permutation: Tuple[int, int, int]
    flipped: bool

    def restore_equation(self) -> GeneralEquation:
        sign = -1 if self.flipped else 1
        slots = [0, 0, 0]
        for i, source in enumerate(self.permutation):
            slots[source] = sign * self.equation.coefficients()[i]
        return GeneralEquation(a=slots[0], b=slots[1], c=slots[2])

    def restore_solution(self, solution: Solution) -> Solution:
        slots = [0, 0, 0]
        for i, source in enumerate(self.permutation):
            slots[source] = solution.as_tuple()[i]
        return Solution(x=slots[0], y=slots[1], z=slots[2])


class Solvable(_Record):
    solution: Solution
    trace: DescentTrace
    solvable: Literal[True] = True


class NoSolution(_Record):
    failure: ConditionFailure
    conditions: Union[NormalConditions, LegendreConditions]
    solvable: Literal[False] = False


SolveResult = Union[Solvable, NoSolution]
