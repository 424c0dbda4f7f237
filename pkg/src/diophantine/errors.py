"""Exceptions raised by the diophantine package."""

from typing import Tuple


class DiophantineError(Exception):
    """Base class for all solver errors."""


class InvalidInputError(DiophantineError, ValueError):
    """Input violates a hypothesis of the operation."""


class ZeroCoefficientError(InvalidInputError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"{which} is zero")


class NotSquareFreeError(InvalidInputError):
    def __init__(self, which: str, value: int):
        self.which = which
        self.value = value
        super().__init__(f"{which} is not square-free ({value})")


class NotCoprimeError(InvalidInputError):
    def __init__(self, pair: Tuple[str, str], gcd: int):
        self.pair = pair
        self.gcd = gcd
        super().__init__(f"{pair[0]} and {pair[1]} are not coprime (gcd {gcd})")


class AllSameSignError(InvalidInputError):
    def __init__(self):
        super().__init__("coefficients all have the same sign")


class CoefficientTooLargeError(InvalidInputError):
    def __init__(self, which: str, value: int, limit: int):
        self.which = which
        self.value = value
        self.limit = limit
        super().__init__(f"|{which}| = {abs(value)} exceeds the configured limit {limit}")


class NotPrimeError(InvalidInputError):
    def __init__(self, value: int):
        self.value = value
        super().__init__(f"{value} is not prime")


class NotInvertibleError(InvalidInputError):
    def __init__(self, value: int, modulus: int):
        self.value = value
        self.modulus = modulus
        super().__init__(f"{value} is not invertible modulo {modulus}")


class MinusOneNotSquareError(InvalidInputError):
    def __init__(self, prime: int):
        self.prime = prime
        super().__init__(f"-1 is not a square modulo {prime}")


class NonCoprimeModuliError(InvalidInputError):
    def __init__(self, first: int, second: int):
        self.moduli = (first, second)
        super().__init__(f"moduli {first} and {second} are not coprime")


class DescentInvariantError(DiophantineError, RuntimeError):
    """An invariant the construction guarantees did not hold. Always a bug."""
