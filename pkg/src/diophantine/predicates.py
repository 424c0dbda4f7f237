"""Bounded-quantifier predicates, written as their definitions.

Every quantifier ranges over an explicit finite interval, so these are
slow but obviously correct. They serve as an independent reference for the
fast routines on small inputs.
"""

from src.diophantine.errors import InvalidInputError


def delta(y: int, x: int) -> bool:
    """y divides x: some z <= |x| has y*z = |x|."""
    x = abs(x)
    return any(y * z == x for z in range(x + 1))


def is_prime_bounded(y: int) -> bool:
    return y >= 2 and all(x in (1, y) for x in range(1, y + 1) if delta(x, y))


def gamma_gcd(x: int, y: int, z: int) -> bool:
    """z is the gcd of x and y: a common divisor that every common divisor divides."""
    x, y = abs(x), abs(y)
    if z < 0 or not (delta(z, x) and delta(z, y)):
        return False
    return all(delta(w, z) for w in range(x + y + 1) if delta(w, x) and delta(w, y))


def sigma(x: int) -> bool:
    """x is square-free: no prime y <= x has y^2 dividing x."""
    x = abs(x)
    if x == 0:
        return False
    return not any(delta(y * y, x) for y in range(x + 1) if is_prime_bounded(y))


def congruent(a: int, b: int, c: int) -> bool:
    """a = b (mod c)."""
    if c < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {c}")
    return delta(c, a - b)


def inv(a: int, b: int) -> bool:
    """a is invertible modulo b: some w <= b has a*w = 1 (mod b)."""
    return any(congruent(a * w, 1, b) for w in range(b + 1))


def rho(a: int, b: int) -> bool:
    """a is a square modulo b: some r <= b/2 has b | a - r^2."""
    return any(congruent(a, r * r, b) for r in range(b // 2 + 1))


def theta(a: int, b: int) -> bool:
    """a R b, b R a and -(a/d)(b/d) R d for d = gcd(a, b)."""
    if a < 1 or b < 1:
        raise InvalidInputError(f"theta needs a, b >= 1, got ({a}, {b})")
    d = next(z for z in range(1, max(a, b) + 1) if gamma_gcd(a, b, z))
    return rho(a, b) and rho(b, a) and rho(-(a // d) * (b // d), d)
