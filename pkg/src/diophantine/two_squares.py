"""Sums of two squares by descent on the multiplier h in h*p = a^2 + b^2."""

from typing import Mapping, Optional, Tuple

from src.logging_config import get_logger
from src.diophantine.arith import factorize, is_prime, is_squarefree, mod_centered
from src.diophantine.errors import (
    DescentInvariantError,
    InvalidInputError,
    MinusOneNotSquareError,
    NotPrimeError,
    NotSquareFreeError,
)
from src.diophantine.models import TwoSquares

logger = get_logger("solver")


def seed_multiple(p: int, root: int) -> Tuple[int, int]:
    """(k, a) with k*p = 1 + a^2, a <= (p-1)/2 and 1 <= k < p."""
    if p == 2:
        raise InvalidInputError("p = 2 needs no seed: 2 = 1 + 1")
    if not is_prime(p):
        raise NotPrimeError(p)
    if (root * root + 1) % p:
        raise MinusOneNotSquareError(p)

    a = root % p
    if a > p // 2:
        a = p - a
    k = (1 + a * a) // p
    return k, a


def descend_step(p: int, h: int, a: int, b: int) -> Tuple[int, int, int]:
    """From h*p = a^2 + b^2 with 1 < h < p, a smaller multiple h' < h."""
    if not 1 < h < p or h * p != a * a + b * b:
        raise InvalidInputError(f"descend_step needs {h}*{p} = {a}^2 + {b}^2 with 1 < h < p")

    if h % 2 == 0:
        if a % 2 == 0 and b % 2 == 0:
            if h % 4:
                raise DescentInvariantError(f"a, b even but 4 does not divide h={h}")
            return h // 4, a // 2, b // 2
        return h // 2, abs(a - b) // 2, (a + b) // 2

    alpha, beta = mod_centered(a, h), mod_centered(b, h)
    j, rest = divmod(alpha * alpha + beta * beta, h)
    u, rest_u = divmod(a * alpha + b * beta, h)
    v, rest_v = divmod(a * beta - b * alpha, h)
    if rest or rest_u or rest_v:
        raise DescentInvariantError(f"h={h} does not divide the product terms for p={p}")
    if not 1 <= j < h:
        raise DescentInvariantError(f"multiplier {j} did not decrease below {h}")
    return j, abs(u), abs(v)


def prime_two_squares(p: int, root: Optional[int] = None) -> TwoSquares:
    """p = r^2 + s^2 for p = 2 or a prime with root^2 = -1 (mod p)."""
    if p == 2:
        return TwoSquares(r=1, s=1, n=2)
    if root is None:
        raise InvalidInputError(f"a square root of -1 modulo {p} is required")

    h, a = seed_multiple(p, root)
    b = 1
    steps = 0
    while h > 1:
        h, a, b = descend_step(p, h, a, b)
        steps += 1
    logger.debug(f"{p} = {a}^2 + {b}^2 after {steps} descent steps")
    r, s = sorted((a, b))
    return TwoSquares(r=r, s=s, n=p)


def two_squares_squarefree(b: int, roots: Mapping[int, int]) -> TwoSquares:
    """b = r^2 + s^2, folding prime representations with
    (a^2 + b^2)(c^2 + d^2) = (ac + bd)^2 + (ad - bc)^2, primes ascending.

    roots maps each odd prime factor of b to a square root of -1 modulo it.
    """
    if b < 1:
        raise InvalidInputError(f"b must be positive, got {b}")
    if not is_squarefree(b):
        raise NotSquareFreeError("b", b)

    acc: Optional[Tuple[int, int]] = None
    for p, _ in factorize(b):
        root = roots.get(p)
        if p != 2 and (root is None or (root * root + 1) % p):
            raise MinusOneNotSquareError(p)
        rep = prime_two_squares(p, root)
        if acc is None:
            acc = (rep.r, rep.s)
        else:
            x, y = acc
            acc = (abs(x * rep.r + y * rep.s), abs(x * rep.s - y * rep.r))

    if acc is None:
        return TwoSquares(r=0, s=1, n=1)
    return TwoSquares(r=acc[0], s=acc[1], n=b)
