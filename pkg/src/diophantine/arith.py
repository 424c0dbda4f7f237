"""Exact integer primitives: gcd/Bezout, square roots, factorization, logs."""

import math
from typing import List, Tuple

from src.diophantine.errors import InvalidInputError, NotInvertibleError
from src.diophantine.models import BezoutCertificate, SquareFreeSplit


def gcd_bezout(x: int, y: int) -> BezoutCertificate:
    """Extended Euclid: return (g, u, v) with u*x + v*y = g = gcd(|x|, |y|).

    gcd(0, 0) is reported as 0 with u = v = 0.
    """
    if x == 0 and y == 0:
        return BezoutCertificate(g=0, u=0, v=0)

    old_r, r = abs(x), abs(y)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t

    u = -old_s if x < 0 else old_s
    v = -old_t if y < 0 else old_t
    return BezoutCertificate(g=old_r, u=u, v=v)


def isqrt(n: int) -> int:
    """Largest r with r*r <= n."""
    if n < 0:
        raise InvalidInputError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime-power factorization by trial division up to isqrt(n)."""
    if n <= 0:
        raise InvalidInputError(f"factorize needs n >= 1, got {n}")

    factors = []
    exponent = 0
    while n % 2 == 0:
        n //= 2
        exponent += 1
    if exponent:
        factors.append((2, exponent))

    d = 3
    while d * d <= n:
        exponent = 0
        while n % d == 0:
            n //= d
            exponent += 1
        if exponent:
            factors.append((d, exponent))
        d += 2
    if n > 1:
        factors.append((n, 1))
    return factors


def prime_factors(n: int) -> List[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == [(n, 1)]


def squarefree_split(n: int) -> SquareFreeSplit:
    """Write n = h^2 * s with |s| square-free; the sign stays on s."""
    if n == 0:
        raise InvalidInputError("squarefree_split of zero")

    h, s = 1, -1 if n < 0 else 1
    for p, e in factorize(abs(n)):
        h *= p ** (e // 2)
        if e % 2:
            s *= p
    return SquareFreeSplit(h=h, s=s)


def is_squarefree(n: int) -> bool:
    if n == 0:
        raise InvalidInputError("is_squarefree of zero")
    return all(e == 1 for _, e in factorize(abs(n)))


def mod_inverse(a: int, m: int) -> int:
    """w in [0, m) with a*w = 1 (mod m); 0 when m == 1."""
    if m < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    cert = gcd_bezout(a, m)
    if cert.g != 1:
        raise NotInvertibleError(a, m)
    return cert.u % m


def mod_centered(a: int, m: int) -> int:
    """Representative b of a mod m with -m/2 < b <= m/2."""
    if m < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {m}")
    b = a % m
    if 2 * b > m:
        b -= m
    return b


def ceil_log4(n: int) -> int:
    """Smallest l >= 0 with 4**l >= n."""
    if n <= 0:
        raise InvalidInputError(f"ceil_log4 needs n >= 1, got {n}")
    if n == 1:
        return 0
    return floor_log(4, n - 1) + 1


def floor_log(base: int, m: int) -> int:
    """The l0 with base**l0 <= m < base**(l0 + 1)."""
    if base < 2 or m < 1:
        raise InvalidInputError(f"floor_log needs base >= 2 and m >= 1, got ({base}, {m})")
    l, power = 0, base
    while power <= m:
        power *= base
        l += 1
    return l
