"""Quadratic residues: square roots modulo primes and square-free moduli, CRT."""

import math
from itertools import combinations
from typing import Dict, Optional

from src.config import config
from src.logging_config import get_logger
from src.diophantine.arith import is_prime, is_squarefree, mod_inverse, prime_factors
from src.diophantine.errors import (
    InvalidInputError,
    NonCoprimeModuliError,
    NotPrimeError,
    NotSquareFreeError,
)
from src.diophantine.models import CongruenceSystem, ResidueWitness

logger = get_logger("residues")


def _tonelli_shanks(a: int, p: int) -> Optional[int]:
    """Some root of a modulo the odd prime p, or None for a non-residue."""
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)

    # p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _root_mod_prime(a: int, p: int, threshold: int) -> Optional[int]:
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if p < threshold:
        for r in range(1, p // 2 + 1):
            if r * r % p == a:
                return r
        return None

    logger.debug(f"Tonelli-Shanks for {a} mod {p}")
    r = _tonelli_shanks(a, p)
    if r is None:
        return None
    return min(r, p - r)


def sqrt_mod_prime(a: int, p: int, threshold: Optional[int] = None) -> Optional[int]:
    """The root of a modulo prime p lying in [0, p/2], or None if a is a non-residue.

    Exhaustive search below the threshold, Tonelli-Shanks above it; both give
    the same root since exactly one of +-r lies in [0, p/2].
    """
    if not is_prime(p):
        raise NotPrimeError(p)
    if threshold is None:
        threshold = config.solver.sqrt_search_threshold
    return _root_mod_prime(a, p, threshold)


def crt_solve(system: CongruenceSystem) -> int:
    """The unique u in [0, prod f) with u = r (mod f) for every congruence."""
    congruences = system.congruences
    for (_, f1), (_, f2) in combinations(congruences, 2):
        if math.gcd(f1, f2) != 1:
            raise NonCoprimeModuliError(f1, f2)

    modulus = system.modulus
    u = 0
    for r, f in congruences:
        n = modulus // f
        u += r * n * mod_inverse(n, f)
    return u % modulus


def make_witness(value: int, modulus: int, x: int) -> ResidueWitness:
    """Witness from any x with x^2 = value (mod modulus), folded into [0, modulus/2]."""
    root = x % modulus
    if 2 * root > modulus:
        root = modulus - root
    return ResidueWitness(value=value, modulus=modulus, root=root)


def combine_roots(w1: ResidueWitness, w2: ResidueWitness) -> ResidueWitness:
    """If a R m and a R n with (m, n) = 1, then a R mn: x = alpha (m), x = beta (n)."""
    if w1.value != w2.value:
        raise InvalidInputError(f"witnesses certify different values {w1.value} and {w2.value}")
    if math.gcd(w1.modulus, w2.modulus) != 1:
        raise NonCoprimeModuliError(w1.modulus, w2.modulus)

    gamma = crt_solve(CongruenceSystem(congruences=((w1.root, w1.modulus), (w2.root, w2.modulus))))
    return make_witness(w1.value, w1.modulus * w2.modulus, gamma)


def _check_squarefree_modulus(m: int) -> None:
    if m < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {m}")
    if not is_squarefree(m):
        raise NotSquareFreeError("modulus", m)


def sqrt_mod_squarefree(a: int, m: int, threshold: Optional[int] = None) -> Optional[ResidueWitness]:
    """Witness that a is a square modulo square-free m, or None.

    Canonical root: CRT of the per-prime canonical roots, folded into [0, m/2].
    """
    _check_squarefree_modulus(m)
    if threshold is None:
        threshold = config.solver.sqrt_search_threshold

    value = a % m
    congruences = []
    for p in prime_factors(m) if m > 1 else []:
        r = _root_mod_prime(value, p, threshold)
        if r is None:
            return None
        congruences.append((r, p))

    gamma = crt_solve(CongruenceSystem(congruences=tuple(congruences)))
    return make_witness(value, m, gamma)


def is_square_mod(a: int, m: int) -> bool:
    return sqrt_mod_squarefree(a, m) is not None


def non_residue_prime(a: int, m: int) -> Optional[int]:
    """First prime factor of square-free m modulo which a is not a square."""
    _check_squarefree_modulus(m)
    threshold = config.solver.sqrt_search_threshold
    for p in prime_factors(m) if m > 1 else []:
        if _root_mod_prime(a, p, threshold) is None:
            return p
    return None


def roots_per_prime(witness: ResidueWitness) -> Dict[int, int]:
    """Reduce a composite witness to one root per prime factor of its modulus."""
    if witness.modulus == 1:
        return {}
    return {p: witness.root % p for p in prime_factors(witness.modulus)}
