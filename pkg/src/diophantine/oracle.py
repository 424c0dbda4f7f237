"""Brute-force ground truth: exhaustive scans and residue tables."""

from typing import FrozenSet, Optional

from src.config import config
from src.logging_config import get_logger
from src.diophantine.arith import is_perfect_square, isqrt
from src.diophantine.errors import InvalidInputError
from src.diophantine.models import Solution
from src.diophantine.solutions import require_solution

logger = get_logger("oracle")


def _limit(limit: Optional[int]) -> int:
    if limit is None:
        limit = config.oracle.default_limit
    if limit < 1:
        raise InvalidInputError(f"limit must be >= 1, got {limit}")
    return limit


def brute_force_normal(a: int, b: int, limit: Optional[int] = None) -> Optional[Solution]:
    """First (x, y) in lexicographic order over [0, limit]^2 with a*x^2 + b*y^2 a square."""
    limit = _limit(limit)
    for x in range(limit + 1):
        ax2 = a * x * x
        for y in range(limit + 1):
            if x == 0 and y == 0:
                continue
            s = ax2 + b * y * y
            if is_perfect_square(s):
                hit = Solution(x=x, y=y, z=isqrt(s))
                logger.debug(f"normal ({a}, {b}): first hit {hit.as_tuple()}")
                return require_solution((a, b, -1), hit, "brute_force_normal")
    logger.debug(f"normal ({a}, {b}): nothing up to {limit}")
    return None


def brute_force_general(a: int, b: int, c: int, limit: Optional[int] = None) -> Optional[Solution]:
    """First (x, y, z) over [0, limit]^3 in lexicographic order with a*x^2 + b*y^2 + c*z^2 = 0.

    z is determined by (x, y), so the scan runs over (x, y) only.
    """
    if c == 0:
        raise InvalidInputError("c must be nonzero")
    limit = _limit(limit)
    for x in range(limit + 1):
        ax2 = a * x * x
        for y in range(limit + 1):
            if x == 0 and y == 0:
                continue
            z2, rest = divmod(-(ax2 + b * y * y), c)
            if rest or z2 < 0 or not is_perfect_square(z2):
                continue
            z = isqrt(z2)
            if z > limit:
                continue
            hit = Solution(x=x, y=y, z=z)
            logger.debug(f"general ({a}, {b}, {c}): first hit {hit.as_tuple()}")
            return require_solution((a, b, c), hit, "brute_force_general")
    logger.debug(f"general ({a}, {b}, {c}): nothing up to {limit}")
    return None


def residue_table(m: int) -> FrozenSet[int]:
    """{r^2 mod m : 0 <= r <= m/2}."""
    if m < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {m}")
    return frozenset(r * r % m for r in range(m // 2 + 1))
