import pytest
from sympy import factorint, isprime
from src.diophantine import arith
from src.diophantine.arith import (
    ceil_log4,
    factorize,
    floor_log,
    gcd_bezout,
    is_perfect_square,
    is_prime,
    is_squarefree,
    isqrt,
    mod_centered,
    mod_inverse,
    prime_factors,
    squarefree_split,
)
from src.diophantine.errors import InvalidInputError, NotInvertibleError


@pytest.mark.parametrize("x, y, g", [(17, 13, 1), (12, 18, 6), (0, 5, 5), (-4, 6, 2), (7, 0, 7)])
def test_gcd_bezout_certificate(x, y, g):
    cert = gcd_bezout(x, y)
    assert cert.g == g
    assert cert.u * x + cert.v * y == g

def test_gcd_bezout_known_coefficients():
    cert = gcd_bezout(17, 13)
    assert (cert.g, cert.u, cert.v) == (1, -3, 4)

def test_gcd_bezout_zero_zero():
    cert = gcd_bezout(0, 0)
    assert (cert.g, cert.u, cert.v) == (0, 0, 0)

def test_isqrt():
    assert isqrt(0) == 0
    assert isqrt(24) == 4
    assert isqrt(25) == 5
    assert isqrt(10**30) == 10**15
    with pytest.raises(InvalidInputError):
        isqrt(-1)

def test_is_perfect_square():
    assert is_perfect_square(0)
    assert is_perfect_square(2025)
    assert not is_perfect_square(2026)
    assert not is_perfect_square(-4)

def test_factorize_matches_sympy():
    for n in range(1, 2000):
        assert dict(factorize(n)) == factorint(n), n

def test_factorize_rejects_non_positive():
    with pytest.raises(InvalidInputError):
        factorize(0)

def test_is_prime_matches_sympy():
    for n in range(-5, 2000):
        assert is_prime(n) == isprime(n), n

def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(60) == [2, 3, 5]
    assert prime_factors(221) == [13, 17]

@pytest.mark.parametrize("n, h, s", [(12, 2, 3), (1, 1, 1), (-18, 3, -2), (45, 3, 5), (4, 2, 1)])
def test_squarefree_split(n, h, s):
    split = squarefree_split(n)
    assert (split.h, split.s) == (h, s)
    assert split.value == n

def test_squarefree_split_zero():
    with pytest.raises(InvalidInputError):
        squarefree_split(0)

def test_is_squarefree():
    assert is_squarefree(1)
    assert is_squarefree(30)
    assert is_squarefree(-2)
    assert not is_squarefree(4)
    assert not is_squarefree(-18)

def test_mod_inverse():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(-2, 7) == 3
    assert mod_inverse(5, 1) == 0
    with pytest.raises(NotInvertibleError):
        mod_inverse(6, 9)

def test_mod_centered():
    assert mod_centered(4, 3) == 1
    assert mod_centered(2, 3) == -1
    assert mod_centered(3, 6) == 3
    assert mod_centered(-4, 5) == 1
    assert mod_centered(9, 1) == 0

@pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (4, 1), (5, 2), (13, 2), (16, 2), (17, 3)])
def test_ceil_log4(n, expected):
    assert ceil_log4(n) == expected

def test_ceil_log4_uses_floor_log(mocker):
    spy = mocker.spy(arith, "floor_log")
    assert ceil_log4(17) == 3
    spy.assert_called_once_with(4, 16)
    assert all(4 ** ceil_log4(n) >= n > 4 ** (ceil_log4(n) - 1) for n in range(2, 5000))

def test_ceil_log4_rejects_zero():
    with pytest.raises(InvalidInputError):
        ceil_log4(0)

def test_floor_log():
    assert floor_log(4, 1) == 0
    assert floor_log(4, 15) == 1
    assert floor_log(4, 16) == 2
    assert floor_log(2, 1023) == 9
    with pytest.raises(InvalidInputError):
        floor_log(1, 5)
