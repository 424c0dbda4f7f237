import pytest
from sympy import primerange
from src.diophantine.arith import is_squarefree
from src.diophantine.errors import (
    InvalidInputError,
    MinusOneNotSquareError,
    NotPrimeError,
    NotSquareFreeError,
)
from src.diophantine.residues import roots_per_prime, sqrt_mod_prime, sqrt_mod_squarefree
from src.diophantine.two_squares import (
    descend_step,
    prime_two_squares,
    seed_multiple,
    two_squares_squarefree,
)


def test_seed_multiple():
    assert seed_multiple(13, 5) == (2, 5)
    assert seed_multiple(13, 8) == (2, 5)
    assert seed_multiple(17, 4) == (1, 4)

def test_seed_multiple_errors():
    with pytest.raises(InvalidInputError):
        seed_multiple(2, 1)
    with pytest.raises(NotPrimeError):
        seed_multiple(15, 2)
    with pytest.raises(MinusOneNotSquareError):
        seed_multiple(7, 2)

def test_descend_step_even_multiplier():
    assert descend_step(13, 2, 5, 1) == (1, 2, 3)

def test_descend_step_odd_multiplier():
    h, a, b = descend_step(29, 5, 12, 1)
    assert (h, a, b) == (1, 5, 2)
    assert a * a + b * b == 29

def test_descend_step_rejects_bad_state():
    with pytest.raises(InvalidInputError):
        descend_step(13, 2, 5, 2)

@pytest.mark.parametrize("p, root, expected", [(5, 2, (1, 2)), (13, 5, (2, 3)), (29, 12, (2, 5)), (17, 4, (1, 4))])
def test_prime_two_squares(p, root, expected):
    rep = prime_two_squares(p, root)
    assert (rep.r, rep.s) == expected
    assert rep.n == p

def test_prime_two_squares_two():
    rep = prime_two_squares(2)
    assert (rep.r, rep.s) == (1, 1)

def test_prime_two_squares_needs_root():
    with pytest.raises(InvalidInputError):
        prime_two_squares(13)

def test_two_squares_squarefree_fold():
    rep = two_squares_squarefree(65, {5: 2, 13: 5})
    assert (rep.r, rep.s) == (8, 1)
    assert rep.n == 65

def test_two_squares_squarefree_with_two():
    rep = two_squares_squarefree(10, {5: 2})
    assert rep.r * rep.r + rep.s * rep.s == 10

def test_two_squares_squarefree_one():
    rep = two_squares_squarefree(1, {})
    assert (rep.r, rep.s, rep.n) == (0, 1, 1)

def test_two_squares_squarefree_errors():
    with pytest.raises(NotSquareFreeError):
        two_squares_squarefree(50, {5: 2})
    with pytest.raises(MinusOneNotSquareError):
        two_squares_squarefree(21, {3: 1, 7: 1})
    with pytest.raises(MinusOneNotSquareError):
        two_squares_squarefree(65, {5: 2})

@pytest.mark.slow
def test_prime_two_squares_sweep():
    for p in primerange(5, 10_001):
        if p % 4 != 1:
            continue
        rep = prime_two_squares(p, sqrt_mod_prime(-1, p))
        assert rep.r * rep.r + rep.s * rep.s == p

@pytest.mark.slow
def test_two_squares_squarefree_sweep():
    for b in range(1, 10_001):
        if not is_squarefree(b):
            continue
        witness = sqrt_mod_squarefree(-1, b)
        if witness is None:
            continue
        rep = two_squares_squarefree(b, roots_per_prime(witness))
        assert rep.r * rep.r + rep.s * rep.s == b
