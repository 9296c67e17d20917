import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ivp.intfact import factor_integer, is_probable_prime, pollard_rho, primes_up_to, require_prime, v_p


def test_primality_agrees_with_sympy_below_20000():
    ours = [n for n in range(20000) if is_probable_prime(n)]
    assert ours == list(sympy.primerange(0, 20000))


@given(st.integers(2, 10**30))
def test_large_primality_agrees(n):
    assert is_probable_prime(n) == sympy.isprime(n)


@pytest.mark.parametrize("seed", range(10))
def test_complete_factorizations_agree_with_sympy(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 10**22)
    fac = factor_integer(n)
    assert fac.complete
    assert fac.factors == sympy.factorint(n)


def test_rho_finds_factor_of_semiprime():
    n = 1000003 * 1000033
    d = pollard_rho(n)
    assert d in (1000003, 1000033)


def test_budget_exhaustion_leaves_composite():
    n = (2**61 - 1) * (2**89 - 1)
    fac = factor_integer(n, trial_bound=100, rho_iterations=50)
    assert not fac.complete
    assert fac.unfactored == n


def test_negative_numbers_keep_factors():
    assert factor_integer(-8624).factors == {2: 4, 7: 2, 11: 1}


def test_v_p():
    from fractions import Fraction

    assert v_p(48, 2) == 4
    assert v_p(Fraction(3, 8), 2) == -3
    assert v_p(0, 5) is None


def test_require_prime_rejects_composites():
    with pytest.raises(ValueError):
        require_prime(9)
    assert primes_up_to(10) == (2, 3, 5, 7)
