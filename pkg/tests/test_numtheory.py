from math import prod

import pytest
from hypothesis import given, strategies as st

from expcrit.numtheory import factorize, is_prime, multiplicative_order, p_part, prime_divisors, prime_power


@pytest.mark.parametrize("n,p,want", [(24, 2, 8), (360, 3, 9), (7, 2, 1), (1, 5, 1), (125, 5, 125)])
def test_p_part_examples(n, p, want):
    assert p_part(n, p) == want


def test_p_part_rejects_composite_and_zero():
    with pytest.raises(ValueError):
        p_part(12, 4)
    with pytest.raises(ValueError):
        p_part(0, 2)


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_p_part_is_the_largest_prime_power_divisor(n, p):
    q = p_part(n, p)
    assert n % q == 0
    assert (n // q) % p != 0


@given(st.integers(1, 10**6))
def test_factorization_multiplies_back(n):
    f = factorize(n)
    assert prod(p**e for p, e in f) == n
    assert all(is_prime(p) for p, _ in f)
    assert [p for p, _ in f] == sorted(prime_divisors(n))


def test_prime_power_and_orders():
    assert prime_power(81) == (3, 4)
    assert prime_power(12) is None
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 8) == 2
