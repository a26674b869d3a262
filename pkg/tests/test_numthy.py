from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cyclolc.errors import InvalidInput, NotAUnit
from cyclolc.numthy import (
    PrimePair,
    common_primitive_root,
    crt_solve,
    factorize,
    generator_from_roots,
    is_prime,
    is_primitive_root,
    legendre_symbol,
    mod_pow,
    mult_order,
    primes_between,
    primitive_root,
    whiteman_x,
)

SMALL_PRIMES = primes_between(3, 400)


def naive_order(a, m):
    k, x = 1, a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k


def test_frozen_values():
    assert primes_between(1, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(3233) == ((53, 1), (61, 1))
    assert factorize(720) == ((2, 4), (3, 2), (5, 1))
    assert mult_order(2, 65) == 12
    assert mult_order(3, 85) == 16
    assert primitive_root(61) == 2
    assert primitive_root(41) == 6
    assert legendre_symbol(2, 17) == 1
    assert legendre_symbol(2, 13) == -1
    assert legendre_symbol(26, 13) == 0


def test_crt_examples():
    assert crt_solve(2, 5, 2, 13) == 2
    assert crt_solve(2, 5, 3, 17) == 37
    assert crt_solve(1, 4, 3, 6) == 9
    assert crt_solve(1, 4, 2, 6) is None


def test_generator_and_x_for_worked_examples():
    pair = PrimePair(5, 13)
    assert generator_from_roots(pair, 2, 2) == 2
    assert whiteman_x(pair, 2) == 27
    pair = PrimePair(5, 17)
    assert generator_from_roots(pair, 2, 3) == 37
    assert whiteman_x(pair, 37) == 52
    assert common_primitive_root(pair) == 3


def test_errors():
    with pytest.raises(NotAUnit):
        mult_order(5, 65)
    with pytest.raises(InvalidInput):
        legendre_symbol(3, 15)
    with pytest.raises(InvalidInput):
        mod_pow(2, -1, 7)
    with pytest.raises(InvalidInput):
        PrimePair(5, 5)
    with pytest.raises(InvalidInput):
        PrimePair(5, 9)
    with pytest.raises(InvalidInput):
        PrimePair(2, 5)
    with pytest.raises(InvalidInput):
        generator_from_roots(PrimePair(5, 13), 4, 2)


def test_pair_parameters():
    pair = PrimePair(13, 17)
    assert (pair.n, pair.d, pair.e) == (221, 4, 48)


@given(st.integers(-(10**6), 10**6))
def test_is_prime_matches_trial_division(n):
    expect = n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))
    assert is_prime(n) == expect


@given(st.integers(2, 10**5))
def test_factorize_reconstructs(n):
    f = factorize(n)
    prod = 1
    for r, k in f:
        assert is_prime(r) and k >= 1
        prod *= r**k
    assert prod == n
    assert [r for r, _ in f] == sorted(r for r, _ in f)


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10**4))
def test_legendre_is_euler_criterion(p, a):
    e = pow(a, (p - 1) // 2, p)
    assert legendre_symbol(a, p) == (0 if a % p == 0 else 1 if e == 1 else -1)


@given(st.integers(2, 500), st.integers(1, 10**4))
def test_mult_order_matches_naive(m, a):
    assume(gcd(a, m) == 1)
    assert mult_order(a, m) == naive_order(a, m)


@given(st.sampled_from(SMALL_PRIMES))
def test_primitive_root_has_full_order(p):
    g = primitive_root(p)
    assert naive_order(g, p) == p - 1
    assert is_primitive_root(g, p)
    assert all(not is_primitive_root(h, p) for h in range(2, g))


@given(st.integers(-1000, 1000), st.integers(1, 200), st.integers(-1000, 1000), st.integers(1, 200))
def test_crt_solution_or_inconsistency(a1, m1, a2, m2):
    x = crt_solve(a1, m1, a2, m2)
    lcm = m1 * m2 // gcd(m1, m2)
    if x is None:
        assert (a1 - a2) % gcd(m1, m2) != 0
    else:
        assert 0 <= x < lcm
        assert (x - a1) % m1 == 0 and (x - a2) % m2 == 0


@given(st.integers(0, 10**6), st.integers(0, 10**4), st.integers(2, 10**6))
def test_mod_pow_matches_builtin(b, e, m):
    assert mod_pow(b, e, m) == pow(b, e, m)
