"""Modular arithmetic helpers: orders, primitive roots, Legendre symbols, CRT.

Everything here works on plain Python ints; moduli are small (p, q are
capped at ``MAX_PRIME``), so trial division is all the factoring we need.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .errors import InvalidInput, NotAUnit

MAX_PRIME = 10_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes in the inclusive range [lo, hi]."""
    return [k for k in range(max(lo, 2), hi + 1) if is_prime(k)]


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of n >= 1 as ((prime, exponent), ...)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mod_pow(base: int, exp: int, m: int) -> int:
    if m < 2:
        raise InvalidInput(f"modulus must be >= 2, got {m}")
    if exp < 0:
        raise InvalidInput("exponent must be nonnegative")
    return pow(base, exp, m)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p.

    Evaluated with the Jacobi reciprocity algorithm rather than Euler's
    criterion, so the two can be checked against each other.
    """
    if p < 3 or not is_prime(p):
        raise InvalidInput(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    result = 1
    n = p
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mult_order(a: int, m: int) -> int:
    """Multiplicative order of a modulo m."""
    if m < 1:
        raise InvalidInput(f"modulus must be positive, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise NotAUnit(f"{a} is not invertible modulo {m}")
    if m == 1:
        return 1
    # start from phi(m) and strip prime factors
    phi = m
    for r, _ in factorize(m):
        phi = phi // r * (r - 1)
    k = phi
    for r, _ in factorize(phi):
        while k % r == 0 and pow(a, k // r, m) == 1:
            k //= r
    return k


def is_primitive_root(g: int, p: int) -> bool:
    return g % p != 0 and mult_order(g, p) == p - 1


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest positive primitive root of the odd prime p."""
    if p < 3 or not is_prime(p):
        raise InvalidInput(f"{p} is not an odd prime")
    for g in range(2, p):
        if is_primitive_root(g, p):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def crt_solve(a1: int, m1: int, a2: int, m2: int) -> int | None:
    """Solve x = a1 (mod m1), x = a2 (mod m2).

    Returns the unique solution in [0, lcm(m1, m2)), or None when
    gcd(m1, m2) does not divide a1 - a2.
    """
    if m1 < 1 or m2 < 1:
        raise InvalidInput("moduli must be positive")
    g = gcd(m1, m2)
    if (a1 - a2) % g:
        return None
    lcm = m1 // g * m2
    if m2 // g == 1:
        return a1 % lcm
    # x = a1 + m1 * t with m1 * t = a2 - a1 (mod m2)
    t = ((a2 - a1) // g) * pow(m1 // g, -1, m2 // g) % (m2 // g)
    return (a1 + m1 * t) % lcm


@dataclass(frozen=True)
class PrimePair:
    """Two distinct odd primes p, q with n = pq, d = gcd(p-1, q-1), e = (p-1)(q-1)/d."""

    p: int
    q: int

    def __post_init__(self):
        for r in (self.p, self.q):
            if not (3 <= r <= MAX_PRIME and is_prime(r)):
                raise InvalidInput(f"{r} is not an odd prime <= {MAX_PRIME}")
        if self.p == self.q:
            raise InvalidInput("p and q must be distinct")

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def d(self) -> int:
        return gcd(self.p - 1, self.q - 1)

    @property
    def e(self) -> int:
        return (self.p - 1) * (self.q - 1) // self.d


def common_primitive_root(pair: PrimePair) -> int:
    """Smallest g in [2, n) that is a primitive root modulo both p and q."""
    for g in range(2, pair.n):
        if is_primitive_root(g, pair.p) and is_primitive_root(g, pair.q):
            return g
    raise AssertionError("unreachable: CRT guarantees a common primitive root")


def generator_from_roots(pair: PrimePair, g1: int, g2: int) -> int:
    """The common primitive root g mod n with g = g1 (mod p) and g = g2 (mod q)."""
    if not is_primitive_root(g1, pair.p):
        raise InvalidInput(f"{g1} is not a primitive root of {pair.p}")
    if not is_primitive_root(g2, pair.q):
        raise InvalidInput(f"{g2} is not a primitive root of {pair.q}")
    return crt_solve(g1, pair.p, g2, pair.q)


def whiteman_x(pair: PrimePair, g: int) -> int:
    """The unit x with x = g (mod p) and x = 1 (mod q)."""
    return crt_solve(g, pair.p, 1, pair.q)
