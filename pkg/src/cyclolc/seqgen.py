"""Two-prime generalized cyclotomic sequences and their generating polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cyclotomy import CyclotomySystem
from .errors import InvalidInput, InvalidModulus, InvalidOrder
from .gfpoly import Poly
from .numthy import is_prime


@dataclass(frozen=True)
class SequenceSpec:
    """Which positions carry a 1: index 0 gets ``rho``, P and the classes in S get 1."""

    d: int = 4
    S: frozenset[int] = frozenset({0, 1})
    rho: int = 1

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        if not self.S or not self.S <= set(range(self.d)):
            raise InvalidInput(f"S must be a nonempty subset of 0..{self.d - 1}")
        if self.rho not in (0, 1):
            raise InvalidInput("rho must be 0 or 1")


#: the order-4 sequence with rho = 1 and S = {0, 1}
WHITEMAN4 = SequenceSpec(4, frozenset({0, 1}), 1)


@dataclass(frozen=True, eq=False)
class PeriodicSequence:
    period: int
    modulus: int
    symbols: np.ndarray

    def __getitem__(self, i: int) -> int:
        return int(self.symbols[i % self.period])

    def periods(self, count: int) -> np.ndarray:
        """``count`` consecutive periods as one array."""
        return np.tile(self.symbols, count)

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.symbols))


def _check_modulus(l: int, n: int) -> None:
    if not is_prime(l):
        raise InvalidModulus(f"{l} is not prime")
    if gcd(l, n) != 1:
        raise InvalidModulus(f"gcd({l}, {n}) != 1")


def generate(sys: CyclotomySystem, spec: SequenceSpec, l: int) -> PeriodicSequence:
    _check_modulus(l, sys.n)
    if spec.d != sys.d:
        raise InvalidOrder(f"sequence order {spec.d} does not match system order {sys.d}")
    symbols = np.zeros(sys.n, dtype=np.int64)
    symbols[0] = spec.rho
    symbols[sys.P] = 1
    for i in sorted(spec.S):
        symbols[sys.classes[i]] = 1
    symbols %= l
    symbols.setflags(write=False)
    return PeriodicSequence(sys.n, l, symbols)


def whiteman_sequence(sys: CyclotomySystem, l: int) -> PeriodicSequence:
    """The order-4 sequence that is 1 on {0} u P u D_0 u D_1."""
    return generate(sys, WHITEMAN4, l)


def sequence_polynomial(seq: PeriodicSequence) -> Poly:
    return Poly(seq.symbols, seq.modulus)


def companion_polynomial(sys: CyclotomySystem, l: int) -> Poly:
    """t(x): indicator polynomial of D_1 u D_2."""
    if sys.d != 4:
        raise InvalidOrder("companion polynomial is defined for order 4")
    c = np.zeros(sys.n, dtype=np.int64)
    c[sys.classes[1]] = 1
    c[sys.classes[2]] = 1
    return Poly(c, l)


def weight_closed_form(p: int, q: int, l: int) -> int:
    """s(1) = 1 + (p+1)(q-1)/2 reduced mod l."""
    return (1 + (p + 1) * (q - 1) // 2) % l
