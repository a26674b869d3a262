"""Whiteman generalized cyclotomic classes modulo n = pq and their cyclotomic numbers.

The classes are ``D_i = {g^s x^i : 0 <= s < e}`` where g is a common
primitive root of p and q and x is the unit with x = g (mod p), x = 1 (mod q).
Together with {0}, P = p Z_q^* and Q = q Z_p^* they partition Z_n.

Every residue of Z_n carries an integer tag in :attr:`CyclotomySystem.tags`:
``0..d-1`` for the classes D_i and the negative codes below for the rest.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from . import numthy
from .errors import (
    FormulaInconsistency,
    InvalidGenerator,
    InvalidInput,
    InvalidOrder,
    InvariantViolation,
)
from .numthy import PrimePair

TAG_ZERO = -1
TAG_P = -2
TAG_Q = -3


@dataclass(frozen=True)
class ResidueClass:
    """Partition cell of a residue: ``kind`` is 'Zero', 'P', 'Q' or 'D'."""

    kind: str
    index: int | None = None

    @classmethod
    def from_tag(cls, tag: int) -> "ResidueClass":
        if tag >= 0:
            return cls("D", int(tag))
        return {TAG_ZERO: cls("Zero"), TAG_P: cls("P"), TAG_Q: cls("Q")}[int(tag)]

    def __str__(self):
        return f"D{self.index}" if self.kind == "D" else self.kind


@dataclass(frozen=True, eq=False)
class CyclotomySystem:
    pair: PrimePair
    g: int
    x: int
    d: int
    classes: tuple[np.ndarray, ...]
    P: np.ndarray
    Q: np.ndarray
    tags: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def e(self) -> int:
        """Size of each class D_i."""
        return (self.pair.p - 1) * (self.pair.q - 1) // self.d

    @property
    def g1(self) -> int:
        return self.g % self.pair.p

    @property
    def g2(self) -> int:
        return self.g % self.pair.q

    def units(self) -> np.ndarray:
        return np.flatnonzero(self.tags >= 0)


def _whiteman_classes(pair: PrimePair, g: int) -> tuple[int, list[np.ndarray]]:
    n, order = pair.n, pair.d
    x = numthy.whiteman_x(pair, g)
    e = pair.e
    gpow = np.empty(e, dtype=np.int64)
    acc = 1
    for s in range(e):
        gpow[s] = acc
        acc = acc * g % n
    classes = []
    xi = 1
    for _ in range(order):
        classes.append(np.sort(gpow * xi % n))
        xi = xi * x % n
    return x, classes


def build_system(pair: PrimePair, d: int = 4, g: int | None = None) -> CyclotomySystem:
    """Materialise the classes of order ``d`` (2 or 4) for ``pair``.

    The Whiteman classes exist for the full order gcd(p-1, q-1); a smaller
    order d dividing it is obtained by merging ``D_i`` over ``i = j (mod d)``.
    """
    if d not in (2, 4):
        raise InvalidOrder(f"order {d} not supported (use 2 or 4)")
    if pair.d % d:
        raise InvalidOrder(f"order {d} does not divide gcd(p-1, q-1) = {pair.d}")
    if g is None:
        g = numthy.common_primitive_root(pair)
    else:
        g %= pair.n
        if not (numthy.is_primitive_root(g, pair.p) and numthy.is_primitive_root(g, pair.q)):
            raise InvalidGenerator(f"{g} is not a common primitive root of {pair.p} and {pair.q}")

    p, q, n = pair.p, pair.q, pair.n
    x, full = _whiteman_classes(pair, g)
    if d != pair.d:
        classes = [np.sort(np.concatenate(full[j::d])) for j in range(d)]
    else:
        classes = full
    P = np.arange(1, q, dtype=np.int64) * p
    Q = np.arange(1, p, dtype=np.int64) * q

    tags = np.full(n, -99, dtype=np.int8)
    hits = np.zeros(n, dtype=np.int64)
    tags[0] = TAG_ZERO
    hits[0] += 1
    tags[P] = TAG_P
    np.add.at(hits, P, 1)
    tags[Q] = TAG_Q
    np.add.at(hits, Q, 1)
    for i, D in enumerate(classes):
        tags[D] = i
        np.add.at(hits, D, 1)
    if not np.all(hits == 1):
        raise InvariantViolation(f"classes for {pair} with g={g} do not partition Z_n")

    for arr in (*classes, P, Q, tags):
        arr.setflags(write=False)
    return CyclotomySystem(pair, g, x, d, tuple(classes), P, Q, tags)


def classify(a: int, sys: CyclotomySystem) -> ResidueClass:
    return ResidueClass.from_tag(sys.tags[a % sys.n])


def partition_counts(sys: CyclotomySystem) -> dict[str, int]:
    tags, counts = np.unique(sys.tags, return_counts=True)
    return {str(ResidueClass.from_tag(t)): int(c) for t, c in zip(tags, counts)}


def rotation_holds(sys: CyclotomySystem) -> bool:
    """Check a * D_i == D_{i+j mod d} for every a in D_j and every i."""
    n, d = sys.n, sys.d
    for j, Dj in enumerate(sys.classes):
        for i, Di in enumerate(sys.classes):
            prod = np.outer(Dj, Di) % n
            if not np.all(sys.tags[prod] == (i + j) % d):
                return False
    return True


# --------------------------------------------------------------------------
# cyclotomic numbers


@dataclass(frozen=True, eq=False)
class CyclotomicNumberTable:
    entries: np.ndarray
    source: str  # 'BruteForce', 'FormulaTable1', 'FormulaTable2'
    letters: dict[str, int] | None = None

    def __eq__(self, other):
        if not isinstance(other, CyclotomicNumberTable):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __getitem__(self, ij):
        return int(self.entries[ij])


def cyclotomic_numbers_bruteforce(sys: CyclotomySystem) -> CyclotomicNumberTable:
    """(i, j) = |(D_i + 1) & D_j| by direct counting."""
    if sys.d != 4:
        raise InvalidOrder("cyclotomic numbers are tabulated for order 4 only")
    table = np.zeros((4, 4), dtype=np.int64)
    for i, Di in enumerate(sys.classes):
        t = sys.tags[(Di + 1) % sys.n]
        t = t[t >= 0]
        table[i] = np.bincount(t, minlength=4)
    table.setflags(write=False)
    return CyclotomicNumberTable(table, "BruteForce")


def mixed_counts(w: int, sys: CyclotomySystem) -> np.ndarray:
    """4x4 grid of |D_i & (D_j + w)| for w in P or Q."""
    n = sys.n
    w %= n
    if sys.tags[w] not in (TAG_P, TAG_Q):
        raise InvalidInput(f"{w} is not in P or Q")
    grid = np.zeros((sys.d, sys.d), dtype=np.int64)
    for i, Di in enumerate(sys.classes):
        t = sys.tags[(Di - w) % n]
        t = t[t >= 0]
        grid[i] = np.bincount(t, minlength=sys.d)
    return grid


def mixed_counts_expected(w: int, pair: PrimePair) -> np.ndarray:
    p, q = pair.p, pair.q
    off = (p - 1) * (q - 1) // 16
    diag = (p - 1) * (q - 5) // 16 if w % p == 0 else (p - 5) * (q - 1) // 16
    grid = np.full((4, 4), off, dtype=np.int64)
    np.fill_diagonal(grid, diag)
    return grid


# --------------------------------------------------------------------------
# quartic decomposition


@dataclass(frozen=True)
class QuarticDecomposition:
    g1: int
    g2: int
    x1: int
    y1: int
    x2: int
    y2: int
    a: int
    b: int
    M: int


def _sum_of_square_and_four_square(r: int) -> tuple[int, int]:
    """Return (x, |y|) with r = x^2 + 4y^2 and x = 1 (mod 4)."""
    for y in range(1, isqrt(r // 4) + 1):
        rest = r - 4 * y * y
        x = isqrt(rest)
        if x * x == rest:
            return (x if x % 4 == 1 else -x), y
    raise InvalidInput(f"{r} has no representation x^2 + 4y^2")


def _signed_component(r: int, g: int) -> tuple[int, int]:
    x, y = _sum_of_square_and_four_square(r)
    target = -pow(-g, (r - 1) // 4, r) * x % r
    for cand in (y, -y):
        if (2 * cand - target) % r == 0:
            return x, cand
    raise InvariantViolation(f"no sign of y satisfies the congruence for r={r}, g={g}")


def quartic_decomposition(pair: PrimePair, g1: int, g2: int) -> QuarticDecomposition:
    """Signed representations p = x1^2+4y1^2, q = x2^2+4y2^2 and the derived (a, b)."""
    p, q = pair.p, pair.q
    if p % 4 != 1 or q % 4 != 1:
        raise InvalidInput("quartic decomposition needs p = q = 1 (mod 4)")
    for g, r in ((g1, p), (g2, q)):
        if not numthy.is_primitive_root(g, r):
            raise InvalidInput(f"{g} is not a primitive root of {r}")
    x1, y1 = _signed_component(p, g1)
    x2, y2 = _signed_component(q, g2)
    eps = numthy.legendre_symbol(2, p) * numthy.legendre_symbol(2, q)
    a = x1 * x2 + 4 * eps * y1 * y2
    b = x1 * y2 - eps * x2 * y1
    M = ((p - 2) * (q - 2) - 1) // 4
    return QuarticDecomposition(g1 % p, g2 % q, x1, y1, x2, y2, a, b, M)


def two_representations(n: int) -> list[tuple[int, int]]:
    """All (a, b) with n = a^2 + 4b^2, a = 1 (mod 4), b > 0, sorted by b."""
    if n % 4 != 1:
        raise InvalidInput("n must be 1 mod 4")
    reps = []
    for b in range(1, isqrt(n // 4) + 1):
        rest = n - 4 * b * b
        a = isqrt(rest)
        if a * a == rest and a > 0:
            reps.append((a if a % 4 == 1 else -a, b))
    if len(reps) != 2:
        raise InvariantViolation(f"expected two representations of {n}, found {reps}")
    return reps


_TABLE1 = ("ABCD", "EEDB", "AEAE", "EDBE")
_TABLE2 = ("ABCD", "BDEE", "CECE", "DEEB")


def _table_letters(same_mod8: bool, a: int, b: int, M: int) -> dict[str, int]:
    if same_mod8:
        eight = {
            "A": 3 * a + 2 * M + 5,
            "B": -a + 4 * b + 2 * M + 1,
            "C": -a + 2 * M + 1,
            "D": -a - 4 * b + 2 * M + 1,
            "E": a + 2 * M - 1,
        }
    else:
        eight = {
            "A": -a + 2 * M + 3,
            "B": -a - 4 * b + 2 * M - 1,
            "C": 3 * a + 2 * M - 1,
            "D": -a + 4 * b + 2 * M - 1,
            "E": a + 2 * M + 1,
        }
    letters = {}
    for k, v in eight.items():
        if v % 8 or v < 0:
            raise FormulaInconsistency(f"8{k} = {v} is not a nonnegative multiple of 8 (a={a}, b={b})")
        letters[k] = v // 8
    return letters


def cyclotomic_numbers_formula(pair: PrimePair, dec: QuarticDecomposition) -> CyclotomicNumberTable:
    return cyclotomic_numbers_from_ab(pair, dec.a, dec.b)


def cyclotomic_numbers_from_ab(pair: PrimePair, a: int, b: int) -> CyclotomicNumberTable:
    p, q = pair.p, pair.q
    if a * a + 4 * b * b != pair.n or a % 4 != 1:
        raise InvalidInput(f"({a}, {b}) is not a representation n = a^2 + 4b^2 with a = 1 mod 4")
    M = ((p - 2) * (q - 2) - 1) // 4
    same = p % 8 == q % 8
    letters = _table_letters(same, a, b, M)
    layout = _TABLE2 if same else _TABLE1
    entries = np.array([[letters[c] for c in row] for row in layout], dtype=np.int64)
    entries.setflags(write=False)
    return CyclotomicNumberTable(entries, "FormulaTable2" if same else "FormulaTable1", letters)


def matching_representations(sys: CyclotomySystem) -> list[tuple[int, int]]:
    """Signed (a, b) among both representations whose formula table equals the count."""
    brute = cyclotomic_numbers_bruteforce(sys)
    out = []
    for a, b in two_representations(sys.n):
        for sb in (b, -b):
            try:
                table = cyclotomic_numbers_from_ab(sys.pair, a, sb)
            except FormulaInconsistency:
                continue
            if table == brute:
                out.append((a, sb))
    return out


def order2_classes(sys: CyclotomySystem) -> tuple[np.ndarray, np.ndarray]:
    """C_0 = D_0 u D_2 and C_1 = D_1 u D_3."""
    if sys.d != 4:
        raise InvalidOrder("order-2 classes are derived from an order-4 system")
    return (
        np.sort(np.concatenate([sys.classes[0], sys.classes[2]])),
        np.sort(np.concatenate([sys.classes[1], sys.classes[3]])),
    )


def table_consistent_b(sys: CyclotomySystem, dec: QuarticDecomposition) -> int | None:
    """The sign of ``dec.b`` under which the closed-form table equals the count.

    Returns ``dec.b`` or ``-dec.b``; None if neither sign reproduces the count.
    """
    brute = cyclotomic_numbers_bruteforce(sys)
    for sb in (dec.b, -dec.b):
        try:
            if cyclotomic_numbers_from_ab(sys.pair, dec.a, sb) == brute:
                return sb
        except FormulaInconsistency:
            continue
    return None
