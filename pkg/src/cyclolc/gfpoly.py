"""Dense polynomials over a prime field F_l and linear complexity of periodic sequences.

Polynomials are numpy int64 coefficient arrays, lowest degree first, with
trailing zeros stripped (the zero polynomial has an empty array).  Linear
complexity is computed two ways: from ``gcd(s(x), x^n - 1)`` and by
Berlekamp-Massey on two periods.  They share no code beyond modular
inverses, so each can serve as an oracle for the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

import numpy as np

from .errors import InvalidInput
from .numthy import factorize

if TYPE_CHECKING:
    from .seqgen import PeriodicSequence

_INT64_BUDGET = 2**62


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else c[:0]


def _convolve(a: np.ndarray, b: np.ndarray, l: int) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    if (l - 1) ** 2 * min(a.size, b.size) < _INT64_BUDGET:
        return np.convolve(a, b) % l
    out = np.convolve(a.astype(object), b.astype(object)) % l
    return out.astype(np.int64)


class Poly:
    """Element of F_l[x].

    Supports ``+ - *``, ``divmod``, ``//``, ``%``, ``**`` and evaluation at an
    integer via ``f(c)``.  Integers are accepted wherever a polynomial is and
    are treated as constants.
    """

    __slots__ = ("coeffs", "l")

    def __init__(self, coeffs: Iterable[int] | np.ndarray, l: int):
        if l < 2:
            raise InvalidInput(f"modulus must be >= 2, got {l}")
        if isinstance(coeffs, np.ndarray):
            c = coeffs.astype(np.int64, copy=True) % l
        else:
            c = np.array([int(v) % l for v in coeffs], dtype=np.int64)
        self.coeffs = _trim(c)
        self.l = l

    @classmethod
    def _raw(cls, coeffs: np.ndarray, l: int) -> "Poly":
        obj = cls.__new__(cls)
        obj.coeffs = _trim(coeffs)
        obj.l = l
        return obj

    @classmethod
    def zero(cls, l: int) -> "Poly":
        return cls._raw(np.zeros(0, dtype=np.int64), l)

    @classmethod
    def one(cls, l: int) -> "Poly":
        return cls.monomial(0, l)

    @classmethod
    def monomial(cls, k: int, l: int, c: int = 1) -> "Poly":
        a = np.zeros(k + 1, dtype=np.int64)
        a[k] = c % l
        return cls._raw(a, l)

    @classmethod
    def x_pow_minus_one(cls, k: int, l: int) -> "Poly":
        """x^k - 1."""
        a = np.zeros(k + 1, dtype=np.int64)
        a[k] = 1
        a[0] = (a[0] - 1) % l
        return cls._raw(a, l)

    # -- basic properties ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return self.coeffs.size - 1

    @property
    def lead(self) -> int:
        return int(self.coeffs[-1]) if self.coeffs.size else 0

    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = pow(self.lead, -1, self.l)
        return Poly._raw(self.coeffs * inv % self.l, self.l)

    def __bool__(self):
        return not self.is_zero()

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k: int) -> int:
        return int(self.coeffs[k]) if 0 <= k < self.coeffs.size else 0

    def __call__(self, c: int) -> int:
        acc = 0
        for v in self.coeffs[::-1].tolist():
            acc = (acc * c + v) % self.l
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly([other], self.l)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.l == other.l and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.l, self.coeffs.tobytes()))

    def __repr__(self):
        if self.is_zero():
            return f"Poly(0, l={self.l})"
        terms = []
        for k, v in enumerate(self.coeffs.tolist()):
            if v:
                mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
                coef = str(v) if (v != 1 or k == 0) else ""
                terms.append(coef + mono)
        return f"Poly({' + '.join(reversed(terms))}, l={self.l})"

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.l != self.l:
                raise InvalidInput(f"modulus mismatch: {self.l} vs {other.l}")
            return other
        if isinstance(other, (int, np.integer)):
            return Poly([int(other)], self.l)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if a.size < b.size:
            a, b = b, a
        out = a.copy()
        out[: b.size] += b
        return Poly._raw(out % self.l, self.l)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw((-self.coeffs) % self.l, self.l)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return Poly._raw(_convolve(self.coeffs, other.coeffs, self.l), self.l)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = _divmod(self.coeffs, other.coeffs, self.l)
        return Poly._raw(q, self.l), Poly._raw(r, self.l)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInput("negative exponent")
        result, base = Poly.one(self.l), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def powmod(self, k: int, mod: "Poly") -> "Poly":
        result, base = Poly.one(self.l) % mod, self % mod
        while k:
            if k & 1:
                result = result * base % mod
            base = base * base % mod
            k >>= 1
        return result

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise InvalidInput("division is not exact")
        return q


def _divmod(a: np.ndarray, b: np.ndarray, l: int) -> tuple[np.ndarray, np.ndarray]:
    db = b.size - 1
    if a.size <= db:
        return np.zeros(0, dtype=np.int64), a.copy()
    r = a.copy()
    q = np.zeros(a.size - db, dtype=np.int64)
    inv = pow(int(b[-1]), -1, l)
    monic = inv == 1
    for i in range(a.size - 1, db - 1, -1):
        c = int(r[i])
        if c == 0:
            continue
        if not monic:
            c = c * inv % l
        q[i - db] = c
        seg = r[i - db : i + 1]
        seg -= c * b
        seg %= l
    return q, r[:db]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if a.l != b.l:
        raise InvalidInput(f"modulus mismatch: {a.l} vs {b.l}")
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: f | x^(l^m) - x and gcd(f, x^(l^(m/r)) - x) = 1 for primes r | m."""
    m = f.degree
    if m < 1:
        return False
    if m == 1:
        return True
    l = f.l
    x = Poly.monomial(1, l)
    f = f.monic()

    def frob_iter(k: int) -> Poly:
        r = x
        for _ in range(k):
            r = r.powmod(l, f)
        return r

    if frob_iter(m) != x % f:
        return False
    for r, _ in factorize(m):
        if poly_gcd(f, frob_iter(m // r) - x).degree > 0:
            return False
    return True


# --------------------------------------------------------------------------
# linear complexity


@dataclass(frozen=True)
class LinearComplexityResult:
    """Linear complexity L and minimal polynomial v(x) = (x^n - 1) / h(x).

    ``minimal_poly`` is monic and is the denominator of the generating
    function sum s_i x^i, so it acts as a connection polynomial:
    ``sum_k v_k s_{i-k} = 0`` for every i >= L.
    """

    L: int
    minimal_poly: Poly
    h: Poly
    method: str  # 'GcdMethod' or 'BerlekampMassey'


def linear_complexity_gcd(seq: "PeriodicSequence") -> LinearComplexityResult:
    n, l = seq.period, seq.modulus
    s = Poly(seq.symbols, l)
    xn1 = Poly.x_pow_minus_one(n, l)
    h = poly_gcd(xn1, s)
    v = xn1.exact_div(h)
    return LinearComplexityResult(n - h.degree, v, h, "GcdMethod")


def berlekamp_massey(symbols: np.ndarray | Iterable[int], l: int) -> tuple[int, Poly]:
    """Shortest LFSR over F_l for a finite symbol stream.

    Returns ``(L, C)`` with ``C(0) = 1`` and ``sum_{k=0}^{L} C_k s_{i-k} = 0``
    for ``L <= i < len(symbols)``.
    """
    s = np.asarray(symbols, dtype=np.int64) % l
    N = s.size
    C = np.zeros(N + 1, dtype=np.int64)
    B = np.zeros(N + 1, dtype=np.int64)
    C[0] = B[0] = 1
    L, shift, bdisc = 0, 1, 1
    rev = s[::-1].copy()  # rev[N-1-i] == s[i]
    small = (l - 1) ** 2 * (N + 1) < _INT64_BUDGET
    for i in range(N):
        # discrepancy d = sum_{k=0}^{L} C_k s_{i-k}
        window = rev[N - 1 - i : N - i + L]
        if small:
            d = int(np.dot(C[: L + 1], window)) % l
        else:
            d = sum(int(c) * int(w) for c, w in zip(C[: L + 1], window)) % l
        if d == 0:
            shift += 1
            continue
        coef = d * pow(bdisc, -1, l) % l
        top = N + 1 - shift
        if 2 * L <= i:
            T = C.copy()
            C[shift:] = (C[shift:] - coef * B[:top]) % l
            L = i + 1 - L
            B = T
            bdisc = d
            shift = 1
        else:
            C[shift:] = (C[shift:] - coef * B[:top]) % l
            shift += 1
    return L, Poly(C[: L + 1], l)


def linear_complexity_bm(seq: "PeriodicSequence") -> LinearComplexityResult:
    """Berlekamp-Massey over two periods, packaged like the gcd result."""
    n, l = seq.period, seq.modulus
    L, conn = berlekamp_massey(seq.periods(2), l)
    v = conn.monic() if L else Poly.one(l)
    xn1 = Poly.x_pow_minus_one(n, l)
    h, r = divmod(xn1, v)
    if not r.is_zero():
        raise InvalidInput("connection polynomial does not divide x^n - 1")
    return LinearComplexityResult(L, v, h, "BerlekampMassey")


def regenerate(connection: Poly, seed: np.ndarray | Iterable[int], length: int) -> np.ndarray:
    """Run the LFSR with the given connection polynomial from ``seed``.

    ``seed`` must hold at least ``deg(connection)`` symbols; the first
    ``deg`` of them are used as the initial state.
    """
    l = connection.l
    c = connection.coeffs
    L = c.size - 1
    if L < 0:
        raise InvalidInput("zero connection polynomial")
    out = np.zeros(length, dtype=np.int64)
    seed = np.asarray(seed, dtype=np.int64)[:L] % l
    if L == 0:
        return out
    out[:L] = seed[:length]
    inv0 = pow(int(c[0]), -1, l)
    taps = c[1:][::-1]  # taps[j] multiplies out[i-L+j]
    for i in range(L, length):
        acc = int(np.dot(taps, out[i - L : i])) % l
        out[i] = (-acc * inv0) % l
    return out


def cyclotomic_polynomial(n: int, l: int) -> Poly:
    """Phi_n(x) over F_l via prod_{d|n} (x^d - 1)^mu(n/d)."""
    divisors = [1]
    for r, k in factorize(n):
        divisors = [d * r**j for d in divisors for j in range(k + 1)]
    num, den = Poly.one(l), Poly.one(l)
    for d in divisors:
        mu = _mobius(n // d)
        if mu == 1:
            num = num * Poly.x_pow_minus_one(d, l)
        elif mu == -1:
            den = den * Poly.x_pow_minus_one(d, l)
    return num.exact_div(den)


def _mobius(k: int) -> int:
    fac = factorize(k)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1
