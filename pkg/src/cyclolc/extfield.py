"""Arithmetic in F_{l^m}, m = ord_n(l), with a fixed primitive n-th root of unity.

The field is built as F_l[x]/(f) where f is an irreducible factor of the
cyclotomic polynomial Phi_n over F_l, so that zeta = x has order exactly n
and zeta^k is read from a precomputed table.  The factor is isolated with
Berlekamp splitting: in F_l[x]/(x^n - 1) the Frobenius map permutes the
monomials, so the indicator polynomials of the cyclotomic cosets
{i * l^k mod n} span the fixed subalgebra, and gcds against them split Phi_n
without any random search.

Elements are numpy int64 vectors of length m (coefficients of 1, x, ...).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

from .cyclotomy import CyclotomySystem, classify
from .errors import Inapplicable, InvalidModulus, InvariantViolation, TooLarge
from .gfpoly import Poly, cyclotomic_polynomial, poly_gcd
from .numthy import factorize, is_prime, mult_order

#: root scans and class-factor expansion are quadratic in n
ROOT_SCAN_CAP = 300
#: character-sum checks only need a handful of evaluations
CHARSUM_CAP = 5000


@dataclass(frozen=True, eq=False)
class ExtensionContext:
    l: int
    n: int
    m: int
    modulus_poly: Poly
    powers: np.ndarray = field(repr=False)  # powers[k] = zeta^k, shape (n, m)

    @property
    def zeta(self) -> np.ndarray:
        return self.powers[1 % self.n]

    def element(self, c: int) -> np.ndarray:
        """Embed c in F_l."""
        out = np.zeros(self.m, dtype=np.int64)
        out[0] = c % self.l
        return out

    def zeta_pow(self, k: int) -> np.ndarray:
        return self.powers[k % self.n]

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        w = np.convolve(u, v) % self.l
        m = self.m
        if w.size <= m:
            out = np.zeros(m, dtype=np.int64)
            out[: w.size] = w
            return out
        high = w[m:]
        red = self.powers[(m + np.arange(high.size)) % self.n]
        return (w[:m] + high @ red) % self.l

    def pow(self, u: np.ndarray, k: int) -> np.ndarray:
        result, base = self.element(1), u
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_base(self, u: np.ndarray) -> bool:
        """True when u lies in the prime subfield F_l."""
        return not np.any(u[1:])

    def base_value(self, u: np.ndarray) -> int | None:
        return int(u[0]) if self.is_base(u) else None

    def equal(self, u: np.ndarray, v: np.ndarray) -> bool:
        return bool(np.array_equal(u % self.l, v % self.l))


def cyclotomic_cosets(n: int, l: int) -> list[list[int]]:
    """Orbits of multiplication by l on Z_n, each sorted, ordered by least element."""
    seen = np.zeros(n, dtype=bool)
    out = []
    for a in range(n):
        if seen[a]:
            continue
        orbit = []
        b = a
        while not seen[b]:
            seen[b] = True
            orbit.append(b)
            b = b * l % n
        out.append(sorted(orbit))
    return out


def cyclotomic_factor(n: int, l: int) -> Poly:
    """An irreducible factor of Phi_n over F_l (degree ord_n(l))."""
    m = mult_order(l, n)
    F = cyclotomic_polynomial(n, l)
    cosets = cyclotomic_cosets(n, l)
    while F.degree > m:
        for C in cosets:
            ind = np.zeros(max(C) + 1, dtype=np.int64)
            ind[C] = 1
            r = Poly(ind, l) % F
            if r.degree <= 0:
                continue
            found = None
            for c in range(l):
                G = poly_gcd(F, r - c)
                if 0 < G.degree < F.degree:
                    found = G
                    break
            if found is not None:
                other = F.exact_div(found)
                F = found if found.degree <= other.degree else other.monic()
                break
        else:
            raise InvariantViolation(f"could not split Phi_{n} over F_{l}")
    if F.degree != m:
        raise InvariantViolation(f"factor of degree {F.degree}, expected {m}")
    return F


def _power_table(f: Poly, n: int) -> np.ndarray:
    l, m = f.l, f.degree
    low = f.coeffs[:m]
    table = np.zeros((n, m), dtype=np.int64)
    cur = np.zeros(m, dtype=np.int64)
    cur[0] = 1
    for k in range(n):
        table[k] = cur
        top = cur[-1]
        nxt = np.empty(m, dtype=np.int64)
        nxt[0] = 0
        nxt[1:] = cur[:-1]
        if top:
            nxt = (nxt - top * low) % l
        cur = nxt
    if not (cur[0] == 1 and not np.any(cur[1:])):
        raise InvariantViolation("zeta^n != 1")
    table.setflags(write=False)
    return table


@lru_cache(maxsize=64)
def build_context(l: int, n: int) -> ExtensionContext:
    if not is_prime(l):
        raise InvalidModulus(f"{l} is not prime")
    if gcd(l, n) != 1:
        raise InvalidModulus(f"gcd({l}, {n}) != 1")
    if n == 1:
        return ExtensionContext(l, 1, 1, Poly([-1, 1], l), np.ones((1, 1), dtype=np.int64))
    f = cyclotomic_factor(n, l)
    powers = _power_table(f, n)
    ctx = ExtensionContext(l, n, f.degree, f, powers)
    one = ctx.element(1)
    for r, _ in factorize(n):
        if ctx.equal(ctx.zeta_pow(n // r), one):
            raise InvariantViolation(f"zeta has order dividing {n // r}")
    return ctx


def eval_at_power(poly: Poly, ctx: ExtensionContext, a: int) -> np.ndarray:
    """poly(zeta^a) via the power table."""
    if poly.is_zero():
        return ctx.element(0)
    c = poly.coeffs % ctx.l
    idx = (a * np.arange(c.size)) % ctx.n
    return (c @ ctx.powers[idx]) % ctx.l


def index_sum(indices: np.ndarray, ctx: ExtensionContext, a: int = 1) -> np.ndarray:
    """sum of zeta^(a*i) over i in ``indices``."""
    idx = (a * np.asarray(indices, dtype=np.int64)) % ctx.n
    return ctx.powers[idx].sum(axis=0) % ctx.l


def zero_exponents(poly: Poly, ctx: ExtensionContext) -> list[int]:
    """All a in [0, n) with poly(zeta^a) = 0."""
    if ctx.n > ROOT_SCAN_CAP:
        raise TooLarge(f"root scan limited to n <= {ROOT_SCAN_CAP}")
    c = poly.coeffs % ctx.l
    ar = np.arange(c.size)
    out = []
    for a in range(ctx.n):
        val = (c @ ctx.powers[(a * ar) % ctx.n]) % ctx.l
        if not np.any(val):
            out.append(a)
    return out


# --------------------------------------------------------------------------
# identity checks


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _charsum_guard(ctx: ExtensionContext) -> None:
    if ctx.n > CHARSUM_CAP:
        raise TooLarge(f"character-sum checks limited to n <= {CHARSUM_CAP}")


def unit_sum_checks(sys: CyclotomySystem, ctx: ExtensionContext) -> list[CheckResult]:
    """Sums of zeta^i over P, over Q (both -1) and over all classes D_j (1)."""
    _charsum_guard(ctx)
    minus_one = ctx.element(-1)
    sP = index_sum(sys.P, ctx)
    sQ = index_sum(sys.Q, ctx)
    sD = index_sum(np.concatenate(sys.classes), ctx)
    return [
        CheckResult("sum_P", ctx.equal(sP, minus_one)),
        CheckResult("sum_Q", ctx.equal(sQ, minus_one)),
        CheckResult("sum_D", ctx.equal(sD, ctx.element(1))),
    ]


def cell_evaluation_check(sys: CyclotomySystem, l: int, ctx: ExtensionContext) -> list[CheckResult]:
    """Evaluate s at zeta^a for one a per partition cell and compare with the class formula."""
    from .seqgen import companion_polynomial, sequence_polynomial, whiteman_sequence

    _charsum_guard(ctx)
    p, q = sys.pair.p, sys.pair.q
    s = sequence_polynomial(whiteman_sequence(sys, l))
    t = companion_polynomial(sys, l)
    s1 = eval_at_power(s, ctx, 1)
    t1 = eval_at_power(t, ctx, 1)
    one = ctx.element(1)
    expected = {
        "D0": s1,
        "D1": t1,
        "D2": (one - s1) % l,
        "D3": (one - t1) % l,
        "P": ctx.element(-((p - 1) // 2)),
        "Q": ctx.element((q + 1) // 2),
    }
    reps = {f"D{i}": int(D[0]) for i, D in enumerate(sys.classes)}
    reps["P"] = int(sys.P[0])
    reps["Q"] = int(sys.Q[0])
    out = []
    for key in ("D0", "D1", "D2", "D3", "P", "Q"):
        a = reps[key]
        val = eval_at_power(s, ctx, a)
        out.append(CheckResult(f"cell_{key}", ctx.equal(val, expected[key]), f"a={a}"))
    return out


@dataclass(frozen=True)
class EtaReport:
    passed: bool
    eta0: np.ndarray
    in_zero_one: bool
    quarter_zero: bool


def eta0(sys: CyclotomySystem, ctx: ExtensionContext) -> np.ndarray:
    """Sum of zeta^i over C_0 = D_0 u D_2."""
    return index_sum(np.concatenate([sys.classes[0], sys.classes[2]]), ctx)


def eta_identity_check(sys: CyclotomySystem, ctx: ExtensionContext) -> EtaReport:
    """eta0 * (1 - eta0) == -(n - 1)/4, and eta0 in {0, 1} iff (n-1)/4 = 0 mod l."""
    if sys.n % 4 != 1:
        raise Inapplicable("needs n = 1 (mod 4)")
    _charsum_guard(ctx)
    l = ctx.l
    e0 = eta0(sys, ctx)
    lhs = ctx.mul(e0, (ctx.element(1) - e0) % l)
    quarter = (sys.n - 1) // 4
    ok = ctx.equal(lhs, ctx.element(-quarter))
    in01 = ctx.equal(e0, ctx.element(0)) or ctx.equal(e0, ctx.element(1))
    return EtaReport(ok and (in01 == (quarter % l == 0)), e0, in01, quarter % l == 0)


@dataclass(frozen=True)
class QuadraticReport:
    """Outcome of the s(s-1), t(t-1) relations.

    ``groupings`` lists, for each of s and t, every candidate
    ``(sign, const)`` such that ``u(u-1) == (sign*b*(2*eta0 - 1) + const)/2``.
    """

    relation: str
    s_holds: bool
    t_holds: bool
    groupings: dict[str, list[tuple[int, int]]]


def quadratic_relation_check(sys: CyclotomySystem, l: int, ctx: ExtensionContext, b: int) -> QuadraticReport:
    from .seqgen import companion_polynomial, sequence_polynomial, whiteman_sequence

    n, p, q = sys.n, sys.pair.p, sys.pair.q
    if ((n - 1) // 4) % l:
        raise Inapplicable("(n-1)/4 must vanish mod l")
    _charsum_guard(ctx)
    s = sequence_polynomial(whiteman_sequence(sys, l))
    t = companion_polynomial(sys, l)
    one = ctx.element(1)
    sv = eval_at_power(s, ctx, 1)
    tv = eval_at_power(t, ctx, 1)
    s_lhs = ctx.mul(sv, (sv - one) % l)
    t_lhs = ctx.mul(tv, (tv - one) % l)
    core = (2 * eta0(sys, ctx) - one) % l  # 2*eta0 - 1

    groupings: dict[str, list[tuple[int, int]]] = {"s": [], "t": []}
    if l != 2:
        inv2 = pow(2, -1, l)
        for sign in (1, -1):
            for const in (-1, 0, 1):
                rhs = ((sign * b) * core + ctx.element(const)) * inv2 % l
                if ctx.equal(s_lhs, rhs):
                    groupings["s"].append((sign, const))
                if ctx.equal(t_lhs, rhs):
                    groupings["t"].append((sign, const))

    if p % 8 == q % 8:
        # b is even here, so b/2 is an integer and l = 2 is allowed
        half = (b // 2) % l
        s_ok = ctx.equal(s_lhs, half * core % l)
        t_ok = ctx.equal(t_lhs, (-half) * core % l)
        return QuadraticReport("same_mod8", s_ok, t_ok, groupings)
    s_ok = (1, -1) in groupings["s"]
    t_ok = (-1, -1) in groupings["t"]
    return QuadraticReport("distinct_mod8", s_ok, t_ok, groupings)


def frobenius_check(poly: Poly, ctx: ExtensionContext, a: int = 1) -> bool:
    """poly(zeta^(a*l)) == poly(zeta^a)^l."""
    lhs = eval_at_power(poly, ctx, a * ctx.l)
    rhs = ctx.pow(eval_at_power(poly, ctx, a), ctx.l)
    return ctx.equal(lhs, rhs)


def class_factor(sys: CyclotomySystem, ctx: ExtensionContext, j: int) -> tuple[np.ndarray, bool]:
    """Expand prod_{i in D_j} (x - zeta^i).

    Returns the coefficient matrix (row k = coefficient of x^k, as an
    extension element) and whether all coefficients lie in F_l.
    """
    if ctx.n > ROOT_SCAN_CAP:
        raise TooLarge(f"class-factor expansion limited to n <= {ROOT_SCAN_CAP}")
    l, m, n = ctx.l, ctx.m, ctx.n
    ar = np.arange(m)
    coeffs = np.zeros((1, m), dtype=np.int64)
    coeffs[0, 0] = 1
    for i in sys.classes[j].tolist():
        shift = ctx.powers[(i + ar) % n]  # row k: x^k * zeta^i
        times = coeffs @ shift % l  # each coefficient multiplied by zeta^i
        new = np.zeros((coeffs.shape[0] + 1, m), dtype=np.int64)
        new[1:] += coeffs
        new[:-1] -= times
        coeffs = new % l
    base = not np.any(coeffs[:, 1:])
    return coeffs, base


def class_factor_poly(sys: CyclotomySystem, ctx: ExtensionContext, j: int) -> Poly | None:
    """d_j(x) as a polynomial over F_l, or None when it is not defined over F_l."""
    coeffs, base = class_factor(sys, ctx, j)
    return Poly(coeffs[:, 0], ctx.l) if base else None


def ext_poly_mul(A: np.ndarray, B: np.ndarray, ctx: ExtensionContext) -> np.ndarray:
    """Product of two polynomials with extension-element coefficient rows."""
    out = np.zeros((A.shape[0] + B.shape[0] - 1, ctx.m), dtype=np.int64)
    for i in range(A.shape[0]):
        if not np.any(A[i]):
            continue
        for k in range(B.shape[0]):
            out[i + k] += ctx.mul(A[i], B[k])
    return out % ctx.l


def class_of(a: int, sys: CyclotomySystem) -> str:
    return str(classify(a, sys))
