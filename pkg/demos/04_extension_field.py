"""
Evaluating s at n-th roots of unity
===================================

"""

import numpy as np

from cyclolc import PrimePair, build_system, whiteman_sequence
from cyclolc import extfield
from cyclolc.gfpoly import linear_complexity_gcd
from cyclolc.seqgen import sequence_polynomial

sys = build_system(PrimePair(5, 13), 4, g=2)
ctx = extfield.build_context(2, 65)  # F_{2^12}, zeta of order 65
print("m =", ctx.m, " modulus", ctx.modulus_poly)

s = sequence_polynomial(whiteman_sequence(sys, 2))
print("s(zeta) =", extfield.eval_at_power(s, ctx, 1))  # in F_2 here

# the value only depends on the cell of the exponent
for i, D in enumerate(sys.classes):
    vals = {tuple(extfield.eval_at_power(s, ctx, int(a))) for a in D}
    print(f"D{i}", len(vals), "distinct value(s)")

# zeros of s among the n-th roots of unity account for n - L
zeros = extfield.zero_exponents(s, ctx)
print(len(zeros), 65 - linear_complexity_gcd(whiteman_sequence(sys, 2)).L)

# eta0 = sum over D0 u D2 of zeta^i
print(extfield.eta_identity_check(sys, ctx).passed)
for c in extfield.unit_sum_checks(sys, ctx):
    print(c)

# d_j(x) = prod over D_j of (x - zeta^i) drops to F_2[x] when 2 is in D0
coeffs, base = extfield.class_factor(sys, ctx, 0)
print(base, extfield.class_factor_poly(sys, ctx, 0))
print(np.count_nonzero(coeffs[:, 1:]))
