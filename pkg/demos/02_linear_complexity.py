"""
Linear complexity two ways
==========================

"""

import numpy as np

from cyclolc import PrimePair, build_system, whiteman_sequence
from cyclolc.gfpoly import Poly, berlekamp_massey, linear_complexity_bm, linear_complexity_gcd, regenerate

sys = build_system(PrimePair(5, 13), 4, g=2)
seq = whiteman_sequence(sys, 2)  # 1 on {0}, P, D0, D1
print("".join(map(str, seq.symbols)))
print("weight", seq.weight)  # 1 + (p+1)(q-1)/2 = 37

# L = n - deg gcd(x^n - 1, s(x))
res = linear_complexity_gcd(seq)
print(res.L, res.h)

# Berlekamp-Massey on two periods finds the same register
bm = linear_complexity_bm(seq)
print(bm.L, bm.minimal_poly == res.minimal_poly)

# the minimal polynomial runs as an LFSR from the first L symbols
out = regenerate(res.minimal_poly, seq.symbols, 3 * seq.period)
print(np.array_equal(out, seq.periods(3)))

# same sequence read over F_3
print(linear_complexity_gcd(whiteman_sequence(sys, 3)).L)

# plain BM on any stream; Fibonacci mod 5 has L = 2
fib = [0, 1]
for _ in range(10):
    fib.append((fib[-1] + fib[-2]) % 5)
print(berlekamp_massey(fib, 5))
print(Poly([1, 1], 2) ** 3)
