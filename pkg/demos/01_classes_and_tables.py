"""
Whiteman classes and their cyclotomic numbers
==============================================

"""

import numpy as np

from cyclolc import PrimePair, build_system, classify, quartic_decomposition
from cyclolc.cyclotomy import cyclotomic_numbers_bruteforce, cyclotomic_numbers_formula, table_consistent_b

pair = PrimePair(5, 13)  # n = 65, gcd(4, 12) = 4
sys = build_system(pair, 4, g=2)  # 2 is a primitive root of 5 and of 13
print("x =", sys.x)  # x = 2 (mod 5), x = 1 (mod 13)

for i, D in enumerate(sys.classes):
    print(f"D{i}:", D.tolist())
print("P:", sys.P.tolist())
print("Q:", sys.Q.tolist())

# every residue lands in exactly one cell
print(np.unique(sys.tags, return_counts=True))
print("2 in", classify(2, sys), "  -1 in", classify(-1, sys))

# (i, j) = |(D_i + 1) & D_j|
counted = cyclotomic_numbers_bruteforce(sys)
print(counted.entries)

# the closed form needs a, b from n = a^2 + 4b^2
dec = quartic_decomposition(pair, sys.g1, sys.g2)
print("a =", dec.a, " b =", dec.b, " M =", dec.M)
closed = cyclotomic_numbers_formula(pair, dec)
print(closed.source, closed.letters)
print(closed.entries)
print("agree:", closed == counted)

# the count pins down which sign of b the table wants
print("b reproducing the count:", table_consistent_b(sys, dec))

# a pair with p != q (mod 8) uses the other layout
pair = PrimePair(5, 17)
sys = build_system(pair, 4, g=37)  # g = 2 (mod 5), g = 3 (mod 17)
dec = quartic_decomposition(pair, 2, 3)
print(dec.a, dec.b, cyclotomic_numbers_formula(pair, dec) == cyclotomic_numbers_bruteforce(sys))
