"""
Closed forms against computation
================================

"""

from collections import Counter
from math import gcd

from cyclolc import PrimePair, verify

r = verify(PrimePair(5, 13), 2, 2, 2)
print(r.prediction, r.computed_L_gcd, r.match)
print(r.predicates)

# a case where the computed value sits below n because s(1) = 0 in F_7
r = verify(PrimePair(5, 17), 2, 3, 7)
print(r.prediction.branch, r.computed_L_gcd, r.predicates.delta)
print(r.diagnostics["info"]["reference_conflict"])

# small grid, every branch
grid = (5, 13, 17, 29, 37, 41)
tally = Counter()
for p in grid:
    for q in grid:
        if p == q or gcd(p - 1, q - 1) != 4:
            continue
        for l in (2, 3, 5, 7, 11):
            if gcd(l, p * q) == 1:
                rep = verify(PrimePair(p, q), None, None, l, charsum_cap=0)
                tally[rep.prediction.branch, rep.match] += 1
for key, k in sorted(tally.items()):
    print(key, k)

# records are flat and ready for json
rec = r.to_record()
print(list(rec)[:8], "...")
print(sorted(rec["diagnostics"]["checks"]))
