"""
Witness permutations
====================

Every admissible ordering comes with an explicit permutation realizing it.
"""

from pinnacles import InadmissibleOrderingError, construct_witness, pinnacles_of

for a in [(3, 5, 7), (5, 3, 7), (7, 3, 5), (7, 5, 3), (10, 6, 4, 11, 8)]:
    w = construct_witness(a)
    print(f"{str(a):>20} -> {w}    pinnacles {pinnacles_of(w)}")

# No witness exists for a rejected ordering; the error carries the report.
try:
    construct_witness((6, 10, 4, 11, 8))
except InadmissibleOrderingError as exc:
    print("\nrejected:", exc)
