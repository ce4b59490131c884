"""
Admissible orderings
====================

Counting the orders in which the pinnacles of a set can appear, and seeing
why a given order fails.
"""

import math

from pinnacles import (
    PinnacleSet,
    count_admissible_orderings,
    enumerate_admissible_orderings,
    interruption_report,
    is_admissible_ordering,
    is_admissible_ordering_reduced,
    reduced_check_elements,
)

print("{3,5,7}:", [str(a) for a in enumerate_admissible_orderings((3, 5, 7))])
print("(3,7,5) admissible?", is_admissible_ordering((3, 7, 5)))

for text in ["3,5,8,9,13,14", "4,6,8,10,11"]:
    s = PinnacleSet.parse(text)
    n = count_admissible_orderings(s)
    print(f"{{{s}}}: {n} of {math.factorial(len(s))} orderings are admissible")

# The interruption report lists, per x, how often the pinnacles <= x are
# split apart by larger ones, against how often that is allowed.
for a in [(10, 6, 4, 11, 8), (6, 10, 4, 11, 8)]:
    report = interruption_report(a)
    print(f"\n{report.ordering}: admissible={report.admissible}")
    for r in report.per_x:
        flag = "  <-- too many" if r.violated else ""
        print(f"  x={r.x:>2} allowed={r.allowed} actual={r.actual}{flag}")

# Most of those bounds are implied by a few of them.
s = PinnacleSet.parse("3,5,8,9,13,14")
print("\nonly these down-sets need checking:", reduced_check_elements(s))
print("reduced check on (3,9,5,8,13,14):", is_admissible_ordering_reduced((3, 9, 5, 8, 13, 14)))
