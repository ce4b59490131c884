"""
Pinnacle sets and slack
=======================

Which sets can be the pinnacle set of some permutation, and how much room
each pinnacle leaves.
"""

from pinnacles import (
    PinnacleSet,
    is_admissible_set,
    is_admissible_set_recursive,
    is_maximally_admissible,
    k_profile,
    pinnacles_of,
    vales_of,
)

# Pinnacles are read straight off a permutation, left to right.
w = "13287564"
print(w, "pinnacles", pinnacles_of(w), "vales", vales_of(w))
print("4523176 pinnacles", pinnacles_of("4523176"))

# {2} cannot work: 2 would need two smaller neighbours.
for s in ["3,5,7", "2", "3,4", "3,5,6", ""]:
    ps = PinnacleSet.parse(s)
    print(f"{{{ps}}}: admissible={is_admissible_set(ps)} recursive={is_admissible_set_recursive(ps)}")

# The slack profile: k_x = (#non-pinnacles <= x) - (#pinnacles <= x) - 1.
# Zero slack means the pinnacles up to x must appear as one block.
s = PinnacleSet.parse("3,5,8,9,13,14")
print(f"\n{'x':>3} {'rank':>4} {'|S_x|':>5} {'|nonS_x|':>8} {'k':>3}")
for e in k_profile(s):
    print(f"{e.x:>3} {e.rank:>4} {e.small_pinnacles:>5} {e.small_nonpinnacles:>8} {e.slack:>3}")

# Maximally admissible sets let every ordering through.
for t in ["3,5,7", "3,6,9", "5,9"]:
    print(f"{{{t}}} maximally admissible: {is_maximally_admissible(PinnacleSet.parse(t))}")
