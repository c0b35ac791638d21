"""
Two pictures of Omega
=====================

The self-loop and the 2-cycle both picture x = {x} under bisimulation, yet
they are told apart by isomorphism and by the Finsler relation.
"""

from apgsets import bisimilar, dhom_exists, finsler_eq, isomorphic, scott_eq
from apgsets.omega import gallery

loop, cycle = gallery("omega1"), gallery("omega2")

rows = [
    ("isomorphic", isomorphic(loop, cycle) is not None),
    ("finsler", finsler_eq(loop, cycle)),
    ("scott", scott_eq(loop, cycle)),
    ("bisimilar", bisimilar(loop, cycle)),
    ("cycle => loop", dhom_exists(cycle, loop) is not None),
    ("loop => cycle", dhom_exists(loop, cycle) is not None),
]
for label, value in rows:
    print(f"{label:>14}: {value}")

# the d-homomorphism folds the cycle onto the loop
print(dhom_exists(cycle, loop))
