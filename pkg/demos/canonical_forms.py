"""
Canonical forms under three axioms
==================================

collapse_afa quotients by the largest bisimulation.  The Finsler and Scott
variants merge only nodes whose subgraphs are equivalent in the stronger
sense, repeating until nothing changes.
"""

from apgsets import Apg, collapse_afa, collapse_iter, serialize_apg

# every node has a child, so all of them are bisimilar to the self-loop
g = Apg({"r": ["b", "c"], "b": ["a", "b"], "a": ["a"], "c": ["d"], "d": ["c"]}, "r")
print(serialize_apg(g), end="\n\n")

for label, out in [
    ("afa", collapse_afa(g)),
    ("fafa", collapse_iter(g, "finsler")),
    ("safa", collapse_iter(g, "scott")),
]:
    print(f"-- {label}")
    print(serialize_apg(out))
