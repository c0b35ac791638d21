"""
Joining bisimilar graphs
========================

Two graphs are bisimilar exactly when a third graph maps onto both of
them.  join_witness builds that graph from the largest bisimulation.
"""

from apgsets import Apg, bisimilar, serialize_apg, verify_dhom
from apgsets.constructions import join_witness

g = Apg({"p": ["q"], "q": ["p", "q"]}, "p")
h = Apg({"s": ["s"]}, "s")
print("bisimilar:", bisimilar(g, h))

w = join_witness(g, h)
print(serialize_apg(w.graph))
print("left projection ok:", verify_dhom(w.graph, g, w.left))
print("right projection ok:", verify_dhom(w.graph, h, w.right))
