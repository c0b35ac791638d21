"""
An infinite graph with mutually d-homomorphic, non-isomorphic nodes
===================================================================

J hangs two nodes off a root and points them at alternating positions
of an infinite chain.  Shifting the chain down by one swaps their child
sets, so each maps onto the other.  Finite truncations cannot show this.
"""

from apgsets import descendant_subgraph, isomorphic, mutual_dhom, serialize_apg
from apgsets.omega import j_witnesses, make_J, shift_down, truncate, verify_dhom_symbolic

J = make_J()
print(J.describe(), end="\n\n")

a_kids, ap_kids = J.children_sing["a"][1], J.children_sing["ap"][1]
print("shift(children a) =", shift_down(a_kids), " children ap =", ap_kids)
print("shift(children ap) =", shift_down(ap_kids), " children a =", a_kids)

fwd, bwd = j_witnesses()
print("a -> ap verified:", verify_dhom_symbolic(J, fwd, "a", "ap"))
print("ap -> a verified:", verify_dhom_symbolic(J, bwd, "ap", "a"))

t = truncate(J, 5)
print()
print(serialize_apg(t))
ga, gp = descendant_subgraph(t, "a"), descendant_subgraph(t, "ap")
print("truncated a, ap isomorphic:", isomorphic(ga, gp) is not None)
print("truncated a, ap mutually d-homomorphic:", mutual_dhom(ga, gp))
