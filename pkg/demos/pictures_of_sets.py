"""
Pictures of sets
================

Every hereditarily finite set has a canonical picture, and decorating that
picture gives the set back.  Cycles have no such decoration.
"""

from apgsets import EMPTY, SetLiteral, canonical_picture, decorate_wf, parse_apg, serialize_apg
from apgsets.errors import CyclicGraph

# von Neumann 2 = {0, 1}
one = SetLiteral([EMPTY])
two = SetLiteral([EMPTY, one])
pic = canonical_picture(two)
print(serialize_apg(pic))

# decoration runs the other way
deco = decorate_wf(pic)
print("decorates to", deco[pic.point])

# the self-loop pictures x = {x}, which no well-founded set satisfies
omega = parse_apg("apg v1\npoint x\nx: x")
try:
    decorate_wf(omega)
except CyclicGraph as exc:
    print("no well-founded decoration:", exc)
