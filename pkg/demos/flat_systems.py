"""
Solving flat systems of set equations
=====================================

Each variable names a set whose elements are other variables or literal
well-founded sets.  The solution is the collapsed graph of the root.
"""

from apgsets import parse_flat_system, serialize_apg, solve_flat_system

text = """
# x and y contain each other and the empty set
x = {y, {}}
y = {x, {}}
z = {x, {{}}}
root z
"""
system = parse_flat_system(text)
print(serialize_apg(solve_flat_system(system)))
