"""
Where graphs sit in the extensionality lattice
==============================================

classify reports six notions at once and names the least offending pair
for each one that fails.
"""

from apgsets import classify, parse_apg
from apgsets.omega import gallery

graphs = {name: gallery(name) for name in ("Q2", "omega1", "omega2", "vee")}
graphs["diamond"] = parse_apg("apg v1\npoint t\nt: l r\nl: z\nr: z\nz:")

notions = ("extensional", "iso_ext", "finsler_ext", "scott_ext", "strongly_ext", "mutual_dhom_ext")
print(f"{'':>8} " + " ".join(f"{n[:8]:>8}" for n in notions))
for name, g in graphs.items():
    r = classify(g)
    print(f"{name:>8} " + " ".join(f"{'yes' if getattr(r, n) else 'no':>8}" for n in notions))

# Q2 separates mutual-dhom-extensionality from strong extensionality
print("Q2 witness:", classify(graphs["Q2"]).witnesses["strongly_ext"])
