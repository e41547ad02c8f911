"""Compare the reduced and unreduced invariants, and check mirror symmetry.

Run:  python demos/reduced_vs_unreduced.py
"""

from khss.diagram import knot, knot_names, mirror
from khss.invariants import epsilon_c, reduced_s, unreduced_s
from khss.rings import ring_from_cli

rings = [ring_from_cli("z", "2"), ring_from_cli("z", "3"), ring_from_cli("f3-poly", "H")]

print("knot    " + "".join(f"{R.name + ' c=' + R.fmt(R.c):>16}" for R in rings))
for name in knot_names()[:12]:
    D = knot(name)
    cells = []
    for R in rings:
        a, b = reduced_s(D, R).s, unreduced_s(D, R).s
        cells.append(f"{a:>4} /{b:>3} eps={b - a}")
    print(f"{name:6}" + "".join(f"{cell:>16}" for cell in cells))

# mirror images flip the sign
R = rings[1]
for name in ("3_1", "5_2", "7_4", "8_19"):
    D = knot(name)
    print(f"{name}: s = {reduced_s(D, R).s}, s(mirror) = {reduced_s(mirror(D), R).s}, "
          f"epsilon = {epsilon_c(D, R)}")
