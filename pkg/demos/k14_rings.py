"""The 14-crossing knot K14n19265 over several coefficient rings.

The invariant depends on the ring: c = 2 and 1+i see one value, c = 3 and
1+w another, matching the Rasmussen invariants over F2 and Q.

Run:  python demos/k14_rings.py
"""

import time

from khss.diagram import parse_pd, seifert_data
from khss.invariants import reduced_s
from khss.rings import ring_from_cli

PD = ("[[1,19,2,18],[19,1,20,28],[20,13,21,14],[12,17,13,18],[16,21,17,22],[5,15,6,14],"
      "[15,5,16,4],[6,27,7,28],[2,7,3,8],[26,3,27,4],[25,23,26,22],[11,9,12,8],"
      "[23,10,24,11],[9,24,10,25]]")

D = parse_pd(PD, name="K14n19265")
r, w, _ = seifert_data(D)
print(f"{D.name}: {D.n_crossings} crossings, w = {w}, r = {r}\n")

for t, c in [("z", "2"), ("z", "3"), ("gauss", "1+i"), ("eisen", "1+w"),
             ("f2-poly", "H"), ("q-poly", "H")]:
    R = ring_from_cli(t, c)
    t0 = time.perf_counter()
    rep = reduced_s(D, R)
    ms = (time.perf_counter() - t0) * 1000
    print(f"  {R.name:6} c = {R.fmt(R.c):4}  d = {rep.d_c}  s = {rep.s:3}   ({ms:.0f} ms)")
