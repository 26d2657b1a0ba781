"""The four polynomials of the three fixed example graphs."""

from partialcube import shift1, verify_theorems
from partialcube.families import figure1_graph, p4, q3minus
from partialcube.polyalg import leq

for g in (figure1_graph(), p4(), q3minus()):
    r = verify_theorems(g)
    print(g.name)
    print(f"  C        = {r.C}")
    print(f"  W        = {r.W}")
    print(f"  D        = {r.D}")
    print(f"  C(x+y-1) = {r.C_shift_sum}")
    print(f"  Cl       = {r.Cl}")
    print(f"  W(x+1)   = {shift1(r.W)}   Cl(x+1) = {shift1(r.Cl)}")

r = verify_theorems(figure1_graph())
print("figure1: D <= C(x+y-1)?", leq(r.D, r.C_shift_sum), " C(x+y-1) <= D?", leq(r.C_shift_sum, r.D))
