"""W equals the clique polynomial of the crossing graph exactly on simplex graphs."""

from partialcube import verify_theorems
from partialcube.census import clique_census
from partialcube.families import complete, cycle, daisy_cube, p4, simplex_graph

for h in (complete(3), cycle(5), complete(4)):
    s = simplex_graph(h)
    r = verify_theorems(s)
    print(f"{s.name}: W = {r.W}, Cl(G#) = {r.Cl}, Cl(H) = {clique_census(h)}, equal = {r.thm4_W_eq_Cl}")

for g in (p4(), daisy_cube(3, ["110", "011", "101"])):
    r = verify_theorems(g)
    print(f"{g.name}: simplex = {r.flags.is_simplex_at_base}, W = {r.W}, Cl = {r.Cl}")
