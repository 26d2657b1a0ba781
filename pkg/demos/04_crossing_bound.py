"""C(x) <= Cl(x+1) for the crossing graph; equality picks out median graphs."""

from partialcube import shift1, verify_theorems
from partialcube.families import cycle, figure1_graph, grid, hypercube, q3minus, random_tree

for g in (random_tree(10, 0), grid(3, 4), hypercube(4), cycle(6), q3minus(), figure1_graph()):
    r = verify_theorems(g)
    print(f"{g.name:>10}  median={r.flags.is_median!s:5}  C={r.C}  Cl(x+1)={shift1(r.Cl)}"
          f"  equal={r.prop_xfx_equality}")
