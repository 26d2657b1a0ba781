"""Recognise a partial cube and print its canonical hypercube labels."""

from partialcube import canonical_embedding, is_partial_cube, theta_classes
from partialcube.families import FIGURE1_VERTICES, cycle, figure1_graph

g = figure1_graph()
print(f"{g.name}: {g.n_vertices} vertices, {g.n_edges} edges, partial cube: {bool(is_partial_cube(g))}")

part = theta_classes(g, base=g.base)
for i, cls in enumerate(part.classes):
    edges = ", ".join(FIGURE1_VERTICES[a] + FIGURE1_VERTICES[b] for a, b in (g.edges[e] for e in cls))
    print(f"  coordinate {i}: {edges}")

emb = canonical_embedding(g, g.base)
for v in range(g.n_vertices):
    print(f"  {FIGURE1_VERTICES[v]} -> {emb.label_str(v)}")

odd = is_partial_cube(cycle(5))
print(f"C5 rejected ({odd.kind}), witness cycle {odd.witness}")
