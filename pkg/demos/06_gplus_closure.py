"""Close a partial cube into a median graph with the same crossing graph."""

from partialcube import g_plus, verify_gplus
from partialcube.families import cycle, figure1_graph, q3minus

for g in (cycle(6), q3minus(), figure1_graph()):
    t = g_plus(g)
    induced, median, same = verify_gplus(g, t)
    print(f"{g.name}: {g.n_vertices} -> {t.result.n_vertices} vertices in {t.n_stages} stage(s);"
          f" induced={induced} median={median} same crossing graph={same}")
    added = sorted(set(t.stage_words(t.n_stages)) - set(t.stage_words(0)))
    print("  added words:", " ".join(added))
