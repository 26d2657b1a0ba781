"""The G+ closure: repeatedly add ambient-cube hulls of maximal isometric cycles.

Starting from the canonical labels of ``G`` in ``Q_n`` (``n`` = isometric
dimension), each stage takes the isometric cycles of the current graph,
keeps those whose convex hull *in the current graph* is maximal under
inclusion, and adds the smallest subcube of ``Q_n`` containing each of
them.  The order uses graph hulls and the union uses ambient hulls; this
asymmetry is deliberate and ``order="ambient"`` is offered only for
comparison.

Cycle enumeration is exponential in the worst case and is meant for
graphs of a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import is_median
from .errors import (
    DisconnectedError,
    EmptyInputError,
    IntermediateNotPartialCubeError,
    StageLimitExceededError,
    TooLargeError,
)
from .graphcore import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    graph_from_labels,
    hull_mask,
    is_bipartite,
    is_connected,
    label_to_str,
    to_mask,
)
from .pcube import (
    CanonicalEmbedding,
    canonical_embedding,
    crossing_graph_from_labels,
    is_partial_cube,
    relabel_from_labels,
)

DEFAULT_MAX_VERTICES = 24


@dataclass(frozen=True)
class IsoCycle:
    """Isometric cycle in canonical form: least id first, then the smaller neighbour."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)


@dataclass(frozen=True)
class AmbientSubcube:
    """Subcube of ``Q_width``: ``fixed_bits`` on the coordinates of ``fixed``, rest free."""

    width: int
    fixed: int
    fixed_bits: int
    free: int

    @property
    def fixed_map(self) -> dict:
        return {c: self.fixed_bits >> c & 1 for c in range(self.width) if self.fixed >> c & 1}

    def members(self) -> list:
        out = [self.fixed_bits]
        for c in range(self.width):
            if self.free >> c & 1:
                out += [x | 1 << c for x in out]
        return out


@dataclass(frozen=True)
class GPlusTrace:
    stages: tuple
    cycles_used: tuple
    result: Graph
    dim: int
    embedding: CanonicalEmbedding = field(repr=False, compare=False, default=None)

    @property
    def n_stages(self) -> int:
        return len(self.stages) - 1

    def stage_words(self, i: int) -> list:
        return sorted(label_to_str(x, self.dim) for x in self.stages[i])


def isometric_cycles(g: Graph, dm: DistanceMatrix | None = None,
                     max_len: int | None = None) -> list:
    """All isometric cycles of length at most ``max_len`` (default ``|V|``), each once."""
    dm = dm or all_pairs_distances(g)
    n = g.n_vertices
    if max_len is None:
        max_len = n
    diam = max((max(row) for row in dm.rows), default=0)
    # an isometric m-cycle has two vertices at distance floor(m/2)
    max_len = min(max_len, 2 * diam + 1)
    bip, _ = is_bipartite(g)
    lengths = range(4, max_len + 1, 2) if bip else range(3, max_len + 1)
    r = dm.rows
    adj = g.adjacency
    out = []
    for m in lengths:
        for s in range(n):
            path = [s]

            def extend():
                j = len(path)
                if j == m:
                    if path[1] < path[-1]:
                        out.append(IsoCycle(tuple(path)))
                    return
                for v in adj[path[-1]]:
                    if v <= s:
                        continue
                    rv = r[v]
                    if all(rv[path[i]] == min(j - i, m - j + i) for i in range(j - 1)):
                        path.append(v)
                        extend()
                        path.pop()

            extend()
    return out


def hull_order_maximal(g: Graph, dm: DistanceMatrix, cycles) -> list:
    """Cycles whose convex hull in ``g`` is not strictly inside another cycle's hull."""
    hulls = [hull_mask(dm, c.mask) for c in cycles]
    distinct = set(hulls)
    keep = []
    for c, h in zip(cycles, hulls):
        if not any(h != o and h & o == h for o in distinct):
            keep.append(c)
    return keep


def ambient_hull(labels, width: int | None = None) -> AmbientSubcube:
    """Smallest subcube of the hypercube containing ``labels``."""
    labels = list(labels)
    if not labels:
        raise EmptyInputError("ambient hull of an empty set")
    if width is None:
        width = max(x.bit_length() for x in labels)
    full = (1 << width) - 1
    ones, zeros = full, full
    for x in labels:
        ones &= x
        zeros &= ~x
    fixed = ones | zeros
    return AmbientSubcube(width, fixed, ones, full & ~fixed)


def _ambient_words(g: Graph, cycle: IsoCycle) -> frozenset:
    words = ambient_hull([g.labels[v] for v in cycle.vertices], g.width).members()
    return frozenset(words)


def _stage_graph(old: Graph, words: set, dim: int) -> Graph:
    """Keep the ids of ``old``; append new words in lexicographic order."""
    fresh = sorted(words - set(old.labels), key=lambda x: label_to_str(x, dim))
    return graph_from_labels(list(old.labels) + fresh, dim, base=old.base, name=old.name)


def g_plus(g: Graph, base: int | None = None, order: str = "graph",
           max_vertices: int = DEFAULT_MAX_VERTICES, check_stages: bool = True,
           keep_labels: bool = False) -> GPlusTrace:
    """Closure of ``g`` inside ``Q_n``, ``n`` its isometric dimension.

    ``keep_labels`` reuses the labels already on ``g`` (re-anchored at the
    base) instead of computing the canonical embedding, so that a closure
    can be recomputed in the coordinates of an earlier run.
    """
    if order not in ("graph", "ambient"):
        raise ValueError("order must be 'graph' or 'ambient'")
    if g.n_vertices > max_vertices:
        raise TooLargeError(f"G+ limited to {max_vertices} vertices")
    if keep_labels:
        emb = relabel_from_labels(g, base)
    else:
        emb = canonical_embedding(g, base)
    dim = emb.dim
    current = emb.as_graph()
    stages = [frozenset(current.labels)]
    used = []
    for _ in range(2 ** dim + 1):
        if not is_connected(current):
            raise DisconnectedError(f"stage {len(stages) - 1} is disconnected")
        dm = all_pairs_distances(current)
        if check_stages and not is_partial_cube(current, dm):
            raise IntermediateNotPartialCubeError(
                f"stage {len(stages) - 1} is not a partial cube",
                stage=len(stages) - 1, labels=sorted(current.labels))
        cycles = isometric_cycles(current, dm)
        if order == "graph":
            top = hull_order_maximal(current, dm, cycles)
        else:
            top = _ambient_maximal(current, cycles)
        words = set(stages[-1])
        for c in top:
            words |= _ambient_words(current, c)
        if words == stages[-1]:
            return GPlusTrace(tuple(stages), tuple(used), current, dim, emb)
        stages.append(frozenset(words))
        used.append(tuple(top))
        current = _stage_graph(current, words, dim)
    raise StageLimitExceededError("G+ did not stabilise within 2^n stages")


def _ambient_maximal(g: Graph, cycles) -> list:
    hulls = [_ambient_words(g, c) for c in cycles]
    distinct = set(hulls)
    return [c for c, h in zip(cycles, hulls) if not any(h < o for o in distinct)]


def verify_gplus(g: Graph, trace: GPlusTrace) -> tuple:
    """``(induced, median, same_crossing)`` for ``G`` and its closure."""
    emb = trace.embedding if trace.embedding is not None else canonical_embedding(g)
    plus = trace.result
    words = set(emb.labels)
    pos = {x: i for i, x in enumerate(plus.labels)}

    induced = words <= set(pos)
    if induced:
        mine = {frozenset((emb.labels[a], emb.labels[b])) for a, b in g.edges}
        theirs = {frozenset((plus.labels[a], plus.labels[b])) for a, b in plus.edges
                  if plus.labels[a] in words and plus.labels[b] in words}
        induced = mine == theirs

    median = is_median(plus).holds

    if g.n_vertices == 1:
        same_crossing = plus.n_vertices == 1
    else:
        plus_emb = CanonicalEmbedding(plus, plus.base if plus.base is not None else 0,
                                      trace.dim, plus.labels)
        same_crossing = (crossing_graph_from_labels(emb).edges
                         == crossing_graph_from_labels(plus_emb).edges)
    return induced, median, same_crossing
