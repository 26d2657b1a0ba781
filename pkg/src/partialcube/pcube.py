"""Djoković–Winkler relation, partial-cube recognition and canonical embeddings.

Theta is evaluated directly from the distance matrix with the four-distance
inequality over all edge pairs; the resulting embedding is then checked for
isometry, which gives a second, independent confirmation of the recognition.

Coordinates of every embedding are the Theta-classes ordered by the smallest
edge id they contain, so labels are deterministic for a given graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from .errors import (
    BaseOutOfRangeError,
    DimensionTooLargeError,
    DisconnectedError,
    IsometryViolationError,
    NotBipartiteError,
    NotPartialCubeError,
    SingletonGraphError,
)
from .graphcore import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    from_mask,
    is_connected,
    iter_mask,
    label_to_str,
    odd_cycle,
    popcount,
)

MAX_NARROW_DIM = 64


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer with an optional counterexample; truthy iff ``holds``."""

    holds: bool
    witness: Any = None
    kind: str | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class ThetaPartition:
    """Theta-classes of a graph.

    ``class_of[e]`` is the class of edge id ``e``; ``classes[i]`` lists the
    edge ids of class ``i``; ``sides[i]`` is the pair of halfspace bitmasks
    ``(W_ab, W_ba)`` for a representative edge ``ab``, oriented so that side 0
    holds the anchor vertex.
    """

    class_of: tuple
    classes: tuple
    sides: tuple
    anchor: int

    @property
    def m(self) -> int:
        return len(self.classes)

    def halfspaces(self, i: int) -> tuple:
        a, b = self.sides[i]
        return from_mask(a), from_mask(b)


@dataclass(frozen=True)
class CanonicalEmbedding:
    """Isometric embedding of ``graph`` into ``Q_dim`` with ``base`` mapped to 0."""

    graph: Graph
    base: int
    dim: int
    labels: tuple
    theta: ThetaPartition | None = field(default=None, compare=False, repr=False)

    def label(self, v: int) -> int:
        return self.labels[v]

    def label_str(self, v: int) -> str:
        return label_to_str(self.labels[v], self.dim)

    @cached_property
    def label_set(self) -> frozenset:
        return frozenset(self.labels)

    @cached_property
    def vertex_of(self) -> dict:
        return {x: v for v, x in enumerate(self.labels)}

    def weight(self, v: int) -> int:
        return popcount(self.labels[v])

    def as_graph(self) -> Graph:
        g = self.graph
        return Graph(g.n_vertices, g.edges, self.labels, self.dim, self.base, g.name)


# -- Theta ------------------------------------------------------------------

def theta_related(g: Graph, dm: DistanceMatrix, e, f) -> bool:
    u, v = e
    x, y = f
    r = dm.rows
    return r[u][x] + r[v][y] != r[u][y] + r[v][x]


def _theta_masks(g: Graph, dm: DistanceMatrix) -> list:
    """``rel[e]`` is the bitmask of edge ids Theta-related to edge ``e``."""
    r = dm.rows
    edges = g.edges
    m = len(edges)
    rel = [1 << i for i in range(m)]
    for i in range(m):
        u, v = edges[i]
        ru, rv = r[u], r[v]
        for j in range(i + 1, m):
            x, y = edges[j]
            if ru[x] + rv[y] != ru[y] + rv[x]:
                rel[i] |= 1 << j
                rel[j] |= 1 << i
    return rel


def _closure_classes(rel: list) -> list:
    """Connected components of the Theta graph, ordered by smallest edge id."""
    m = len(rel)
    seen = 0
    out = []
    for e in range(m):
        if seen >> e & 1:
            continue
        comp = 0
        frontier = 1 << e
        while frontier:
            comp |= frontier
            nxt = 0
            for f in iter_mask(frontier):
                nxt |= rel[f]
            frontier = nxt & ~comp
        seen |= comp
        out.append(comp)
    return out


def _oriented_sides(g: Graph, dm: DistanceMatrix, comps: list, anchor: int) -> tuple:
    r = dm.rows
    n = g.n_vertices
    sides = []
    for comp in comps:
        a, b = g.edges[(comp & -comp).bit_length() - 1]
        ra, rb = r[a], r[b]
        wab = wba = 0
        for w in range(n):
            if ra[w] < rb[w]:
                wab |= 1 << w
            elif rb[w] < ra[w]:
                wba |= 1 << w
        if not wab >> anchor & 1:
            wab, wba = wba, wab
        sides.append((wab, wba))
    return tuple(sides)


def _partition(g: Graph, dm: DistanceMatrix, comps: list, anchor: int) -> ThetaPartition:
    class_of = [0] * g.n_edges
    classes = []
    for i, comp in enumerate(comps):
        members = tuple(iter_mask(comp))
        classes.append(members)
        for e in members:
            class_of[e] = i
    return ThetaPartition(tuple(class_of), tuple(classes),
                          _oriented_sides(g, dm, comps, anchor), anchor)


def _anchor(g: Graph, base: int | None) -> int:
    if base is not None:
        return base
    return g.base if g.base is not None else 0


def theta_classes(g: Graph, dm: DistanceMatrix | None = None,
                  base: int | None = None) -> ThetaPartition:
    """Partition edges by the transitive closure of Theta."""
    if not is_connected(g):
        raise DisconnectedError("Theta-classes need a connected graph")
    if odd_cycle(g) is not None:
        raise NotBipartiteError("graph is not bipartite")
    dm = dm or all_pairs_distances(g)
    comps = _closure_classes(_theta_masks(g, dm))
    return _partition(g, dm, comps, _anchor(g, base))


# -- recognition and embedding ----------------------------------------------

def _labels_from_sides(n: int, sides: tuple) -> list:
    labels = [0] * n
    for i, (_, far) in enumerate(sides):
        for v in iter_mask(far):
            labels[v] |= 1 << i
    return labels


def _isometry_violation(labels, dm: DistanceMatrix):
    r = dm.rows
    n = len(labels)
    for v in range(n):
        lv, rv = labels[v], r[v]
        for w in range(v + 1, n):
            if popcount(lv ^ labels[w]) != rv[w]:
                return v, w
    return None


def _shortest_theta_path(rel: list, src: int, dst: int) -> list:
    prev = {src: None}
    queue = deque([src])
    while queue:
        e = queue.popleft()
        if e == dst:
            break
        for f in iter_mask(rel[e]):
            if f not in prev:
                prev[f] = e
                queue.append(f)
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def _recognize(g: Graph, dm: DistanceMatrix, anchor: int):
    """Return ``(verdict, partition or None)``."""
    if g.n_vertices == 0:
        raise ValueError("empty graph")
    if not is_connected(g):
        raise DisconnectedError("partial-cube recognition needs a connected graph")
    cyc = odd_cycle(g)
    if cyc is not None:
        return Verdict(False, tuple(cyc), "odd_cycle"), None
    rel = _theta_masks(g, dm)
    comps = _closure_classes(rel)
    for comp in comps:
        for e in iter_mask(comp):
            if rel[e] & comp != comp:
                missing = next(iter_mask(comp & ~rel[e]))
                f0, f1, f2 = _shortest_theta_path(rel, e, missing)[:3]
                triple = tuple(g.edges[x] for x in (f0, f1, f2))
                return Verdict(False, triple, "theta_not_transitive"), None
    part = _partition(g, dm, comps, anchor)
    full = (1 << g.n_vertices) - 1
    for i, (a, b) in enumerate(part.sides):
        if a | b != full or a & b:
            return Verdict(False, part.classes[i], "halfspaces_not_complementary"), None
    bad = _isometry_violation(_labels_from_sides(g.n_vertices, part.sides), dm)
    if bad is not None:
        return Verdict(False, bad, "isometry"), None
    return Verdict(True), part


def is_partial_cube(g: Graph, dm: DistanceMatrix | None = None) -> Verdict:
    """Winkler's test: bipartite and Theta transitive, confirmed by an isometric embedding.

    On failure the witness is an odd cycle (vertex list), a Theta path
    ``e, f, h`` with ``e ~ f ~ h`` but not ``e ~ h``, or a vertex pair whose
    labels disagree with their distance.
    """
    dm = dm or all_pairs_distances(g)
    verdict, _ = _recognize(g, dm, _anchor(g, None))
    return verdict


def canonical_embedding(g: Graph, base: int | None = None,
                        dm: DistanceMatrix | None = None,
                        wide: bool = False) -> CanonicalEmbedding:
    dm = dm or all_pairs_distances(g)
    base = _anchor(g, base)
    if not 0 <= base < g.n_vertices:
        raise BaseOutOfRangeError(f"base {base} outside 0..{g.n_vertices - 1}")
    verdict, part = _recognize(g, dm, base)
    if not verdict:
        raise NotPartialCubeError(f"not a partial cube ({verdict.kind})", verdict)
    if part.m > MAX_NARROW_DIM and not wide:
        raise DimensionTooLargeError(
            f"isometric dimension {part.m} exceeds {MAX_NARROW_DIM}; pass wide=True")
    labels = _labels_from_sides(g.n_vertices, part.sides)
    bad = _isometry_violation(labels, dm)
    if bad is not None or labels[base] != 0:
        raise IsometryViolationError(f"embedding is not isometric at {bad}")
    return CanonicalEmbedding(g, base, part.m, tuple(labels), part)


def isometric_dimension(g: Graph) -> int:
    return canonical_embedding(g, base=0 if g.base is None else g.base).dim


def relabel_from_labels(g: Graph, base: int | None = None,
                        dm: DistanceMatrix | None = None) -> CanonicalEmbedding:
    """Re-anchor given labels at ``base`` by XOR and drop constant coordinates."""
    if g.labels is None:
        raise ValueError("graph has no labels")
    base = _anchor(g, base)
    shifted = [x ^ g.labels[base] for x in g.labels]
    used = 0
    for x in shifted:
        used |= x
    coords = list(iter_mask(used))
    labels = []
    for x in shifted:
        y = 0
        for j, c in enumerate(coords):
            if x >> c & 1:
                y |= 1 << j
        labels.append(y)
    dm = dm or all_pairs_distances(g)
    bad = _isometry_violation(labels, dm)
    if bad is not None:
        raise IsometryViolationError(
            f"labels of {bad} are at Hamming distance "
            f"{popcount(labels[bad[0]] ^ labels[bad[1]])} but graph distance {dm[bad]}")
    return CanonicalEmbedding(g, base, len(coords), tuple(labels))


# -- crossing graph ---------------------------------------------------------

def crossing_graph(g: Graph, dm: DistanceMatrix | None = None) -> Graph:
    """Graph on Theta-classes; two classes adjacent iff all four halfspace quadrants meet."""
    if g.n_vertices == 1:
        raise SingletonGraphError("the crossing graph of K_1 is undefined")
    dm = dm or all_pairs_distances(g)
    verdict, part = _recognize(g, dm, _anchor(g, None))
    if not verdict:
        raise NotPartialCubeError(f"not a partial cube ({verdict.kind})", verdict)
    edges = []
    sides = part.sides
    for i in range(part.m):
        a, b = sides[i]
        for j in range(i + 1, part.m):
            u, v = sides[j]
            if a & u and b & u and a & v and b & v:
                edges.append((i, j))
    return Graph(part.m, tuple(edges), name="crossing")


def crossing_graph_from_labels(emb: CanonicalEmbedding) -> Graph:
    """Same graph via bit patterns: coordinates i, j cross iff 00, 01, 10, 11 all occur."""
    if emb.graph.n_vertices == 1:
        raise SingletonGraphError("the crossing graph of K_1 is undefined")
    edges = []
    for i in range(emb.dim):
        for j in range(i + 1, emb.dim):
            seen = {(x >> i & 1, x >> j & 1) for x in emb.labels}
            if len(seen) == 4:
                edges.append((i, j))
    return Graph(emb.dim, tuple(edges), name="crossing")
