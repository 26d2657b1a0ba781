"""Immutable graphs, hop distances, intervals and convex hulls.

Vertices are dense integer ids ``0..n-1``.  Vertex sets are handled
internally as Python ``int`` bitmasks (bit ``v`` set iff ``v`` is a member)
and exposed as ``frozenset`` at the public surface.

A graph may carry one binary label per vertex.  A label is an ``int``
whose bit ``i`` is coordinate ``i`` of the word; ``width`` fixes the word
length.  Printed words put coordinate 0 leftmost.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BaseOutOfRangeError,
    DisconnectedError,
    DuplicateEdgeError,
    DuplicateLabelError,
    EmptySetError,
    EndpointOutOfRangeError,
    LabelWidthMismatchError,
    NonUnitHammingEdgeError,
    SelfLoopError,
    UnreachableError,
)

UNREACHABLE = -1

VertexSet = frozenset


# -- binary words -----------------------------------------------------------

def popcount(x: int) -> int:
    return bin(x).count("1")


def label_to_str(label: int, width: int) -> str:
    return "".join("1" if label >> i & 1 else "0" for i in range(width))


def str_to_label(word: str) -> int:
    if any(c not in "01" for c in word):
        raise ValueError(f"not a binary word: {word!r}")
    return sum(1 << i for i, c in enumerate(word) if c == "1")


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_mask(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset:
    return frozenset(iter_mask(mask))


def _as_mask(s) -> int:
    return s if isinstance(s, int) else to_mask(s)


# -- graph ------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n_vertices-1``.

    ``edges`` is stored normalized: each pair as ``(min, max)``, pairs in
    sorted order, so the index of a pair is a stable edge id.
    """

    n_vertices: int
    edges: tuple = ()
    labels: tuple | None = None
    width: int | None = None
    base: int | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.n_vertices
        if n < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise SelfLoopError(f"self-loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise EndpointOutOfRangeError(f"edge ({a}, {b}) outside 0..{n - 1}")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

        if self.labels is not None:
            labels = tuple(int(x) for x in self.labels)
            if len(labels) != n:
                raise LabelWidthMismatchError("one label per vertex required")
            width = self.width
            if width is None:
                width = max((x.bit_length() for x in labels), default=0)
            if any(x < 0 or x.bit_length() > width for x in labels):
                raise LabelWidthMismatchError(f"label wider than {width} bits")
            if len(set(labels)) != n:
                raise DuplicateLabelError("labels must be pairwise distinct")
            for a, b in self.edges:
                if popcount(labels[a] ^ labels[b]) != 1:
                    raise NonUnitHammingEdgeError(
                        f"edge ({a}, {b}) joins labels at Hamming distance "
                        f"{popcount(labels[a] ^ labels[b])}"
                    )
            object.__setattr__(self, "labels", labels)
            object.__setattr__(self, "width", width)
        elif self.width is not None:
            raise LabelWidthMismatchError("width given without labels")

        if self.base is not None and not 0 <= self.base < n:
            raise BaseOutOfRangeError(f"base {self.base} outside 0..{n - 1}")

    @cached_property
    def adjacency(self) -> tuple:
        adj = [[] for _ in range(self.n_vertices)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(x)) for x in adj)

    @cached_property
    def adj_mask(self) -> tuple:
        return tuple(to_mask(nb) for nb in self.adjacency)

    @cached_property
    def edge_index(self) -> dict:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj_mask[a] >> b & 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label_str(self, v: int) -> str:
        return label_to_str(self.labels[v], self.width)

    def with_base(self, base: int | None) -> "Graph":
        return Graph(self.n_vertices, self.edges, self.labels, self.width, base, self.name)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n_vertices} m={self.n_edges} base={self.base}>"


def build_graph(n: int, edges: Iterable[Sequence[int]], labels=None, base=None,
                width: int | None = None, name: str | None = None) -> Graph:
    """Validate and build a :class:`Graph`.

    ``labels`` may be ints or binary words (``"0110"``); words fix the width.
    ``base`` may be a vertex id or, for labeled graphs, a word.
    """
    edges = [tuple(e) for e in edges]
    if labels is not None:
        labels = list(labels)
        if labels and isinstance(labels[0], str):
            widths = {len(w) for w in labels}
            if len(widths) != 1:
                raise LabelWidthMismatchError(f"mixed label widths {sorted(widths)}")
            width = widths.pop()
            labels = [str_to_label(w) for w in labels]
    if isinstance(base, str):
        if labels is None:
            raise BaseOutOfRangeError("label-valued base on an unlabeled graph")
        try:
            base = labels.index(str_to_label(base))
        except ValueError:
            raise BaseOutOfRangeError(f"base label {base} is not a vertex") from None
    return Graph(n, tuple(edges), labels, width, base, name)


def graph_from_labels(labels: Iterable, width: int, base: int | None = None,
                      base_label=None, name: str | None = None) -> Graph:
    """Subgraph of the ``width``-cube induced by ``labels``, kept in the given order.

    ``base`` is a vertex index; ``base_label`` (int or word) picks the base by label.
    """
    labels = [str_to_label(x) if isinstance(x, str) else int(x) for x in labels]
    pos = {x: i for i, x in enumerate(labels)}
    edges = []
    for i, x in enumerate(labels):
        for c in range(width):
            if not x >> c & 1:
                j = pos.get(x | 1 << c)
                if j is not None:
                    edges.append((i, j))
    if base_label is not None:
        key = str_to_label(base_label) if isinstance(base_label, str) else base_label
        if key not in pos:
            raise BaseOutOfRangeError(f"base label {base_label} is not a vertex")
        base = pos[key]
    return Graph(len(labels), tuple(edges), tuple(labels), width, base, name)


# -- distances --------------------------------------------------------------

class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold ``UNREACHABLE``."""

    def __init__(self, dist: np.ndarray):
        self.dist = dist
        self.dist.setflags(write=False)
        self.rows = dist.tolist()
        self._intervals: dict = {}

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ab):
        a, b = ab
        return self.rows[a][b]

    def reachable(self, a: int, b: int) -> bool:
        return self.rows[a][b] != UNREACHABLE

    def interval_mask(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        m = self._intervals.get(key)
        if m is None:
            ra, rb = self.rows[a], self.rows[b]
            dab = ra[b]
            if dab == UNREACHABLE:
                raise UnreachableError(f"{a} and {b} are not connected")
            m = 0
            for z in range(len(ra)):
                if ra[z] != UNREACHABLE and ra[z] + rb[z] == dab:
                    m |= 1 << z
            self._intervals[key] = m
        return m


def bfs_distances(g: Graph, source: int) -> list:
    dist = [UNREACHABLE] * g.n_vertices
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    n = g.n_vertices
    d = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for v in range(n):
        d[v] = bfs_distances(g, v)
    return DistanceMatrix(d)


def is_connected(g: Graph) -> bool:
    if g.n_vertices == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def is_bipartite(g: Graph):
    """Return ``(True, coloring)`` or ``(False, None)``; coloring is a tuple of 0/1."""
    color = [-1] * g.n_vertices
    for s in range(g.n_vertices):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False, None
    return True, tuple(color)


def odd_cycle(g: Graph):
    """An odd cycle as a vertex list, or ``None`` if ``g`` is bipartite."""
    parent = [-1] * g.n_vertices
    depth = [-1] * g.n_vertices
    for s in range(g.n_vertices):
        if depth[s] != -1:
            continue
        depth[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if depth[w] == -1:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif depth[w] == depth[v]:
                    left, right = [v], [w]
                    while left[-1] != right[-1]:
                        left.append(parent[left[-1]])
                        right.append(parent[right[-1]])
                    return left + right[-2::-1]
    return None


# -- intervals, convexity ---------------------------------------------------

def interval(g: Graph, dm: DistanceMatrix, a: int, b: int) -> frozenset:
    """Vertices on shortest ``a``-``b`` paths."""
    return from_mask(dm.interval_mask(a, b))


def induced_subgraph(g: Graph, s) -> tuple:
    """Return ``(h, back)`` where ``back[i]`` is the id in ``g`` of vertex ``i`` of ``h``."""
    back = tuple(sorted(iter_mask(_as_mask(s))))
    if not back:
        raise EmptySetError("cannot induce on an empty vertex set")
    fwd = {v: i for i, v in enumerate(back)}
    edges = [(fwd[a], fwd[b]) for a, b in g.edges if a in fwd and b in fwd]
    labels = None if g.labels is None else tuple(g.labels[v] for v in back)
    base = fwd.get(g.base) if g.base is not None else None
    return Graph(len(back), tuple(edges), labels, g.width if labels else None, base), back


def is_isometric_subgraph(g: Graph, s, dm: DistanceMatrix | None = None) -> bool:
    dm = dm or all_pairs_distances(g)
    h, back = induced_subgraph(g, s)
    dh = all_pairs_distances(h)
    if (dh.dist == UNREACHABLE).any():
        raise DisconnectedError("induced subgraph is disconnected")
    sub = dm.dist[np.ix_(back, back)]
    return bool(np.array_equal(sub, dh.dist))


def is_convex(g: Graph, s, dm: DistanceMatrix | None = None) -> bool:
    dm = dm or all_pairs_distances(g)
    mask = _as_mask(s)
    members = list(iter_mask(mask))
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if not dm.reachable(a, b) or dm.interval_mask(a, b) & ~mask:
                return False
    return True


def geodesic_closure_mask(dm: DistanceMatrix, mask: int) -> int:
    """One application of the interval-union map to a vertex bitmask."""
    members = list(iter_mask(mask))
    out = mask
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            out |= dm.interval_mask(a, b)
    return out


def hull_mask(dm: DistanceMatrix, mask: int) -> int:
    # each strict growth adds a vertex, so n rounds always reach the fixpoint
    for _ in range(dm.n + 1):
        grown = geodesic_closure_mask(dm, mask)
        if grown == mask:
            return mask
        mask = grown
    raise AssertionError("interval closure failed to stabilise")


def convex_hull_in_g(g: Graph, s, dm: DistanceMatrix | None = None) -> frozenset:
    """Smallest convex vertex set of ``g`` containing ``s``."""
    dm = dm or all_pairs_distances(g)
    return from_mask(hull_mask(dm, _as_mask(s)))
