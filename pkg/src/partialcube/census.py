"""Counting engines: induced cubes, cubes by distance, vertices by distance, cliques.

Induced cubes are enumerated as ambient subcubes of the canonical
embedding.  A partial cube is an induced subgraph of ``Q_dim`` under that
embedding, and an induced ``Q_k`` of an induced subgraph of a hypercube is
always an ambient subcube, so no subgraph-isomorphism search is needed.
Two brute-force oracles (:func:`oracle_subcube_scan`,
:func:`oracle_isomorphism_count`) exist to check that claim.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator

from .errors import DimensionTooLargeError, TooLargeError
from .graphcore import Graph, iter_mask, label_to_str, popcount
from .pcube import CanonicalEmbedding
from .polyalg import Poly1, Poly2


@dataclass(frozen=True)
class Subcube:
    """Subcube ``{base_label ^ S : S subset of free}``; ``free`` is a coordinate bitmask."""

    base_label: int
    free: int

    @property
    def k(self) -> int:
        return popcount(self.free)

    @property
    def top_label(self) -> int:
        return self.base_label | self.free

    def members(self) -> list:
        out = [self.base_label]
        for c in iter_mask(self.free):
            out += [x | 1 << c for x in out]
        return out

    def describe(self, width: int) -> str:
        word = label_to_str(self.base_label, width)
        return "".join("*" if self.free >> i & 1 else ch for i, ch in enumerate(word))


@dataclass(frozen=True)
class CubeCensus:
    """``c[(k, d)]``: induced k-cubes at distance d from the base; ``w[d]``: vertices at distance d."""

    c: dict
    w: dict

    def totals(self) -> dict:
        out: Counter = Counter()
        for (k, _), n in self.c.items():
            out[k] += n
        return dict(sorted(out.items()))


def enumerate_subcubes(emb: CanonicalEmbedding) -> Iterator[Subcube]:
    """Yield every induced cube of the embedded graph exactly once.

    Each cube is produced from its minimum-label vertex, adding free
    coordinates in increasing order, so no cube is reached twice.
    """
    present = emb.label_set
    for lab in emb.labels:
        up = [c for c in range(emb.dim) if not lab >> c & 1 and lab | 1 << c in present]
        yield from _extend(lab, 0, [lab], up, 0, present)


def _extend(base, free, members, up, start, present):
    yield Subcube(base, free)
    for idx in range(start, len(up)):
        bit = 1 << up[idx]
        grown = [x | bit for x in members]
        if all(x in present for x in grown):
            yield from _extend(base, free | bit, members + grown, up, idx + 1, present)


def cube_census(emb: CanonicalEmbedding) -> CubeCensus:
    c: Counter = Counter()
    for cube in enumerate_subcubes(emb):
        # the base vertex of the cube is the unique member nearest to the anchor
        c[(cube.k, popcount(cube.base_label))] += 1
    w = Counter(popcount(x) for x in emb.labels)
    return CubeCensus(dict(sorted(c.items())), dict(sorted(w.items())))


def cube_polynomial(cc: CubeCensus) -> Poly1:
    return Poly1(cc.totals())


def distance_polynomial(cc: CubeCensus) -> Poly1:
    return Poly1(cc.w)


def distance_cube_polynomial(cc: CubeCensus) -> Poly2:
    return Poly2(cc.c)


# -- oracles ----------------------------------------------------------------

def oracle_subcube_scan(labels: Iterable[int], n: int) -> dict:
    """Count ambient patterns over ``{0, 1, *}^n`` all of whose completions are labels."""
    if n > 16:
        raise DimensionTooLargeError(f"3^{n} patterns is too many")
    present = set(labels)
    counts: Counter = Counter()
    for pattern in product((0, 1, 2), repeat=n):
        fixed = sum(1 << i for i, p in enumerate(pattern) if p == 1)
        stars = [i for i, p in enumerate(pattern) if p == 2]
        ok = True
        for bits in product((0, 1), repeat=len(stars)):
            word = fixed | sum(1 << i for i, b in zip(stars, bits) if b)
            if word not in present:
                ok = False
                break
        if ok:
            counts[len(stars)] += 1
    return dict(sorted(counts.items()))


def _hypercube_edges(k: int) -> set:
    return {frozenset((x, x ^ 1 << i)) for x in range(1 << k) for i in range(k)}


def oracle_isomorphism_count(g: Graph, k: int) -> int:
    """Vertex subsets of size ``2^k`` whose induced subgraph is isomorphic to ``Q_k``."""
    if g.n_vertices > 12 or k > 2 or k < 0:
        raise TooLargeError("isomorphism oracle limited to 12 vertices and k <= 2")
    size = 1 << k
    cube = _hypercube_edges(k)
    count = 0
    for subset in combinations(range(g.n_vertices), size):
        induced = {frozenset((a, b)) for a, b in combinations(subset, 2) if g.has_edge(a, b)}
        if len(induced) != len(cube):
            continue
        for perm in permutations(subset):
            if {frozenset((perm[a], perm[b])) for a, b in map(tuple, cube)} == induced:
                count += 1
                break
    return count


# -- cliques ----------------------------------------------------------------

def clique_census(g: Graph) -> Poly1:
    """Clique polynomial: coefficient ``i`` counts ``i``-cliques, constant term 1."""
    counts = [0] * (g.n_vertices + 1)
    adj = g.adj_mask

    def grow(size, candidates):
        counts[size] += 1
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            # only later vertices, so each clique is met once as a sorted list
            grow(size + 1, candidates & adj[v])

    grow(0, (1 << g.n_vertices) - 1)
    return Poly1(enumerate(counts))
