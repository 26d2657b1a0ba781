"""Generators for the graph families used throughout the package.

Labeled generators place vertices in order of (weight, word) so the
all-zero word, when present, is vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import (
    EmptyXError,
    InvalidSpecError,
    TooLargeError,
    WidthMismatchError,
)
from .graphcore import (
    Graph,
    all_pairs_distances,
    build_graph,
    graph_from_labels,
    is_connected,
    is_isometric_subgraph,
    label_to_str,
    popcount,
    str_to_label,
    to_mask,
)


def _word_order(width: int):
    return lambda x: (popcount(x), label_to_str(x, width))


def labeled(labels, width: int, base_label: int | None = 0, name: str | None = None) -> Graph:
    """Induced subgraph of ``Q_width`` on ``labels``, vertices sorted by (weight, word)."""
    labels = sorted(set(labels), key=_word_order(width))
    if base_label is not None and base_label not in labels:
        base_label = None
    return graph_from_labels(labels, width, base_label=base_label, name=name)


def hypercube(n: int) -> Graph:
    if not 0 <= n <= 16:
        raise TooLargeError("hypercube dimension must be in 0..16")
    return labeled(range(1 << n), n, name=f"Q{n}")


def downward_closure(words, n: int) -> set:
    out = set()
    for x in words:
        if x in out:
            continue
        sub = x
        while True:  # standard submask walk
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & x
    return out


def daisy_cube(n: int, X) -> Graph:
    """``Q_n(X)``: all words below some member of ``X``; base is the zero word."""
    X = list(X)
    if not X:
        raise EmptyXError("daisy cube needs a nonempty generator set")
    words = []
    for x in X:
        if isinstance(x, str):
            if len(x) != n:
                raise WidthMismatchError(f"word {x!r} does not have width {n}")
            x = str_to_label(x)
        elif x >> n:
            raise WidthMismatchError(f"label {x} does not fit in {n} bits")
        words.append(x)
    return labeled(downward_closure(words, n), n, name=f"daisy{n}")


def _no_adjacent_ones(x: int) -> bool:
    return not x & (x >> 1)


def fibonacci_cube(n: int) -> Graph:
    if n < 1:
        raise InvalidSpecError("Fibonacci cube needs n >= 1")
    return labeled([x for x in range(1 << n) if _no_adjacent_ones(x)], n, name=f"Fib{n}")


def lucas_cube(n: int) -> Graph:
    """Fibonacci words that do not have both the first and the last bit set."""
    if n < 1:
        raise InvalidSpecError("Lucas cube needs n >= 1")
    ends = 1 | 1 << (n - 1)
    words = [x for x in range(1 << n)
             if _no_adjacent_ones(x) and (n == 1 or x & ends != ends)]
    return labeled(words, n, name=f"Luc{n}")


def maximal_words(words) -> list:
    words = set(words)
    return sorted(x for x in words if not any(y != x and x & y == x for y in words))


def all_cliques(h: Graph) -> list:
    """Every clique of ``h`` (the empty one included) as a vertex bitmask."""
    out = []
    adj = h.adj_mask

    def grow(clique, cand):
        out.append(clique)
        while cand:
            low = cand & -cand
            cand ^= low
            grow(clique | low, cand & adj[low.bit_length() - 1])

    grow(0, (1 << h.n_vertices) - 1)
    return out


def simplex_graph(h: Graph) -> Graph:
    """Graph of all cliques of ``h``; cliques differing in one vertex are adjacent."""
    if h.n_vertices > 20:
        raise TooLargeError("simplex graph limited to 20 vertices")
    return labeled(all_cliques(h), h.n_vertices, name=f"S({h.name or h.n_vertices})")


def path(n: int) -> Graph:
    """``P_n`` labeled by unary words, base at an endpoint."""
    if n < 1:
        raise InvalidSpecError("path needs n >= 1")
    return labeled([(1 << i) - 1 for i in range(n)], n - 1, name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSpecError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], base=0, name=f"C{n}")


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2), name=f"K{n}")


def grid(a: int, b: int) -> Graph:
    """``P_a x P_b`` with concatenated unary labels; base at a corner."""
    if a < 1 or b < 1:
        raise InvalidSpecError("grid sides must be positive")
    words = [((1 << i) - 1) | (((1 << j) - 1) << (a - 1)) for i in range(a) for j in range(b)]
    return labeled(words, a + b - 2, name=f"P{a}xP{b}")


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    if n < 1:
        raise InvalidSpecError("tree needs n >= 1")
    if n == 1:
        return Graph(1, (), base=0, name="tree1")
    if n == 2:
        return Graph(2, ((0, 1),), base=0, name="tree2")
    rng = np.random.default_rng(seed)
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return Graph(n, tuple(edges), base=0, name=f"tree{n}-s{seed}")


# -- fixed example graphs ---------------------------------------------------

FIGURE1_VERTICES = "ABCDEFGHIJ"
FIGURE1_EDGES = ("AB", "BC", "HI", "IJ", "AE", "EH", "CF", "FJ",
                 "ED", "DF", "EG", "GF", "BD", "GI")


def _lettered(vertices: str, edges, base: str, name: str) -> Graph:
    idx = {ch: i for i, ch in enumerate(vertices)}
    return build_graph(len(vertices), [(idx[a], idx[b]) for a, b in edges],
                       base=idx[base], name=name)


def figure1_graph() -> Graph:
    """The 10-vertex, 14-edge partial cube on which D and C(x+y-1) are incomparable, base ``F``."""
    return _lettered(FIGURE1_VERTICES, FIGURE1_EDGES, "F", "figure1")


def p4() -> Graph:
    return _lettered("ABCD", ("AB", "BC", "CD"), "A", "P4")


def q3minus() -> Graph:
    """``Q_3`` minus a vertex: a hexagon plus a centre ``H``, which is the base."""
    edges = ("EF", "FI", "IK", "KJ", "JG", "GE", "HI", "HE", "HJ")
    return _lettered("EFGHIJK", edges, "H", "Q3-")


def figure2_graphs() -> tuple:
    return p4(), q3minus()


# -- random corpora ---------------------------------------------------------

def random_downset(n: int, seed: int, target_density: float = 0.5) -> Graph:
    """Daisy cube grown by adding closures of random words until the density target is met."""
    if not 0 <= n <= 10:
        raise TooLargeError("random_downset limited to n <= 10")
    rng = np.random.default_rng(seed)
    target = target_density * (1 << n)
    current = {0}
    for x in rng.permutation(1 << n):
        if len(current) >= target:
            break
        current |= downward_closure([int(x)], n)
    return labeled(current, n, name=f"downset{n}-s{seed}")


def random_partial_cube_by_deletion(n: int, seed: int, deletions: int) -> Graph:
    """Delete random vertices of ``Q_n`` while the rest stays connected and isometric."""
    if not 0 <= n <= 6:
        raise TooLargeError("deletion generator limited to n <= 6")
    host = hypercube(n)
    dm = all_pairs_distances(host)
    rng = np.random.default_rng(seed)
    alive = set(range(host.n_vertices))
    for _ in range(deletions):
        for v in rng.permutation(host.n_vertices):
            v = int(v)
            if v not in alive or len(alive) == 1:
                continue
            rest = alive - {v}
            sub = graph_from_labels([host.labels[x] for x in sorted(rest)], n)
            if is_connected(sub) and is_isometric_subgraph(host, to_mask(rest), dm):
                alive = rest
                break
        else:
            break
    words = [host.labels[v] for v in alive]
    base = min(words, key=lambda x: label_to_str(x, n))
    g = labeled(words, n, base_label=base, name=f"del{n}-{deletions}-s{seed}")
    return g


def enumerate_all_downsets(n: int) -> Iterator[Graph]:
    """Every downward-closed word set of ``Q_n`` containing the zero word, once each."""
    if not 0 <= n <= 5:
        raise TooLargeError("exhaustive downsets limited to n <= 5")
    order = sorted(range(1, 1 << n), key=_word_order(n))

    def walk(i, chosen):
        if i == len(order):
            yield chosen
            return
        x = order[i]
        yield from walk(i + 1, chosen)
        if all(x & ~(1 << c) in chosen for c in range(n) if x >> c & 1):
            yield from walk(i + 1, chosen | {x})

    for k, words in enumerate(walk(0, frozenset({0}))):
        yield labeled(words, n, name=f"downset{n}-{k}")


# -- family dispatch --------------------------------------------------------

FAMILIES = ("hypercube", "fibonacci", "lucas", "daisy", "simplex", "figure1", "p4",
            "q3minus", "grid", "cycle", "path", "random_downset", "random_pc_deletion")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)


def generate(spec: FamilySpec) -> Graph:
    p = dict(spec.params)
    fam = spec.family
    try:
        if fam == "hypercube":
            return hypercube(int(p["n"]))
        if fam == "fibonacci":
            return fibonacci_cube(int(p["n"]))
        if fam == "lucas":
            return lucas_cube(int(p["n"]))
        if fam == "daisy":
            X = p["x"]
            if isinstance(X, str):
                X = [w for w in X.split(",") if w]
            return daisy_cube(int(p["n"]), X)
        if fam == "simplex":
            return simplex_graph(_simplex_base(p["of"]))
        if fam == "figure1":
            return figure1_graph()
        if fam == "p4":
            return p4()
        if fam == "q3minus":
            return q3minus()
        if fam == "grid":
            return grid(int(p["a"]), int(p["b"]))
        if fam == "cycle":
            return cycle(int(p["n"]))
        if fam == "path":
            return path(int(p["n"]))
        if fam == "random_downset":
            return random_downset(int(p["n"]), int(p.get("seed", 0)),
                                  float(p.get("density", 0.5)))
        if fam == "random_pc_deletion":
            return random_partial_cube_by_deletion(int(p["n"]), int(p.get("seed", 0)),
                                                   int(p.get("deletions", 1)))
    except KeyError as exc:
        raise InvalidSpecError(f"family {fam!r} needs parameter {exc.args[0]!r}") from None
    raise InvalidSpecError(f"unknown family {fam!r}")


def _simplex_base(name: str) -> Graph:
    """Parse ``K3``, ``P4``, ``C5`` style names."""
    kind, size = name[:1].upper(), name[1:]
    if not size.isdigit():
        raise InvalidSpecError(f"cannot parse graph name {name!r}")
    size = int(size)
    if kind == "K":
        return complete(size)
    if kind == "P":
        return build_graph(size, [(i, i + 1) for i in range(size - 1)], name=f"P{size}")
    if kind == "C":
        return cycle(size)
    if kind == "E":
        return Graph(size, (), name=f"E{size}")
    raise InvalidSpecError(f"unknown graph name {name!r}")
