from __future__ import annotations

import networkx as nx
import pytest

from partialcube import errors
from partialcube.classify import is_daisy
from partialcube.families import (
    FAMILIES,
    FamilySpec,
    complete,
    cycle,
    daisy_cube,
    enumerate_all_downsets,
    fibonacci_cube,
    figure1_graph,
    figure2_graphs,
    generate,
    grid,
    hypercube,
    lucas_cube,
    maximal_words,
    path,
    random_downset,
    random_partial_cube_by_deletion,
    random_tree,
    simplex_graph,
)
from partialcube.graphcore import build_graph, is_connected, str_to_label
from partialcube.pcube import canonical_embedding, is_partial_cube


def words(g):
    return sorted(g.label_str(v) for v in range(g.n_vertices))


def iso(a, b):
    return nx.is_isomorphic(nx.Graph(list(a.edges)) if a.edges else nx.empty_graph(a.n_vertices),
                            nx.Graph(list(b.edges)) if b.edges else nx.empty_graph(b.n_vertices))


class TestNamed:
    def test_hypercube(self):
        assert hypercube(0).n_vertices == 1
        assert iso(hypercube(2), cycle(4))
        assert hypercube(4).n_edges == 32 and hypercube(0).base == 0
        with pytest.raises(errors.TooLargeError):
            hypercube(17)

    def test_daisy(self):
        assert words(daisy_cube(2, ["11"])) == ["00", "01", "10", "11"]
        q3m = daisy_cube(3, ["110", "011", "101"])
        assert q3m.n_vertices == 7 and iso(q3m, figure2_graphs()[1])
        assert words(daisy_cube(2, ["10", "01"])) == ["00", "01", "10"]
        with pytest.raises(errors.EmptyXError):
            daisy_cube(2, [])
        with pytest.raises(errors.WidthMismatchError):
            daisy_cube(2, ["111"])

    def test_fibonacci_lucas(self):
        assert words(fibonacci_cube(3)) == ["000", "001", "010", "100", "101"]
        assert fibonacci_cube(4).n_vertices == 8
        assert lucas_cube(4).n_vertices == 7
        assert "1001" not in words(lucas_cube(4))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_fibonacci_is_daisy_of_its_maximal_words(self, n):
        g = fibonacci_cube(n)
        top = maximal_words(g.labels)
        assert set(daisy_cube(n, top).labels) == set(g.labels)
        # counts follow the Fibonacci numbers
        a, b = 1, 2
        for _ in range(n):
            a, b = b, a + b
        assert g.n_vertices == a

    def test_simplex(self):
        assert iso(simplex_graph(complete(2)), hypercube(2))
        assert iso(simplex_graph(complete(3)), hypercube(3))
        p3 = build_graph(3, [(0, 1), (1, 2)])
        dom = simplex_graph(p3)
        assert dom.n_vertices == 6 and dom.n_edges == 7
        assert dom.labels[dom.base] == 0

    def test_figures(self):
        g = figure1_graph()
        assert (g.n_vertices, g.n_edges, g.base) == (10, 14, 5)
        p, q = figure2_graphs()
        assert p.degree(p.base) == 1 and q.degree(q.base) == 3
        assert (q.n_vertices, q.n_edges) == (7, 9)

    def test_small_families(self):
        assert words(path(4)) == ["000", "100", "110", "111"]
        assert grid(3, 4).n_vertices == 12 and grid(3, 4).n_edges == 17
        assert random_tree(15, 2).n_edges == 14 and is_connected(random_tree(15, 2))
        with pytest.raises(errors.InvalidSpecError):
            cycle(2)


class TestRandom:
    def test_downset(self):
        assert random_downset(4, 0, 1.0).n_vertices == 16
        for s in range(10):
            g = random_downset(5, s, 0.4)
            assert is_daisy(canonical_embedding(g, g.base))
            assert g.labels[g.base] == 0
        assert random_downset(4, 3).labels == random_downset(4, 3).labels

    def test_deletion(self):
        assert random_partial_cube_by_deletion(3, 0, 0).n_vertices == 8
        one = random_partial_cube_by_deletion(3, 5, 1)
        assert one.n_vertices == 7 and iso(one, figure2_graphs()[1])
        for s in range(20):
            g = random_partial_cube_by_deletion(4, s, 1 + s % 8)
            assert is_partial_cube(g)
            assert g.label_str(g.base) == min(words(g))
        assert random_partial_cube_by_deletion(5, 9, 6).labels == random_partial_cube_by_deletion(5, 9, 6).labels

    def test_all_downsets(self):
        got = sorted(tuple(words(g)) for g in enumerate_all_downsets(2))
        assert got == sorted([("00",), ("00", "01"), ("00", "10"), ("00", "01", "10"),
                              ("00", "01", "10", "11")])

        def brute(n):
            out = set()
            for m in range(1, 1 << (1 << n)):
                s = {x for x in range(1 << n) if m >> x & 1}
                if 0 in s and all(x & ~(1 << c) in s for x in s for c in range(n)):
                    out.add(frozenset(s))
            return out

        mine = [frozenset(g.labels) for g in enumerate_all_downsets(3)]
        assert len(mine) == len(set(mine)) == 19
        assert set(mine) == brute(3)
        assert sum(1 for _ in enumerate_all_downsets(4)) == 167
        with pytest.raises(errors.TooLargeError):
            next(enumerate_all_downsets(6))


class TestSpec:
    @pytest.mark.parametrize("family, params, n", [
        ("hypercube", {"n": 3}, 8), ("fibonacci", {"n": 4}, 8), ("lucas", {"n": 4}, 7),
        ("daisy", {"n": 3, "x": "110,011,101"}, 7), ("simplex", {"of": "P3"}, 6),
        ("figure1", {}, 10), ("p4", {}, 4), ("q3minus", {}, 7), ("grid", {"a": 2, "b": 3}, 6),
        ("cycle", {"n": 6}, 6), ("path", {"n": 5}, 5),
        ("random_downset", {"n": 4, "seed": 1, "density": 1.0}, 16),
        ("random_pc_deletion", {"n": 3, "seed": 0, "deletions": 0}, 8),
    ])
    def test_generate(self, family, params, n):
        assert family in FAMILIES
        assert generate(FamilySpec(family, params)).n_vertices == n

    def test_errors(self):
        with pytest.raises(errors.InvalidSpecError):
            generate(FamilySpec("hypercube", {}))
        with pytest.raises(errors.InvalidSpecError):
            generate(FamilySpec("nonsense"))
        with pytest.raises(errors.InvalidSpecError):
            generate(FamilySpec("simplex", {"of": "Z3"}))

    def test_word_base(self):
        g = generate(FamilySpec("daisy", {"n": 2, "x": ["11"]}))
        assert g.labels[g.base] == str_to_label("00")
