from __future__ import annotations

import pytest

from partialcube import errors
from partialcube.classify import (
    classify,
    is_daisy,
    is_daisy_lemma,
    is_median,
    is_simplex,
    maximal_vertices,
    verify_theorems,
)
from partialcube.families import (
    cycle,
    daisy_cube,
    enumerate_all_downsets,
    fibonacci_cube,
    figure1_graph,
    grid,
    hypercube,
    p4,
    q3minus,
    random_tree,
)
from partialcube.graphcore import all_pairs_distances, build_graph
from partialcube.pcube import canonical_embedding
from partialcube.polyalg import Poly1, shift1


def emb_of(g, base=None):
    return canonical_embedding(g, base)


def max_words(g, base=None):
    e = emb_of(g, base)
    return sorted(e.label_str(v) for v in maximal_vertices(e))


class TestMaximal:
    def test_q3minus(self):
        assert max_words(q3minus()) == ["011", "101", "110"]

    def test_fibonacci3(self):
        assert max_words(fibonacci_cube(3)) == ["010", "101"]

    @pytest.mark.parametrize("base", [0, 5, 7])
    def test_hypercube(self, base):
        assert max_words(hypercube(3), base) == ["111"]


class TestDaisy:
    def test_q3minus(self):
        assert is_daisy(emb_of(q3minus()))

    def test_p4(self):
        v = is_daisy(emb_of(p4()))
        assert not v and v.witness == "010"

    def test_figure1(self):
        assert not is_daisy(emb_of(figure1_graph()))

    def test_interval_criterion(self):
        assert is_daisy_lemma(emb_of(q3minus()))
        assert not is_daisy_lemma(emb_of(p4()))
        for g in enumerate_all_downsets(3):
            assert is_daisy_lemma(emb_of(g))

    def test_interval_criterion_agrees_on_every_base(self):
        for g in (figure1_graph(), q3minus(), p4(), cycle(6), daisy_cube(4, ["1100", "0011", "1010"])):
            dm = all_pairs_distances(g)
            for base in range(g.n_vertices):
                e = canonical_embedding(g, base, dm=dm)
                assert bool(is_daisy(e)) == is_daisy_lemma(e, dm)


class TestMedian:
    def test_values(self):
        assert is_median(p4())
        assert not is_median(q3minus())
        assert is_median(grid(3, 3)) and is_median(random_tree(12, 4))

    def test_c6_witness(self):
        v = is_median(cycle(6))
        (a, b, c), medians = v.witness
        assert not v and medians == ()
        assert {a, b, c} == {0, 2, 4} or {a, b, c} == {1, 3, 5}

    def test_k23_has_two_medians(self):
        g = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        v = is_median(g)
        assert not v and len(v.witness[1]) == 2


class TestSimplex:
    def test_values(self):
        assert is_simplex(classify(hypercube(3), 0))
        assert not is_simplex(classify(q3minus()))
        assert not is_simplex(classify(p4()))

    def test_k1(self):
        f = classify(hypercube(0))
        assert f.is_daisy_at_base and f.is_median and f.is_simplex_at_base

    def test_witnesses_use_labels(self):
        f = classify(q3minus())
        assert set(f.witnesses["median"]) == {"triple", "medians"}
        assert all(len(w) == 3 for w in f.witnesses["median"]["triple"])


class TestTheorems:
    def test_figure1(self):
        r = verify_theorems(figure1_graph())
        assert r.thm2_leq and r.cor_leq and r.prop_xfx_leq
        assert not (r.prop_a or r.prop_b or r.prop_c)
        assert r.all_universal_hold and r.failures() == []

    def test_q3minus(self):
        r = verify_theorems(q3minus())
        assert r.prop_a and r.prop_b and r.prop_c
        assert r.prop_xfx_leq and not r.prop_xfx_equality
        assert r.C == Poly1.parse("3x^2+9x+7") and shift1(r.Cl) == Poly1.parse("x^3+6x^2+12x+8")
        assert not r.thm4_W_eq_Cl

    def test_p4(self):
        r = verify_theorems(p4())
        assert r.prop_xfx_equality and not r.prop_a and not r.thm4_W_eq_Cl
        assert shift1(r.Cl) == Poly1.parse("3x+4")
        assert shift1(r.W) == Poly1.parse("x^3+4x^2+6x+4")

    def test_c6(self):
        r = verify_theorems(cycle(6))
        assert r.prop_xfx_leq and not r.prop_xfx_equality and r.all_universal_hold

    def test_k1(self):
        r = verify_theorems(hypercube(0))
        assert r.Cl is None and r.prop_xfx_leq is None and r.all_universal_hold

    def test_base_sensitivity(self):
        g = q3minus()
        for base in range(g.n_vertices):
            r = verify_theorems(g, base)
            if base == g.base:
                assert r.prop_a and r.prop_b and r.prop_c
            else:
                assert not (r.prop_a and r.prop_b and r.prop_c)

    def test_coordinate_order_irrelevant(self):
        # reversing the coordinates of a daisy cube gives the same verdicts and polynomials
        g = daisy_cube(4, ["1100", "0111"])
        h = daisy_cube(4, ["0011", "1110"])
        a, b = verify_theorems(g), verify_theorems(h)
        assert (a.C, a.W, a.D, a.Cl) == (b.C, b.W, b.D, b.Cl)
        assert a.prop_a == b.prop_a is True

    def test_bad_base(self):
        with pytest.raises(errors.BaseOutOfRangeError):
            verify_theorems(p4(), 4)

    def test_not_partial_cube(self):
        with pytest.raises(errors.NotPartialCubeError):
            verify_theorems(cycle(5))
