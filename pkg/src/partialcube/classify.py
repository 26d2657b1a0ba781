"""Structure recognition and the identity/inequality checks on the four polynomials.

Everything here is relative to an anchored embedding: the chosen base
vertex carries the all-zero label, and the order on labels is bitwise
containment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .census import clique_census, cube_census, cube_polynomial, distance_cube_polynomial, distance_polynomial
from .errors import BaseOutOfRangeError
from .graphcore import DistanceMatrix, Graph, all_pairs_distances, iter_mask, label_to_str
from .pcube import CanonicalEmbedding, Verdict, canonical_embedding, crossing_graph
from .polyalg import Poly1, Poly2, leq, shift1, subst_shift_sum, subst_sum


@dataclass(frozen=True)
class ClassificationFlags:
    is_partial_cube: bool
    is_daisy_at_base: bool
    is_median: bool
    is_simplex_at_base: bool
    maximal_vertices: frozenset
    maximal_labels: tuple = ()
    witnesses: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TheoremReport:
    """Verdicts of every identity and inequality checked on one anchored partial cube.

    ``prop_xfx_leq`` is ``None`` for ``K_1``, where the crossing graph is undefined.
    """

    prop_a: bool
    prop_b: bool
    prop_c: bool
    thm1_equivalence_consistent: bool
    thm2_leq: bool
    cor_leq: bool
    prop_xfx_leq: bool | None
    prop_xfx_equality: bool | None
    xfx_equality_matches_median: bool
    thm4_W_eq_Cl: bool | None
    thm4_matches_simplex: bool
    daisy_lemma_agrees: bool
    C: Poly1
    W: Poly1
    D: Poly2
    Cl: Poly1 | None
    C_shift_sum: Poly2
    flags: ClassificationFlags

    UNIVERSAL = ("thm2_leq", "cor_leq", "prop_xfx_leq", "thm1_equivalence_consistent",
                 "daisy_lemma_agrees", "xfx_equality_matches_median", "thm4_matches_simplex")

    def failures(self) -> list:
        """Names of universally claimed checks that failed (``None`` means skipped)."""
        return [name for name in self.UNIVERSAL if getattr(self, name) is False]

    @property
    def all_universal_hold(self) -> bool:
        return not self.failures()


def maximal_vertices(emb: CanonicalEmbedding) -> frozenset:
    labels = emb.labels
    out = []
    for v, x in enumerate(labels):
        if not any(y != x and x & y == x for y in labels):
            out.append(v)
    return frozenset(out)


def is_daisy(emb: CanonicalEmbedding) -> Verdict:
    """Downward closure of the anchored label set; the witness is a missing label word."""
    present = emb.label_set
    for x in sorted(emb.labels):
        for c in iter_mask(x):
            if x & ~(1 << c) not in present:
                return Verdict(False, label_to_str(x & ~(1 << c), emb.dim), "missing_label")
    return Verdict(True)


def is_daisy_lemma(emb: CanonicalEmbedding, dm: DistanceMatrix | None = None) -> bool:
    """Interval test: each maximal vertex spans a full cube down to the base."""
    dm = dm or all_pairs_distances(emb.graph)
    for v in maximal_vertices(emb):
        x = emb.labels[v]
        below = {y for y in range(x + 1) if y & x == y}
        ivl = {emb.labels[z] for z in iter_mask(dm.interval_mask(emb.base, v))}
        if ivl != below:
            return False
    return True


def is_median(g: Graph, dm: DistanceMatrix | None = None) -> Verdict:
    """Every triple of distinct vertices has exactly one median; witness is the first bad triple."""
    dm = dm or all_pairs_distances(g)
    n = g.n_vertices
    for u, v in combinations(range(n), 2):
        iuv = dm.interval_mask(u, v)
        for w in range(v + 1, n):
            common = iuv & dm.interval_mask(u, w) & dm.interval_mask(v, w)
            if common & (common - 1) or not common:
                return Verdict(False, ((u, v, w), tuple(iter_mask(common))), "median_count")
    return Verdict(True)


def is_simplex(flags: ClassificationFlags) -> bool:
    return flags.is_median and flags.is_daisy_at_base


def classify(g: Graph, base: int | None = None, emb: CanonicalEmbedding | None = None,
             dm: DistanceMatrix | None = None) -> ClassificationFlags:
    dm = dm or all_pairs_distances(g)
    emb = emb or canonical_embedding(g, base, dm=dm)
    daisy = is_daisy(emb)
    median = is_median(g, dm)
    witnesses = {}
    if not daisy:
        witnesses["daisy"] = daisy.witness
    if not median:
        (u, v, w), common = median.witness
        witnesses["median"] = {
            "triple": [emb.label_str(x) for x in (u, v, w)],
            "medians": [emb.label_str(x) for x in common],
        }
    maxv = maximal_vertices(emb)
    return ClassificationFlags(
        is_partial_cube=True,
        is_daisy_at_base=daisy.holds,
        is_median=median.holds,
        is_simplex_at_base=daisy.holds and median.holds,
        maximal_vertices=maxv,
        maximal_labels=tuple(sorted(emb.label_str(v) for v in maxv)),
        witnesses=witnesses,
    )


def verify_theorems(g: Graph, base: int | None = None) -> TheoremReport:
    if base is None:
        base = g.base if g.base is not None else 0
    if not 0 <= base < g.n_vertices:
        raise BaseOutOfRangeError(f"base {base} outside 0..{g.n_vertices - 1}")
    dm = all_pairs_distances(g)
    emb = canonical_embedding(g, base, dm=dm)  # raises NotPartialCubeError
    flags = classify(g, base, emb, dm)

    cc = cube_census(emb)
    C = cube_polynomial(cc)
    W = distance_polynomial(cc)
    D = distance_cube_polynomial(cc)
    W_shift = shift1(W)
    W_sum = subst_sum(W)
    C_shift_sum = subst_shift_sum(C, check=False)

    prop_a = C == W_shift
    prop_b = D == W_sum
    prop_c = D == C_shift_sum
    daisy = flags.is_daisy_at_base

    if g.n_vertices > 1:
        Cl = clique_census(crossing_graph(g, dm))
        Cl_shift = shift1(Cl)
        xfx_leq = leq(C, Cl_shift)
        xfx_eq = C == Cl_shift
        thm4 = W == Cl
    else:
        Cl = None
        xfx_leq = xfx_eq = thm4 = None

    return TheoremReport(
        prop_a=prop_a,
        prop_b=prop_b,
        prop_c=prop_c,
        thm1_equivalence_consistent=prop_a == prop_b == prop_c == daisy,
        thm2_leq=leq(D, W_sum),
        cor_leq=leq(C, W_shift),
        prop_xfx_leq=xfx_leq,
        prop_xfx_equality=xfx_eq,
        xfx_equality_matches_median=xfx_eq is None or xfx_eq == flags.is_median,
        thm4_W_eq_Cl=thm4,
        thm4_matches_simplex=thm4 is None or thm4 == flags.is_simplex_at_base,
        daisy_lemma_agrees=is_daisy_lemma(emb, dm) == daisy,
        C=C, W=W, D=D, Cl=Cl, C_shift_sum=C_shift_sum,
        flags=flags,
    )
