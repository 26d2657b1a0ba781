"""Partial cubes, daisy cubes and their counting polynomials.

The usual entry points::

    from partialcube import families, verify_theorems
    g = families.q3minus()
    report = verify_theorems(g)
    report.C, report.W, report.D, report.Cl
"""

from . import families
from .census import (
    clique_census,
    cube_census,
    cube_polynomial,
    distance_cube_polynomial,
    distance_polynomial,
    enumerate_subcubes,
)
from .classify import (
    classify,
    is_daisy,
    is_daisy_lemma,
    is_median,
    is_simplex,
    maximal_vertices,
    verify_theorems,
)
from .errors import PartialCubeError
from .gplus import ambient_hull, g_plus, isometric_cycles, verify_gplus
from .graphcore import (
    Graph,
    all_pairs_distances,
    build_graph,
    convex_hull_in_g,
    graph_from_labels,
    interval,
    is_bipartite,
    is_connected,
    is_convex,
)
from .pcube import (
    canonical_embedding,
    crossing_graph,
    is_partial_cube,
    isometric_dimension,
    relabel_from_labels,
    theta_classes,
)
from .polyalg import Poly1, Poly2, leq, shift1, subst_shift_sum, subst_sum

__version__ = "0.1.0"
