"""Corpus sweeps: run every check over a generated family of partial cubes.

A sweep result is a plain dict sorted by graph key, so it does not depend
on how the work was split across processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .census import cube_census, oracle_isomorphism_count, oracle_subcube_scan
from .classify import verify_theorems
from .errors import LimitExceededError, PartialCubeError
from .families import (
    cycle,
    enumerate_all_downsets,
    figure1_graph,
    grid,
    hypercube,
    p4,
    q3minus,
    random_downset,
    random_partial_cube_by_deletion,
    random_tree,
)
from .files import SWEEP_FORMAT
from .gplus import g_plus, verify_gplus
from .graphcore import all_pairs_distances, popcount
from .pcube import canonical_embedding

WORKERS_ENV = "PCUBE_WORKERS"

LIMITS = {"downsets": 5, "deletions": 5, "seeds": 500, "median_max": 32}


def downset_corpus(n: int) -> list:
    if n > LIMITS["downsets"]:
        raise LimitExceededError(f"exhaustive downsets limited to n <= {LIMITS['downsets']}")
    return [(g.name, g, "daisy") for g in enumerate_all_downsets(n)]


def deletion_corpus(n: int, seeds: int, max_delete: int | None = None) -> list:
    if n > LIMITS["deletions"] or seeds > LIMITS["seeds"]:
        raise LimitExceededError(
            f"deletion sweeps limited to n <= {LIMITS['deletions']} and {LIMITS['seeds']} seeds")
    max_delete = max_delete or max(1, 1 << (n - 1))
    out = []
    for seed in range(seeds):
        k = 1 + seed % max_delete
        g = random_partial_cube_by_deletion(n, seed, k)
        out.append((f"del{n}-s{seed:03d}-k{k}", g, None))
    return out


def median_corpus(kinds, max_vertices: int = 20, tree_seeds: int = 3) -> list:
    if max_vertices > LIMITS["median_max"]:
        raise LimitExceededError(f"median sweeps limited to {LIMITS['median_max']} vertices")
    out = []
    for kind in kinds:
        if kind == "trees":
            for n in range(1, max_vertices + 1):
                for s in range(tree_seeds if n > 3 else 1):
                    out.append((f"tree-{n:02d}-s{s}", random_tree(n, s), "median"))
        elif kind == "grids":
            for a in range(1, 5):
                for b in range(a, 5):
                    if a * b <= max_vertices:
                        out.append((f"grid-{a}x{b}", grid(a, b), "median"))
        elif kind == "hypercubes":
            for n in range(0, 5):
                if 1 << n <= max_vertices:
                    out.append((f"hypercube-{n}", hypercube(n), "median"))
        else:
            raise ValueError(f"unknown median family {kind!r}")
    return out


def named_corpus() -> list:
    return [("figure1", figure1_graph(), None), ("p4", p4(), "median"),
            ("q3minus", q3minus(), "daisy"), ("cycle-6", cycle(6), None)]


def random_downset_corpus(n: int, seeds: int) -> list:
    if seeds > LIMITS["seeds"]:
        raise LimitExceededError(f"limited to {LIMITS['seeds']} seeds")
    return [(f"rdown{n}-s{s:03d}", random_downset(n, s, 0.25 + 0.5 * (s % 3) / 2), "daisy")
            for s in range(seeds)]


def check_graph(item, oracle_dim: int = 10, gplus_vertices: int = 0) -> dict:
    """Every property for one corpus graph; ``failures`` lists what went wrong."""
    key, g, expect = item
    failures = []
    try:
        rep = verify_theorems(g)
    except PartialCubeError as exc:
        return {"key": key, "ok": False, "failures": [f"error: {exc}"], "flags": None}
    failures += rep.failures()
    f = rep.flags
    if expect == "daisy" and not f.is_daisy_at_base:
        failures.append("expected_daisy")
    if expect == "median" and not rep.prop_xfx_equality and g.n_vertices > 1:
        failures.append("expected_xfx_equality")
    # equality in the two bounds is exactly the daisy case
    if rep.prop_b != f.is_daisy_at_base or rep.prop_a != f.is_daisy_at_base:
        failures.append("thm2_equality_not_daisy")

    emb = canonical_embedding(g, g.base)
    dm = all_pairs_distances(g)
    r = dm.rows
    if any(popcount(emb.labels[v] ^ emb.labels[w]) != r[v][w]
           for v in range(g.n_vertices) for w in range(v)):
        failures.append("embedding_not_isometric")
    if emb.theta.m != emb.dim:
        failures.append("theta_count_vs_dim")
    totals = cube_census(emb).totals()
    if emb.dim <= oracle_dim and oracle_subcube_scan(emb.labels, emb.dim) != totals:
        failures.append("census_vs_subcube_scan")
    if g.n_vertices <= 12:
        for k in range(3):
            if oracle_isomorphism_count(g, k) != totals.get(k, 0):
                failures.append(f"census_vs_isomorphism_k{k}")
    if gplus_vertices and g.n_vertices <= gplus_vertices:
        try:
            trace = g_plus(g)
            if verify_gplus(g, trace) != (True, True, True):
                failures.append("gplus_properties")
            again = g_plus(trace.result, max_vertices=1 << trace.dim, keep_labels=True)
            if again.stages[-1] != trace.stages[-1]:
                failures.append("gplus_not_idempotent")
            if f.is_median and trace.n_stages != 0:
                failures.append("gplus_changed_median_graph")
        except PartialCubeError as exc:
            failures.append(f"gplus_error: {exc}")
    return {
        "key": key,
        "ok": not failures,
        "failures": failures,
        "flags": {"daisy": f.is_daisy_at_base, "median": f.is_median,
                  "simplex": f.is_simplex_at_base, "prop_a": rep.prop_a,
                  "prop_b": rep.prop_b, "prop_c": rep.prop_c,
                  "xfx_equality": rep.prop_xfx_equality, "thm4": rep.thm4_W_eq_Cl},
    }


def _check_star(args):
    return check_graph(*args)


def worker_count(workers: int | None = None) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def run_sweep(corpus: list, workers: int | None = None, oracle_dim: int = 10,
              gplus_vertices: int = 0, description: dict | None = None) -> dict:
    jobs = [(item, oracle_dim, gplus_vertices) for item in corpus]
    n = worker_count(workers)
    if n > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_check_star, jobs, chunksize=8))
    else:
        results = [_check_star(j) for j in jobs]
    results.sort(key=lambda r: r["key"])
    failed = [r for r in results if not r["ok"]]
    counts = {name: 0 for name in ("daisy", "median", "simplex", "prop_a", "xfx_equality", "thm4")}
    for r in results:
        for name in counts:
            if r["flags"] and r["flags"][name]:
                counts[name] += 1
    return {
        "format": SWEEP_FORMAT,
        "corpus": description or {},
        "graphs": len(results),
        "failures": len(failed),
        "first_failure": failed[0] if failed else None,
        "counts": counts,
        "results": [{"key": r["key"], "ok": r["ok"], "failures": r["failures"]} for r in results],
    }
