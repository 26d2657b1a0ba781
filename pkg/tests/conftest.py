"""Shared corpora and the acceptance summary printed at the end of a run."""

from __future__ import annotations

import pytest

from partialcube import families
from partialcube.classify import verify_theorems
from partialcube.graphcore import build_graph
from partialcube.sweep import deletion_corpus, downset_corpus, median_corpus, named_corpus

ACCEPTANCE_RESULTS: dict = {}


def record(criterion: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS[criterion] = (title, ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


def simplex_bases():
    c4 = families.cycle(4)
    p3 = build_graph(3, [(0, 1), (1, 2)], name="P3")
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)], name="P4")
    return {"K2": families.complete(2), "K3": families.complete(3), "P3": p3, "P4": p4,
            "C4": c4, "C5": families.cycle(5), "K4": families.complete(4)}


@pytest.fixture(scope="session")
def downsets_q4():
    return downset_corpus(4)


@pytest.fixture(scope="session")
def deletion_graphs():
    # 100 seeds in each of Q_4 and Q_5
    return deletion_corpus(4, 100) + deletion_corpus(5, 100)


@pytest.fixture(scope="session")
def median_graphs():
    return median_corpus(["trees", "grids", "hypercubes"], max_vertices=20)


@pytest.fixture(scope="session")
def named_graphs():
    return named_corpus()


@pytest.fixture(scope="session")
def simplex_graphs():
    return [(f"S({k})", families.simplex_graph(h), "simplex") for k, h in simplex_bases().items()]


@pytest.fixture(scope="session")
def full_corpus(downsets_q4, deletion_graphs, median_graphs, named_graphs, simplex_graphs):
    return downsets_q4 + deletion_graphs + median_graphs + named_graphs + simplex_graphs


@pytest.fixture(scope="session")
def reports(full_corpus):
    """``key -> TheoremReport`` for every corpus graph."""
    return {key: verify_theorems(g) for key, g, _ in full_corpus}
