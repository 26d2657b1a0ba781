"""JSON file formats: graphs (``pcg-1``), analysis reports (``pcr-1``), sweep summaries (``pcs-1``).

Words are ASCII ``0``/``1`` strings with coordinate 0 leftmost.  Output is
deterministic: fixed key order, scalar lists on one line, trailing newline.
"""

from __future__ import annotations

import json
import time

from .classify import verify_theorems
from .errors import DisconnectedError, ParseError
from .graphcore import Graph, all_pairs_distances, build_graph, graph_from_labels, is_connected, str_to_label
from .pcube import canonical_embedding, is_partial_cube

GRAPH_FORMAT = "pcg-1"
REPORT_FORMAT = "pcr-1"
SWEEP_FORMAT = "pcs-1"


# -- deterministic JSON -----------------------------------------------------

def _flat(x) -> bool:
    if isinstance(x, list):
        return all(not isinstance(y, (dict, list)) or (isinstance(y, list) and _flat(y)) for y in x)
    return not isinstance(x, dict)


def dumps(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(f'{pad}  {json.dumps(str(k))}: {dumps(v, indent + 1)}'
                           for k, v in obj.items())
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, list) and not _flat(obj):
        inner = ",\n".join(f"{pad}  {dumps(v, indent + 1)}" for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    return json.dumps(obj, separators=(", ", ": "))


def dump_document(doc: dict) -> str:
    return dumps(doc) + "\n"


# -- graph files ------------------------------------------------------------

def graph_to_doc(g: Graph) -> dict:
    doc = {"format": GRAPH_FORMAT}
    if g.name:
        doc["name"] = g.name
    if g.labels is not None:
        doc["labels"] = [g.label_str(v) for v in range(g.n_vertices)]
        if g.base is not None:
            doc["base"] = g.label_str(g.base)
    else:
        doc["vertices"] = g.n_vertices
        doc["edges"] = [list(e) for e in g.edges]
        if g.base is not None:
            doc["base"] = g.base
    return doc


def dump_graph(g: Graph) -> str:
    return dump_document(graph_to_doc(g))


def doc_to_graph(doc) -> Graph:
    if not isinstance(doc, dict) or doc.get("format") != GRAPH_FORMAT:
        raise ParseError(f"expected a {GRAPH_FORMAT!r} document")
    has_labels, has_edges = "labels" in doc, "edges" in doc or "vertices" in doc
    if has_labels == has_edges:
        raise ParseError("exactly one of 'labels' or 'vertices'+'edges' is required")
    name = doc.get("name")
    base = doc.get("base")
    try:
        if has_labels:
            words = doc["labels"]
            if not isinstance(words, list) or not all(isinstance(w, str) for w in words):
                raise ParseError("'labels' must be a list of binary words")
            widths = {len(w) for w in words}
            if len(widths) > 1:
                raise ParseError(f"labels have mixed widths {sorted(widths)}")
            width = widths.pop() if widths else 0
            g = graph_from_labels(words, width, name=name)
            if base is not None:
                if isinstance(base, str):
                    g = g.with_base(g.labels.index(str_to_label(base)))
                else:
                    g = g.with_base(int(base))
            return g
        return build_graph(int(doc["vertices"]), doc.get("edges", []), base=base, name=name)
    except ParseError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"invalid graph document: {exc}") from exc


def load_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from exc
    return doc_to_graph(doc)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


# -- reports ----------------------------------------------------------------

def resolve_base(g: Graph, base=None) -> tuple:
    """Return ``(vertex, rule)``: explicit argument, else the file's base, else vertex 0.

    On a labeled graph a 0/1 string as long as the labels is read as a word,
    so ``"10"`` names a vertex by label when the width is 2.
    """
    if base is not None:
        word = isinstance(base, str) and set(base) <= {"0", "1"} and len(base) == (g.width or 0)
        if isinstance(base, str) and (word and g.labels is not None or not base.isdigit()):
            if g.labels is None:
                raise ParseError("a word-valued base needs a labeled graph")
            try:
                return g.labels.index(str_to_label(base)), "argument"
            except ValueError:
                raise ParseError(f"no vertex carries the word {base!r}") from None
        v = int(base)
        if not 0 <= v < g.n_vertices:
            raise ParseError(f"base {v} outside 0..{g.n_vertices - 1}")
        return v, "argument"
    if g.base is not None:
        return g.base, "file"
    return 0, "default"


def _witness_doc(verdict):
    w = verdict.witness
    if verdict.kind == "theta_not_transitive":
        w = [list(e) for e in w]
    elif isinstance(w, tuple):
        w = list(w)
    return {"kind": verdict.kind, "data": w}


def analysis_report(g: Graph, base=None, timing: bool = False) -> dict:
    """Full report; for a non-partial cube the polynomial and verdict blocks are null."""
    start = time.perf_counter()
    vertex, rule = resolve_base(g, base)
    doc = {
        "format": REPORT_FORMAT,
        "name": g.name,
        "n_vertices": g.n_vertices,
        "n_edges": g.n_edges,
        "base": {"vertex": vertex, "label": None, "rule": rule},
    }
    dm = all_pairs_distances(g)
    verdict = is_partial_cube(g, dm)
    if not verdict:
        doc.update({
            "idim": None,
            "labels": None,
            "flags": {"is_partial_cube": False, "is_daisy_at_base": None, "is_median": None,
                      "is_simplex_at_base": None, "maximal_vertices": None,
                      "maximal_labels": None},
            "polynomials": None,
            "polynomial_strings": None,
            "verdicts": None,
            "witnesses": {"partial_cube": _witness_doc(verdict)},
        })
    else:
        emb = canonical_embedding(g, vertex, dm=dm)
        rep = verify_theorems(g, vertex)
        f = rep.flags
        doc["base"]["label"] = emb.label_str(vertex)
        polys = {"C": rep.C, "W": rep.W, "D": rep.D, "Cl_crossing": rep.Cl,
                 "C_shift_sum": rep.C_shift_sum}
        doc.update({
            "idim": emb.dim,
            "labels": [emb.label_str(v) for v in range(g.n_vertices)],
            "flags": {
                "is_partial_cube": True,
                "is_daisy_at_base": f.is_daisy_at_base,
                "is_median": f.is_median,
                "is_simplex_at_base": f.is_simplex_at_base,
                "maximal_vertices": sorted(f.maximal_vertices),
                "maximal_labels": list(f.maximal_labels),
            },
            "polynomials": {k: _poly_doc(p) for k, p in polys.items()},
            "polynomial_strings": {k: None if p is None else str(p) for k, p in polys.items()},
            "verdicts": verdict_block(rep),
            "witnesses": dict(f.witnesses),
        })
    if timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return doc


def _poly_doc(p):
    if p is None:
        return None
    return p.to_triples() if p.arity == 2 else p.to_pairs()


VERDICT_KEYS = ("prop_a", "prop_b", "prop_c", "thm1_equivalence_consistent", "thm2_leq",
                "cor_leq", "prop_xfx_leq", "prop_xfx_equality", "xfx_equality_matches_median",
                "thm4_W_eq_Cl", "thm4_matches_simplex", "daisy_lemma_agrees")


def verdict_block(rep) -> dict:
    out = {k: getattr(rep, k) for k in VERDICT_KEYS}
    out["all_universal_hold"] = rep.all_universal_hold
    out["failures"] = rep.failures()
    return out


def check_connected(g: Graph):
    if not is_connected(g):
        raise DisconnectedError("input graph is not connected")
