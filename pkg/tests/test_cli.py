from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest

from partialcube import cli, files
from partialcube.errors import ParseError
from partialcube.families import FamilySpec, generate, random_tree
from partialcube.polyalg import Poly1, Poly2

DOCS = Path(__file__).resolve().parents[1] / "docs"
GRAPH_SCHEMA = json.loads((DOCS / "pcg-1.schema.json").read_text())
REPORT_SCHEMA = json.loads((DOCS / "pcr-1.schema.json").read_text())

SPECS = [
    ("hypercube", {"n": 3}), ("fibonacci", {"n": 5}), ("lucas", {"n": 5}),
    ("daisy", {"n": 3, "x": "110,011,101"}), ("simplex", {"of": "C5"}), ("figure1", {}),
    ("p4", {}), ("q3minus", {}), ("grid", {"a": 3, "b": 3}), ("cycle", {"n": 6}),
    ("path", {"n": 4}), ("random_downset", {"n": 4, "seed": 2}),
    ("random_pc_deletion", {"n": 4, "seed": 3, "deletions": 4}),
]


def run(argv, capsys):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def gen(tmp_path, capsys):
    def make(family, *extra):
        path = tmp_path / f"{family}-{'-'.join(map(str, extra))}.json"
        code, _, _ = run(["gen", "--family", family, *extra, "--out", path], capsys)
        assert code == 0
        return path
    return make


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


class TestGen:
    def test_examples(self, gen):
        assert json.loads(gen("figure1").read_text())["vertices"] == 10
        assert len(json.loads(gen("fibonacci", "--n", 4).read_text())["labels"]) == 8
        doc = json.loads(gen("daisy", "--n", 3, "--x", "110,011,101").read_text())
        assert sorted(doc["labels"]) == ["000", "001", "010", "011", "100", "101", "110"]
        assert doc["base"] == "000"

    @pytest.mark.parametrize("family, params", SPECS)
    def test_round_trip_and_schema(self, family, params):
        text = files.dump_graph(generate(FamilySpec(family, params)))
        jsonschema.validate(json.loads(text), GRAPH_SCHEMA)
        assert files.dump_graph(files.load_graph(text)) == text

    def test_stdout(self, capsys):
        code, out, _ = run(["gen", "--family", "p4"], capsys)
        assert code == 0 and json.loads(out)["name"] == "P4"

    def test_bad_spec(self, capsys):
        code, _, err = run(["gen", "--family", "hypercube"], capsys)
        assert code == 2 and "needs parameter" in err


class TestAnalyze:
    def report(self, path, capsys, *extra):
        code, out, _ = run(["analyze", path, *extra], capsys)
        return code, json.loads(out)

    def test_figure1(self, gen, capsys):
        code, rep = self.report(gen("figure1"), capsys)
        assert code == 0
        assert rep["polynomial_strings"]["D"] == str(
            Poly2.parse("3x^2+6xy+3y^2+4x+4y+2y^3+4xy^2+2x^2y+1"))
        assert rep["idim"] == 4 and rep["base"] == {"vertex": 5, "label": "0000", "rule": "file"}

    @pytest.mark.parametrize("family, flags", [
        ("q3minus", (True, True, False, False)),
        ("p4", (True, False, True, False)),
    ])
    def test_flags(self, gen, capsys, family, flags):
        _, rep = self.report(gen(family), capsys)
        f = rep["flags"]
        assert (f["is_partial_cube"], f["is_daisy_at_base"], f["is_median"],
                f["is_simplex_at_base"]) == flags

    @pytest.mark.parametrize("family, params", SPECS)
    def test_schema_and_strings(self, family, params):
        rep = files.analysis_report(generate(FamilySpec(family, params)))
        jsonschema.validate(rep, REPORT_SCHEMA)
        for key, coeffs in rep["polynomials"].items():
            cls = Poly2.from_triples if key in ("D", "C_shift_sum") else Poly1.from_pairs
            assert str(cls(coeffs)) == rep["polynomial_strings"][key]

    def test_not_partial_cube(self, tmp_path, capsys):
        k23 = write(tmp_path, "k23.json", {"format": "pcg-1", "vertices": 5,
                                            "edges": [[0, 2], [0, 3], [0, 4], [1, 2], [1, 3], [1, 4]]})
        code, rep = self.report(k23, capsys)
        assert code == 2
        jsonschema.validate(rep, REPORT_SCHEMA)
        assert rep["witnesses"]["partial_cube"]["kind"] == "theta_not_transitive"
        c5 = write(tmp_path, "c5.json", {"format": "pcg-1", "vertices": 5,
                                          "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]})
        code, rep = self.report(c5, capsys)
        assert code == 2 and rep["witnesses"]["partial_cube"]["kind"] == "odd_cycle"

    def test_base_rules(self, gen, capsys):
        path = gen("daisy", "--n", 3, "--x", "110,011,101")
        _, rep = self.report(path, capsys, "--base", "110")
        assert rep["base"]["rule"] == "argument" and not rep["flags"]["is_daisy_at_base"]
        _, rep = self.report(path, capsys, "--base", "0")
        assert rep["base"] == {"vertex": 0, "label": "000", "rule": "argument"}
        code, _, err = run(["analyze", path, "--base", "99"], capsys)
        assert code == 2 and "outside" in err

    def test_default_rule(self, tmp_path, capsys):
        path = write(tmp_path, "sq.json", {"format": "pcg-1", "vertices": 4,
                                            "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]})
        _, rep = self.report(path, capsys)
        assert rep["base"]["rule"] == "default"

    def test_timing_opt_in(self, gen, capsys):
        _, rep = self.report(gen("p4"), capsys, "--timing")
        assert rep["timing"]["seconds"] >= 0
        jsonschema.validate(rep, REPORT_SCHEMA)


class TestParse:
    @pytest.mark.parametrize("doc", [
        {"format": "pcg-2", "vertices": 1, "edges": []},
        {"format": "pcg-1"},
        {"format": "pcg-1", "labels": ["0", "1"], "vertices": 2, "edges": [[0, 1]]},
        {"format": "pcg-1", "labels": ["0", "11"]},
        {"format": "pcg-1", "labels": ["0", "2"]},
        {"format": "pcg-1", "vertices": 2, "edges": [[0, 0]]},
        {"format": "pcg-1", "labels": ["00", "01"], "base": "11"},
        [1, 2],
    ])
    def test_rejects(self, doc):
        with pytest.raises(ParseError):
            files.doc_to_graph(doc)

    def test_cli_errors(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run(["check", bad], capsys)[0] == 2
        assert run(["check", tmp_path / "missing.json"], capsys)[0] == 2
        split = write(tmp_path, "split.json", {"format": "pcg-1", "vertices": 2, "edges": []})
        code, _, err = run(["analyze", split], capsys)
        assert code == 2 and "not connected" in err
        with pytest.raises(SystemExit) as info:
            cli.main(["bogus"])
        assert info.value.code == 2


class TestCheck:
    @pytest.mark.parametrize("family, extra, expect", [
        ("figure1", [], {"prop_a": "False", "prop_b": "False", "prop_c": "False"}),
        ("q3minus", [], {"prop_a": "True", "prop_c": "True", "prop_xfx_equality": "False"}),
        ("cycle", ["--n", 6], {"prop_xfx_equality": "False", "all_universal_hold": "True"}),
    ])
    def test_exit_zero(self, gen, capsys, family, extra, expect):
        code, out, _ = run(["check", gen(family, *extra)], capsys)
        assert code == 0
        table = dict(line.split(None, 1) for line in out.splitlines())
        for key, val in expect.items():
            assert table[key] == val

    def test_not_partial_cube(self, tmp_path, capsys):
        c5 = write(tmp_path, "c5.json", {"format": "pcg-1", "vertices": 5,
                                          "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]})
        assert run(["check", c5], capsys)[0] == 2


class TestSweep:
    def test_small(self, tmp_path, capsys):
        out = tmp_path / "s.json"
        code, _, _ = run(["sweep", "--downsets", 3, "--named", "--gplus", 20, "--out", out], capsys)
        doc = json.loads(out.read_text())
        assert code == 0 and doc["graphs"] == 19 + 4 and doc["failures"] == 0
        keys = [r["key"] for r in doc["results"]]
        assert keys == sorted(keys)

    def test_median(self, capsys):
        code, out, _ = run(["sweep", "--median", "trees,grids", "--max", 12], capsys)
        doc = json.loads(out)
        # K_1 appears twice (tree-01 and grid-1x1) and has no crossing graph
        assert code == 0 and doc["failures"] == 0
        assert doc["counts"]["xfx_equality"] == doc["graphs"] - 2

    def test_limits(self, capsys):
        assert run(["sweep", "--downsets", 6], capsys)[0] == 2
        assert run(["sweep", "--deletions", 4, "--seeds", 501], capsys)[0] == 2
        with pytest.raises(SystemExit):
            cli.main(["sweep"])


class TestGPlus:
    def test_c6(self, gen, tmp_path, capsys):
        out, trace = tmp_path / "plus.json", tmp_path / "trace.json"
        code, _, _ = run(["gplus", gen("cycle", "--n", 6), "--out", out, "--trace", trace], capsys)
        g = files.read_graph(out)
        t = json.loads(trace.read_text())
        assert code == 0 and g.n_vertices == 8 and g.n_edges == 12
        assert t["n_stages"] == 1 and all(t["properties"].values())
        assert "alternate_order_result" not in t

    def test_tree_unchanged(self, tmp_path, capsys):
        src = tmp_path / "tree.json"
        src.write_text(files.dump_graph(random_tree(9, 1)))
        out = tmp_path / "plus.json"
        code, _, err = run(["gplus", src, "--out", out], capsys)
        assert code == 0 and json.loads(err)["n_stages"] == 0
        assert files.read_graph(out).edges == files.read_graph(src).edges

    def test_q3minus(self, gen, capsys):
        code, out, err = run(["gplus", gen("q3minus")], capsys)
        assert code == 0 and sorted(json.loads(out)["labels"]) == [format(i, "03b") for i in range(8)]

    def test_limit(self, gen, capsys):
        assert run(["gplus", gen("hypercube", "--n", 5)], capsys)[0] == 2


class TestCrossing:
    @pytest.mark.parametrize("family, n, m, cl", [
        ("q3minus", 3, 3, "x^3+3x^2+3x+1"),
        ("p4", 3, 0, "3x+1"),
        ("figure1", 4, 5, "2x^3+5x^2+4x+1"),
    ])
    def test_examples(self, gen, capsys, family, n, m, cl):
        code, out, err = run(["crossing", gen(family)], capsys)
        doc = json.loads(out)
        assert code == 0 and doc["vertices"] == n and len(doc["edges"]) == m
        assert err.strip() == f"Cl = {cl}"

    def test_singleton(self, gen, capsys):
        assert run(["crossing", gen("hypercube", "--n", 0)], capsys)[0] == 2


class TestExitStatus:
    def test_violation_exits_one(self, gen, capsys, monkeypatch):
        from dataclasses import replace

        real = cli.verify_theorems
        monkeypatch.setattr(cli, "verify_theorems", lambda g, b: replace(real(g, b), thm2_leq=False))
        code, out, _ = run(["check", gen("p4")], capsys)
        assert code == 1 and "FAILED: thm2_leq" in out

    def test_intermediate_stage_exits_one(self, gen, capsys, monkeypatch):
        from partialcube.errors import IntermediateNotPartialCubeError

        def boom(*args, **kwargs):
            raise IntermediateNotPartialCubeError("stage 1 is not a partial cube", stage=1, labels=[])

        monkeypatch.setattr(cli, "g_plus", boom)
        assert run(["gplus", gen("q3minus")], capsys)[0] == 1
