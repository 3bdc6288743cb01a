import json

import pytest

from matsplit import catalog_graph, catalog_matroid, parse_graph, parse_matroid, serialize_graph, serialize_matroid
from matsplit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_matroid(capsys):
    code, out, _ = run(capsys, "info", "F7")
    assert code == 0
    assert "matroid F7" in out
    assert "rank: 3" in out
    assert "girth: 3" in out
    assert "connectivity: 3" in out
    assert "circuits: 14" in out


def test_info_graph_shows_both_views(capsys):
    code, out, _ = run(capsys, "info", "K4")
    assert code == 0
    assert "graph K4" in out
    assert "vertices: 4" in out
    assert "matroid M(K4)" in out
    assert out.count("connectivity: 3") == 2


def test_info_unknown_name(capsys):
    code, _, err = run(capsys, "info", "NOPE")
    assert code == 2
    assert "error:" in err


def test_split_prints_document_and_classes(capsys):
    code, out, _ = run(capsys, "split", "F7", "--t", "1,2,3")
    assert code == 0
    assert "matroid F7+a" in out
    assert "connectivity: 2" in out
    assert "3-connected: no" in out
    assert "circuit classes: C1=7 C2=7 C3=0 violations=0" in out
    assert "cocircuit classes: Q1=1 Q2=7 Q3=3 Q4=0 Q5=1" in out
    # the printed document parses back to the split matroid
    doc = out[out.index("matroid F7+a"):]
    doc = "\n".join(doc.splitlines()[:6])
    from matsplit import element_split
    M = parse_matroid(doc)
    assert M.equals(element_split(catalog_matroid("F7"), ["1", "2", "3"]).result)


def test_split_rejects_bad_t(capsys):
    code, _, err = run(capsys, "split", "F7", "--t", "")
    assert code == 2
    code, _, err = run(capsys, "split", "F7", "--t", "1,9")
    assert code == 2


def test_split_skips_cocircuits_when_t_holds_one(capsys):
    code, out, _ = run(capsys, "split", "F7*", "--t", "1,2,5")
    assert code == 0
    assert "cocircuit classes: skipped" in out


def test_verify_table_and_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "F7", "--n", "3")
    assert code == 0
    assert "equivalent on all 21 rows" in out
    assert out.count("\n") >= 22


def test_verify_records_match_library(capsys, tmp_path):
    target = tmp_path / "rows.jsonl"
    code, out, _ = run(capsys, "verify", "MK4", "--n", "3",
                       "--format", "records", "--out", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert len(lines) == 15
    from matsplit import verify_equivalence
    want = [r.to_record() for r in verify_equivalence(catalog_matroid("MK4"), 3)]
    assert [json.loads(x) for x in lines] == want
    # stdout carries the same records when --format records
    assert json.loads(out.splitlines()[0]) == want[0]


def test_verify_not_n_connected(capsys):
    code, _, err = run(capsys, "verify", "F7", "--n", "4")
    assert code == 2
    assert "not 4-connected" in err


def test_graph_split_pass_and_violation_exit(capsys):
    code, out, _ = run(capsys, "graph-split", "K5",
                       "--vertex", "1", "--edges", "12,13", "--n", "3")
    assert code == 0
    assert "passed: yes" in out
    code, out, _ = run(capsys, "graph-split", "K4",
                       "--vertex", "1", "--edges", "12,13", "--n", "3")
    assert code == 2
    assert "hypothesis" in out.lower()


def test_reduce_cubic_writes_final_graph(capsys, tmp_path):
    target = tmp_path / "cubic.graph"
    code, out, _ = run(capsys, "reduce-cubic", "K5", "--out", str(target))
    assert code == 0
    assert "steps: 5" in out
    g = parse_graph(target.read_text())
    assert all(g.degree(v) == 3 for v in g.vertices)
    assert len(g.vertices) == 10


def test_reduce_cubic_prefers_graph_namespace(capsys):
    # K33 names both a graph and a matroid; graph verbs take the graph
    code, out, _ = run(capsys, "reduce-cubic", "K33")
    assert code == 0
    assert "steps: 0" in out


def test_catalog_verbs(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "F7")
    assert code == 0
    assert parse_matroid(out).equals(catalog_matroid("F7"))
    code, out, _ = run(capsys, "catalog", "K46", "--kind", "graph")
    assert code == 0
    assert parse_graph(out).edges == catalog_graph("K46").edges
    target = tmp_path / "q3.graph"
    code, _, _ = run(capsys, "catalog", "Q3", "--kind", "graph",
                     "--out", str(target))
    assert code == 0
    assert target.read_text() == serialize_graph(catalog_graph("Q3"))


def test_file_sources_round_trip(capsys, tmp_path):
    src = tmp_path / "w4.matroid"
    src.write_text(serialize_matroid(catalog_matroid("W4")))
    code, out, _ = run(capsys, "info", str(src))
    assert code == 0
    assert "matroid M(W4)" in out
    gsrc = tmp_path / "k4.graph"
    gsrc.write_text(serialize_graph(catalog_graph("K4")))
    code, out, _ = run(capsys, "reduce-cubic", str(gsrc))
    assert code == 0
    assert "steps: 0" in out


def test_graph_verb_rejects_matroid_file(capsys, tmp_path):
    src = tmp_path / "f7.matroid"
    src.write_text(serialize_matroid(catalog_matroid("F7")))
    code, _, err = run(capsys, "reduce-cubic", str(src))
    assert code == 2
    assert "graph" in err


def test_usage_error_on_unknown_verb():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
