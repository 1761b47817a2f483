import json

import pytest

from turaevgenus import cli, corpus, verify
from turaevgenus.adgraph import parse_graph_file, write_graph_file
from turaevgenus.diagram import parse_pd, turaev_genus_diagram
from turaevgenus.families import doubled_cycle


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.pd"
    path.write_text(corpus.TREFOIL + "\n")
    return str(path)


@pytest.fixture
def c22_file(tmp_path):
    path = tmp_path / "c2sq.graph"
    path.write_text(write_graph_file(doubled_cycle(2)))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genus_d(capsys, trefoil_file):
    code, out, _ = run(capsys, "genus-d", trefoil_file)
    assert code == 0
    assert out.strip() == "g_T = 0, c = 3, sA+sB = 5, k = 1"


def test_genus_g(capsys, c22_file):
    code, out, _ = run(capsys, "genus-g", c22_file)
    assert code == 0
    assert out.strip() == "g_T = 1"


def test_bracket(capsys, trefoil_file):
    code, out, _ = run(capsys, "bracket", trefoil_file)
    assert code == 0
    assert "span_t = 3" in out


def test_classify_json(capsys, c22_file):
    code, out, _ = run(capsys, "classify", c22_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["genus"] == 1
    assert payload["family"] == "doubled-even-cycle"
    assert payload["parameters"] == [2]


def test_decompose_json_round_trips(capsys, tmp_path):
    path = tmp_path / "nine.pd"
    path.write_text(corpus.NINE_42 + "\n")
    code, out, _ = run(capsys, "decompose", str(path), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 1
    assert payload["r_alt"] == 2
    # the JSON graph round-trips through the graph file parser
    lines = [f"v {payload['graph']['vertices']}"]
    lines += [f"e {u} {v}" for u, v in payload["graph"]["edges"]]
    back = parse_graph_file("\n".join(lines))
    assert back.edge_count == len(payload["graph"]["edges"])


def test_realize_output_parses(capsys, tmp_path, c22_file):
    out_path = tmp_path / "out.pd"
    code, out, _ = run(capsys, "realize", c22_file, "-o", str(out_path))
    assert code == 0
    diagram = parse_pd(out_path.read_text())
    assert turaev_genus_diagram(diagram) == 1


def test_census_text_and_json(capsys):
    code, out, _ = run(capsys, "census", "--genus", "1", "--max-edges", "8",
                       "--reduced")
    assert code == 0
    assert "1 doubled-path class(es)" in out
    code, out, _ = run(capsys, "census", "--genus", "1", "--max-edges", "8",
                       "--reduced", "--json")
    payload = json.loads(out)
    assert len(payload["classes"]) == 1
    assert payload["classes"][0]["family"] == "doubled-even-cycle"


def test_byte_identical_reruns(capsys, c22_file):
    _, out1, _ = run(capsys, "census", "--genus", "1", "--max-edges", "8",
                     "--reduced", "--json")
    _, out2, _ = run(capsys, "census", "--genus", "1", "--max-edges", "8",
                     "--reduced", "--json")
    assert out1 == out2
    _, out1, _ = run(capsys, "genus-g", c22_file)
    _, out2, _ = run(capsys, "genus-g", c22_file)
    assert out1 == out2


def test_input_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text("X 1 2 3\n")
    code, _, err = run(capsys, "genus-d", str(bad))
    assert code == 1
    assert "line 1" in err


def test_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "genus-d", "/nonexistent/path.pd")
    assert code == 1


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["not-a-command"])
    assert exc.value.code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--iters", "2", "--seed", "1")
    assert code == 0
    assert out.count("ok") == len(verify.ALL_SUITES)


def test_verify_byte_identical(capsys):
    _, out1, _ = run(capsys, "verify", "--iters", "2", "--seed", "3")
    _, out2, _ = run(capsys, "verify", "--iters", "2", "--seed", "3")
    assert out1 == out2


def test_verify_violation_exit_3(capsys, monkeypatch):
    def broken_suite(rng, iters):
        res = verify.SuiteResult("broken")
        res.check(False, "synthetic counterexample")
        return res

    broken_suite.__name__ = "suite_broken"
    monkeypatch.setattr(verify, "ALL_SUITES", (broken_suite,))
    code, out, err = run(capsys, "verify", "--iters", "1")
    assert code == 3
    assert "synthetic counterexample" in err
