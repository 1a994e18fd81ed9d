import json

import pytest

from indexcode.cli import EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED, EXIT_VERIFY, main
from indexcode.codec import build_code, code_to_json
from indexcode.generate import random_digraph
from indexcode.graphs import parse_digraph, serialize_digraph
from indexcode.selfcheck import CriterionResult

THETA6_TEXT = "6 9\n1 4\n1 5\n2 4\n2 6\n3 5\n3 6\n4 3\n5 2\n6 1\n"
K3_TEXT = "3 6\n1 2\n1 3\n2 1\n2 3\n3 1\n3 2\n"
K4_TEXT = ("4 12\n1 2\n1 3\n1 4\n2 1\n2 3\n2 4\n"
           "3 1\n3 2\n3 4\n4 1\n4 2\n4 3\n")


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_analyze_interlinked(tmp_path, capsys):
    path = write(tmp_path, "theta6.graph", THETA6_TEXT)
    assert main(["analyze", path]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report == {
        "n": 6, "q": 2, "r": 2, "witness": [1, 2], "mais": 4,
        "case": "interlinked", "code_length": 4, "decodable": True,
        "minrank": 4, "minrank_equals_mais": True,
    }


def test_analyze_case_labels(tmp_path, capsys):
    cases = {
        "3 2\n1 2\n2 3\n": "uncoded",
        "3 3\n1 2\n2 3\n3 1\n": "one-cycle",
        "6 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n": "disjoint-pair",
    }
    for text, label in cases.items():
        path = write(tmp_path, "g.graph", text)
        assert main(["analyze", path]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["case"] == label


def test_analyze_unsupported(tmp_path, capsys):
    path = write(tmp_path, "k4.graph", K4_TEXT)
    assert main(["analyze", path]) == EXIT_UNSUPPORTED
    report = json.loads(capsys.readouterr().out)
    assert report["case"] == "unsupported"
    assert report["r"] is None and report["witness"] is None
    assert report["code_length"] is None and report["decodable"] is None
    assert report["mais"] == 1 and report["minrank"] == 1
    assert report["minrank_equals_mais"] is True


def test_analyze_respects_bruteforce_budget(tmp_path, capsys):
    path = write(tmp_path, "theta6.graph", THETA6_TEXT)
    assert main(["analyze", path, "--q", "3", "--max-bruteforce", "100"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["q"] == 3
    assert report["decodable"] is None  # 3^6 states exceed the budget


def test_encode_stdout_and_file(tmp_path, capsys):
    path = write(tmp_path, "theta6.graph", THETA6_TEXT)
    expected = code_to_json(build_code(parse_digraph(THETA6_TEXT), q=2))
    assert main(["encode", path]) == EXIT_OK
    assert capsys.readouterr().out == expected + "\n"
    out = tmp_path / "code.json"
    assert main(["encode", path, "--out", str(out)]) == EXIT_OK
    assert out.read_text() == expected + "\n"


def test_encode_unsupported(tmp_path, capsys):
    path = write(tmp_path, "k4.graph", K4_TEXT)
    assert main(["encode", path]) == EXIT_UNSUPPORTED
    assert "error:" in capsys.readouterr().err


def test_verify_accepts_and_rejects(tmp_path, capsys):
    gpath = write(tmp_path, "theta6.graph", THETA6_TEXT)
    cpath = str(tmp_path / "code.json")
    assert main(["encode", gpath, "--out", cpath]) == EXIT_OK
    assert main(["verify", gpath, cpath]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is True
    assert report["receivers"] == {str(i): True for i in range(1, 7)}
    assert report["counterexamples"] == {}

    # drop one row: some receiver must now be able to prove the gap
    obj = json.loads((tmp_path / "code.json").read_text())
    obj["rows"] = obj["rows"][1:]
    obj["exprs"] = obj["exprs"][1:]
    tampered = write(tmp_path, "short.json", json.dumps(obj))
    assert main(["verify", gpath, tampered]) == EXIT_VERIFY
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is False
    assert any(not v for v in report["receivers"].values())
    assert report["counterexamples"]


def test_verify_input_mismatches(tmp_path, capsys):
    gpath = write(tmp_path, "theta6.graph", THETA6_TEXT)
    k3path = write(tmp_path, "k3.graph", K3_TEXT)
    cpath = str(tmp_path / "k3code.json")
    assert main(["encode", k3path, "--out", cpath]) == EXIT_OK
    assert main(["verify", gpath, cpath]) == EXIT_INPUT
    assert "messages" in capsys.readouterr().err
    assert main(["verify", k3path, cpath, "--q", "3"]) == EXIT_INPUT
    assert "q=2" in capsys.readouterr().err


def test_minrank_command(tmp_path, capsys):
    path = write(tmp_path, "k3.graph", K3_TEXT)
    assert main(["minrank", path]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {
        "minrank": 1,
        "witness": [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
        "columns": [1, 2, 3],
    }


def test_gen_random_round_trip(tmp_path, capsys):
    assert main(["gen", "--random", "--n", "8", "--p", "0.3",
                 "--seed", "7"]) == EXIT_OK
    out = capsys.readouterr().out
    assert parse_digraph(out) == random_digraph(8, 0.3, 7)
    assert out.endswith("\n") and not out.endswith("\n\n")


def test_gen_structured_with_config(tmp_path):
    gfile = tmp_path / "g.graph"
    cfile = tmp_path / "cfg.json"
    assert main(["gen", "--structured", "1,1,1,1,1,1,1,1,1",
                 "--out", str(gfile), "--config-out", str(cfile)]) == EXIT_OK
    assert gfile.read_text() == serialize_digraph(parse_digraph(THETA6_TEXT)) + "\n"
    cfg = json.loads(cfile.read_text())
    assert cfg["junctions"] == [1, 2, 3, 4, 5, 6]
    assert cfg["I"] == [4, 3]


def test_gen_flag_validation(tmp_path, capsys):
    assert main(["gen"]) == EXIT_INPUT
    assert main(["gen", "--random", "--structured", "1,1,1,1,1,1,0,0,0"]) == EXIT_INPUT
    assert main(["gen", "--random", "--n", "5"]) == EXIT_INPUT
    assert main(["gen", "--random", "--n", "5", "--p", "0.2", "--seed", "1",
                 "--config-out", str(tmp_path / "c.json")]) == EXIT_INPUT
    assert main(["gen", "--structured", "1,2,3"]) == EXIT_INPUT
    assert main(["gen", "--structured", "a,1,1,1,1,1,0,0,0"]) == EXIT_INPUT
    assert main(["gen", "--structured", "0,1,1,1,1,1,0,0,0"]) == EXIT_INPUT
    capsys.readouterr()


def test_bad_graph_file(tmp_path, capsys):
    path = write(tmp_path, "bad.graph", "2 1\n1 1\n")
    assert main(["analyze", path]) == EXIT_INPUT
    assert "line 2" in capsys.readouterr().err
    assert main(["analyze", str(tmp_path / "missing.graph")]) == EXIT_INPUT


def test_no_command_is_usage_error():
    with pytest.raises(SystemExit):
        main([])


def test_selftest_reporting(tmp_path, capsys, monkeypatch):
    fake = [CriterionResult("criterion-1", True, "swept", 0.01),
            CriterionResult("criterion-5", False, "broke", 0.02)]
    monkeypatch.setattr("indexcode.cli.run_level", lambda level: fake)
    assert main(["selftest"]) == EXIT_VERIFY
    out = capsys.readouterr().out
    assert "criterion-1: PASS - swept (0.0s)" in out
    assert "criterion-5: FAIL - broke (0.0s)" in out
    monkeypatch.setattr("indexcode.cli.run_level", lambda level: fake[:1])
    assert main(["selftest", "--level", "full"]) == EXIT_OK
