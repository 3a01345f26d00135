import json
import subprocess
import sys

import pytest

from fuzzyorder.cli import main
from fuzzyorder.instance import InvalidInstance, load, loads


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def counterexample_file(tmp_path, capsys):
    path = tmp_path / "ce.json"
    assert run(capsys, "gen", "counterexample", "--tnorm", "godel", "--a", 0.5, "--b", 0.7, "--out", path)[0] == 0
    return path


def test_validate_ok(counterexample_file, capsys):
    code, out, _ = run(capsys, "validate", counterexample_file)
    assert code == 0 and "valid" in out


def test_validate_condition_i(counterexample_file, tmp_path, capsys):
    data = json.loads(counterexample_file.read_text())
    data["hom"][0][1] = 0.9
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "validate", bad, "--json")
    assert code == 1
    report = json.loads(out)
    first = [v for v in report["violations"] if v["condition"].startswith("(i)")][0]
    assert first["indices"] == [0, 1] and first["lhs"] == 0.9 and first["rhs"] == 0.0


def test_validate_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "validate", bad)[0] == 2
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2
    bad.write_text(json.dumps({"hom": [[1]]}))
    assert run(capsys, "validate", bad)[0] == 2


def test_classify_counterexample(counterexample_file, capsys):
    code, out, _ = run(capsys, "classify", counterexample_file, "--weight", "phi", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["cauchy"] is True and d["forward_cauchy"] is False and d["bicauchy"] is False
    assert d["flat"]["status"] == "CertifiedFlat"


def test_classify_yoneda_fixture(tmp_path, capsys):
    path = tmp_path / "y.json"
    path.write_text(json.dumps({"tnorm": "godel", "objects": ["a", "b"], "hom": [[0.2, 0.2], [0.2, 0.6]],
                                "weights": [{"name": "y", "type": 0.6, "values": [0.2, 0.6]}]}))
    d = json.loads(run(capsys, "classify", path, "--json")[1])
    assert d["cauchy"] and d["forward_cauchy"] and d["bicauchy"]
    assert d["flat"]["status"] == "CertifiedFlat"


def test_classify_refutation_round_trip(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"tnorm": "godel", "hom": [[1.0]],
                                "weights": [{"name": "phi", "type": 1.0, "values": [0.5]}]}))
    code, out, _ = run(capsys, "classify", path, "--weight", "phi", "--json")
    d = json.loads(out)
    assert d["cauchy"] is False and d["flat"]["status"] == "RefutedFlat"
    evidence = tmp_path / "evidence.json"
    evidence.write_text(out)
    code, out, _ = run(capsys, "classify", path, "--weight", "phi", "--recheck", evidence, "--json")
    assert code == 0 and json.loads(out)["refutation_confirmed"] is True


def test_classify_unknown_weight(counterexample_file, capsys):
    code, _, err = run(capsys, "classify", counterexample_file, "--weight", "nope")
    assert code == 1 and "nope" in err


def test_classify_sequence(tmp_path, capsys):
    path = tmp_path / "h.json"
    path.write_text(json.dumps({"tnorm": "godel", "objects": ["p", "q"], "hom": [[0.5, 0.5], [0.5, 0.5]],
                                "sequences": [{"name": "s", "prefix": [], "cycle": ["p", "q"]}]}))
    d = json.loads(run(capsys, "classify", path, "--seq", "s", "--json")[1])
    assert d["forward_cauchy"] and d["type"] == 0.5
    assert d["yoneda_limits"] == d["bilimits"] == ["p", "q"]


def test_completeness_commands(counterexample_file, tmp_path, capsys):
    d = json.loads(run(capsys, "completeness", counterexample_file, "--mode", "cauchy", "--json")[1])
    assert d["complete"] == "No" and d["witnesses"][0]["values"] == [0.5, 0.0]
    d = json.loads(run(capsys, "completeness", counterexample_file, "--mode", "yoneda", "--json")[1])
    assert d["complete"] == "Yes"
    path = tmp_path / "min.json"
    assert run(capsys, "gen", "min", "--values", "0.2,0.6", "--out", path)[0] == 0
    d = json.loads(run(capsys, "completeness", path, "--mode", "yoneda", "--json")[1])
    assert d["complete"] == "Yes"


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(capsys, "gen", "random", "--objects", 5, "--seed", 7, "--out", p)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    inst = load(a)
    assert inst.category.size == 5 and inst.validate().ok
    c = tmp_path / "c.json"
    run(capsys, "gen", "random", "--objects", 5, "--seed", 8, "--out", c)
    assert c.read_bytes() != a.read_bytes()


def test_gen_final_prop(capsys):
    code, out, _ = run(capsys, "gen", "final-prop", "--tnorm", "godel", "--a", 0.5, "--resolution", 4)
    inst = loads(out)
    assert code == 0 and inst.category.size == 5
    assert inst.weights["phi"].values.tolist() == [1, 0.5, 0.5, 0.5, 0.5]


def test_gen_precondition_failure(capsys):
    code, _, err = run(capsys, "gen", "counterexample", "--a", 0.8, "--b", 0.7)
    assert code == 1 and "0 < a < b < 1" in err
    assert run(capsys, "gen", "counterexample", "--tnorm", "luk", "--a", 0.5, "--b", 0.7)[0] == 1


def test_loader_rejects_invalid():
    with pytest.raises(InvalidInstance) as info:
        loads(json.dumps({"tnorm": "godel", "hom": [[0.5, 0.9], [0.0, 1.0]]}))
    assert info.value.report is not None and not info.value.report.ok


def test_round_trip(counterexample_file):
    inst = load(counterexample_file)
    assert inst.dumps() == counterexample_file.read_text()


def test_module_entry_point(counterexample_file):
    proc = subprocess.run([sys.executable, "-m", "fuzzyorder", "validate", str(counterexample_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
