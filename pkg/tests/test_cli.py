import json
import shutil
import subprocess
import sys

import pytest

from yano import golden
from yano.cli import main

CORPUS = golden.default_corpus_dir()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series_cusp(capsys):
    code, out, _ = run(capsys, "series", "--charseq", "2;3")
    assert code == 0
    assert out.splitlines()[0] == "t^(5/6) + t^(7/6)"
    assert "mu: 2" in out and "mass: 2" in out


def test_series_val4_graph(capsys):
    code, out, _ = run(capsys, "series", "--graph", str(CORPUS / "val4.json"))
    assert code == 0
    assert out.splitlines()[0].count("t") == 11
    assert "mu: 15" in out


def test_coefficient_query(capsys):
    code, out, _ = run(capsys, "series", "--graph", str(CORPUS / "acampo-23-210.json"),
                       "--coefficient", "19/13")
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, "series", "--charseq", "2;3", "--coefficient", "5/6")
    assert (code, out) == (0, "1\n")


def test_series_from_pairs(capsys):
    a = run(capsys, "series", "--pairs", "2:3,2:1")
    b = run(capsys, "series", "--charseq", "4;6,7")
    assert a == b and a[0] == 0


def test_series_parse_error(capsys):
    code, _, err = run(capsys, "series", "--charseq", "2,3")
    assert code == 1 and err.startswith("error:")
    code, _, _ = run(capsys, "series", "--charseq", "4;6,8")
    assert code == 1


def test_nonpositive_milnor_number_exit_code(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"vertices": [{"N": 2, "nu": 1, "delta": 1}]}))
    code, _, err = run(capsys, "series", "--graph", str(p))
    assert code == 3 and "error" in err


def test_monodromy_verdicts(capsys):
    code, out, _ = run(capsys, "monodromy", "--graph", str(CORPUS / "val4.json"))
    assert code == 0 and "verdict: multiple" in out
    code, out, _ = run(capsys, "monodromy", "--charseq", "2;3")
    assert code == 0 and "verdict: simple" in out
    assert [line.split()[0] for line in out.splitlines()[:2]] == ["1/6", "5/6"]
    code, out, _ = run(capsys, "monodromy", "--graph", str(CORPUS / "acampo-23-23.json"))
    assert "mu: 11" in out


def test_monodromy_gcd_criterion(capsys):
    code, out, _ = run(capsys, "monodromy", "--pairs", "2:3,2:1")
    assert code == 0
    assert "gcd criterion: simple" in out and "verdict: simple" in out


def test_polygon(capsys):
    code, out, err = run(capsys, "polygon", "0,5;3,0")
    assert code == 0
    assert "roots (8):" in out and out.rstrip().endswith("-22/15")
    assert "not checked" in err
    code, out, _ = run(capsys, "polygon", "3,3;7,0;0,8")
    assert out.splitlines()[1].split(": ")[1].split()[0] == "-1/3"
    code, _, err = run(capsys, "polygon", "2,0")
    assert code == 1 and "error" in err


def test_residue_pipeline(capsys):
    code, out, _ = run(capsys, "residue", "--pipeline", str(CORPUS / "residue-34-35.json"))
    assert code == 0
    assert "closed form: -8/441*B(5/7,2/3)" in out


def test_residue_direct(capsys):
    code, out, _ = run(capsys, "residue", "--f", "1", "--a", "2,3", "--b", "1,1", "--at", "-1/2")
    assert code == 0 and "order 1" in out
    code, out, _ = run(capsys, "residue", "--f", "1 + x + y", "--at", "-1")
    assert "order 2" in out and "coefficient of (s - alpha)^-2: 1" in out
    code, _, err = run(capsys, "residue", "--f", "1", "--a", "2,3", "--at", "-2/5")
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "residue", "--f", "1 + t*x", "--param", "t", "--at", "-1")
    assert code == 1


def test_json_output(capsys):
    code, out, _ = run(capsys, "--json", "series", "--charseq", "2;3")
    data = json.loads(out)
    assert data["series"] == "t^(5/6) + t^(7/6)"
    assert data["milnor"] == 2 and data["consistent"] is True
    code, out, _ = run(capsys, "polygon", "0,5;3,0", "--json")
    assert json.loads(out)["count"] == 8
    code, out, _ = run(capsys, "monodromy", "--charseq", "2;3", "--json")
    assert json.loads(out)["eigenvalues"] == {"1/6": 1, "5/6": 1}


def test_corpus_full_run(capsys):
    code, out, _ = run(capsys, "corpus")
    n = len(golden.load_corpus())
    assert code == 0
    assert out.splitlines()[-1] == f"{n}/{n} passed"


def test_corpus_filter(capsys):
    code, out, _ = run(capsys, "corpus", "--only", "residue-34-35")
    assert code == 0
    assert out.splitlines() == ["PASS residue-34-35 [pipeline]", "1/1 passed"]
    code, _, _ = run(capsys, "corpus", "--only", "no-such-case")
    assert code == 1


def test_corpus_missing_dir(capsys, tmp_path):
    code, _, err = run(capsys, "corpus", "--dir", str(tmp_path / "absent"))
    assert code == 1 and "error" in err


def test_corpus_corrupted_value(capsys, tmp_path):
    d = tmp_path / "corpus"
    shutil.copytree(CORPUS, d)
    case = json.loads((d / "cusp.json").read_text())
    case["expected"]["series"] = "t^(5/6) + t^(8/6)"
    (d / "cusp.json").write_text(json.dumps(case))
    code, out, _ = run(capsys, "corpus", "--dir", str(d))
    assert code == 2
    assert "FAIL cusp [charseq]" in out
    assert "t^(4/3)" in out


def test_corpus_inconsistent_graph(capsys, tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "bad.json").write_text(json.dumps({
        "name": "bad", "kind": "graph", "input": {"vertices": [{"N": 2, "nu": 1, "delta": 1}]},
        "expected": {"milnor": 0}, "provenance": "hand-made inconsistent graph",
    }))
    code, out, _ = run(capsys, "corpus", "--dir", str(d))
    assert code == 3 and "FAIL bad" in out


@pytest.mark.parametrize("argv", [
    ["series", "--graph", str(CORPUS / "val4.json")],
    ["monodromy", "--charseq", "6;9,10"],
    ["polygon", "0,10;3,5;12,0"],
    ["corpus", "--only", "acampo"],
])
def test_output_is_byte_deterministic(argv):
    runs = [
        subprocess.run([sys.executable, "-m", "yano", *argv], capture_output=True, check=False)
        for _ in range(2)
    ]
    assert runs[0].returncode == runs[1].returncode == 0
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].stdout
