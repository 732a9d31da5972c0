import json
import subprocess
import sys

import pytest

from vdreduce.cli import main
from support import FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def graph(name):
    return FIXTURES / f"{name}.graph.json"


def test_validate(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", graph("f1"))
    assert code == 0 and out.startswith("ok")
    bad = json.loads(graph("f1").read_text())
    bad["semigroup"] = str(FIXTURES / "semilattice2.semigroup.json")
    bad["vertices"][1]["phi"] = 1
    p = tmp_path / "g.json"
    p.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "validate", p)
    assert code == 1 and "v2" in out


def test_validate_non_associative(capsys, tmp_path):
    sg = tmp_path / "s.json"
    sg.write_text(json.dumps({"table": [[1, 1], [0, 0]], "alphabet": ["a"], "generators": {"a": 0}}))
    code, _, err = run(capsys, "validate", graph("f1"), "--semigroup", sg)
    assert code == 2 and "associative" in err and "(0*0)*0" in err


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", graph("f1"))
    d = json.loads(out)
    assert code == 0
    assert [d[x] for x in ("n_S", "p_eta", "ell_eta", "L", "E", "Q", "q_Q", "M", "k")] == [1, 2, 1, 1, 2, 3, 1, 4, 7]
    assert d["borders"] == ["abab"]


def test_constants_no_root_and_cap(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"semigroup": str(FIXTURES / "semilattice2.semigroup.json"),
                             "vertices": [{"id": "v", "label": "ab"}]}))
    code, out, _ = run(capsys, "constants", p)
    d = json.loads(out)
    assert code == 0 and d["p_eta"] == 1 and "note" in d
    code, _, err = run(capsys, "constants", graph("z3"), "--ecap", "3")
    assert code == 2 and "cap" in err


def test_borders(capsys):
    code, out, _ = run(capsys, "borders", graph("case1"))
    d = json.loads(out)
    assert code == 0 and d["classes"][0]["periodic"] is False


def test_reduce_and_verify_round_trip(capsys, tmp_path):
    out1 = tmp_path / "r.json"
    code, _, _ = run(capsys, "reduce", graph("z3"), "--variety", "g", "--out", out1)
    assert code == 0
    red = json.loads(out1.read_text())
    assert red["ok"]
    code, out, _ = run(capsys, "verify", graph("z3"), "--variety", "g", "--labels", out1)
    ver = json.loads(out)
    assert code == 0
    key = lambda r: (r["check"], r["element"], r["k"] or 0)
    checks = {"phi", "VD", "C1", "C2", "C3"}
    red_v = sorted(((key(r), r["verdict"]) for r in red["report"] if r["check"] in checks))
    ver_v = sorted(((key(r), r["verdict"]) for r in ver["report"]))
    assert red_v == ver_v


def test_reduce_trace(capsys):
    code, out, _ = run(capsys, "reduce", graph("f1"), "--trace")
    d = json.loads(out)
    assert code == 0
    assert d["trace"]["elements"]["v2"]["tau3"] == "(ab)^wb"
    assert "e1" in d["trace"]["edges"]


def test_reduce_deterministic(capsys):
    a = run(capsys, "reduce", graph("letters"), "--trace")[1]
    b = run(capsys, "reduce", graph("letters"), "--trace")[1]
    assert a == b


def test_reduce_bad_eta_k(capsys, tmp_path):
    p = tmp_path / "k.json"
    p.write_text(json.dumps({"labels": {"v1": "(ab)^w", "v2": "(ab)^w a", "e1": "(ab)^w", "e2": "b"}}))
    code, out, _ = run(capsys, "reduce", graph("f1"), "--eta-k", p)
    d = json.loads(out)
    assert code == 1 and not d["ok"]
    assert any(r["check"] == "eta_k" and r["element"] == "v2" and r["verdict"] == "fail" for r in d["report"])


def test_verify_perturbed(capsys, tmp_path):
    p = tmp_path / "l.json"
    p.write_text(json.dumps({"labels": {"v1": "(ab)^w", "v2": "(ab)^w b", "e1": "(ab)^w", "e2": "a"}}))
    code, out, _ = run(capsys, "verify", graph("f1"), "--labels", p)
    assert code == 1
    assert {r["element"] for r in json.loads(out)["report"] if r["verdict"] == "fail"} == {"e2"}
    p.write_text(json.dumps({"labels": {"v1": "(ab)^w"}}))
    code, _, err = run(capsys, "verify", graph("f1"), "--labels", p)
    assert code == 2 and "misses" in err


def test_internal_error_exit(capsys):
    code, _, err = run(capsys, "reduce", graph("lemma1_gap"), "--variety", "g")
    assert code == 3 and "out of order" in err


def test_sample_variety(capsys):
    code, out, _ = run(capsys, "reduce", graph("f1"), "--variety", f"sample:{FIXTURES / 'sample3.json'}")
    assert code == 0
    assert any(r["verdict"] == "unknown" for r in json.loads(out)["report"])
    code, _, _ = run(capsys, "reduce", graph("f1"), "--variety", "j")
    assert code == 2


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "vdreduce.cli", "validate", str(graph("letters"))],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("ok")


@pytest.mark.parametrize("argv", [[], ["frobnicate"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit):
        main(argv)
