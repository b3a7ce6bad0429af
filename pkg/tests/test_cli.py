import csv
import io
import json
import subprocess
import sys

import pytest

from springer_comb.cli import SCHEMA, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


P232 = ("--n", "2", "--m", "3", "--d", "2")
P233 = ("--n", "2", "--m", "3", "--d", "3")


def test_params():
    code, doc = call_json("params", *P232)
    assert code == 0 and doc["schema"] == SCHEMA
    assert doc["params"]["delta"] == 8 and doc["params"]["ahat"] == [[0, 6], [13, 19]]


@pytest.mark.parametrize("bad", [("--n", "2", "--m", "4", "--d", "1"), ("--n", "3", "--m", "2", "--d", "1"),
                                 ("--n", "2", "--m", "3", "--d", "0")])
def test_invalid_params_exit_2(bad, capsys):
    code, text = call("params", *bad)
    assert code == 2 and text == ""
    assert "error" in capsys.readouterr().err


def test_missing_flag_exit_2():
    assert call("params", "--n", "2", "--m", "3")[0] == 2


def test_verify_cdp():
    code, doc = call_json("verify-cdp", *P232, "--jobs", "1")
    assert code == 0 and doc["equal"] is True and doc["difference"] == []
    assert doc["L"] == doc["Hmot"]


def test_psi_example():
    code, doc = call_json("psi", *P233, "--input", "0,0,0,1,2,7")
    assert code == 0
    assert doc["c"] == [[0, 1], [0, 3], [2, 4]] and doc["p"] == [1, 3]
    assert doc["gens"] == [0, 3, 19, 10, 26, 23]


def test_psi_output_feeds_phi():
    _, doc = call_json("psi", *P233, "--input", "0,0,0,1,2,7")
    flat = ",".join(str(x) for row in doc["c"] for x in row)
    code, back = call_json("phi", *P233, "--input", flat)
    assert code == 0 and back["y"] == [0, 0, 0, 1, 2, 7] and back["p_tilde"] == [1, 3]


def test_bad_input_exit_2():
    assert call("psi", *P233, "--input", "0,0,0,1,2,9")[0] == 2
    assert call("psi", *P233, "--input", "0,x")[0] == 2
    assert call("phi", *P232, "--input", "0,1,0,2")[0] == 2


def test_enumerate_dyck_csv():
    code, text = call("enumerate-dyck", *P232, "--format", "csv", "--jobs", "1")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert rows[0] == ["n", "m", "d", "y_0", "y_1", "y_2", "y_3", "size", "dinv", "codinv"]
    assert len(rows) == 24
    assert rows[-1] == ["2", "3", "2", "0", "1", "3", "4", "8", "8", "0"]


def test_enumerate_adm():
    code, doc = call_json("enumerate-adm", *P232, "--jobs", "1")
    assert code == 0 and doc["count"] == 23
    assert doc["matrices"][0]["c"] == [[0, 0], [0, 0]]


def test_polynomials():
    code, doc = call_json("lfunction", "--n", "2", "--m", "3", "--d", "1", "--jobs", "1")
    assert code == 0 and doc["polynomial"] == [[0, 0, "1"], [1, 2, "1"]]
    code, doc2 = call_json("hmot", "--n", "2", "--m", "3", "--d", "1", "--jobs", "1")
    assert doc2["polynomial"] == doc["polynomial"]
    code, text = call("lfunction", *P232, "--format", "csv", "--jobs", "1")
    assert text.splitlines()[:3] == ["q_exp,t_exp,coeff", "0,0,1", "1,2,1"]


def test_polynomial_sorted_by_t_then_q():
    _, doc = call_json("lfunction", *P232, "--jobs", "1")
    keys = [(b, a) for a, b, _ in doc["polynomial"]]
    assert keys == sorted(keys)
    assert all(isinstance(c, str) for _, _, c in doc["polynomial"])


def test_cells():
    code, doc = call_json("cells", *P233, "--tau", "24", "--jobs", "1")
    assert code == 0
    hit = [c for c in doc["cells"] if c["c"] == [[0, 1], [0, 3], [3, 5]]]
    assert hit and hit[0]["dim"] == 12 and hit[0]["tau0"] == 12
    assert call("cells", *P233)[0] == 2


def test_sweep():
    code, doc = call_json("sweep", *P232, "--input", "0,0,0,0")
    assert code == 0 and sum(doc["zeta"]) == 8
    code, doc = call_json("sweep", *P232, "--jobs", "1")
    assert doc["count"] == 23


def test_selftest():
    code, doc = call_json("selftest")
    assert code == 0 and doc["ok"] and len(doc["checks"]) > 10


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "springer_comb", "verify-cdp", *P232, "--jobs", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["equal"]
    res = subprocess.run([sys.executable, "-m", "springer_comb", "params", "--n", "4", "--m", "6", "--d", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 2 and res.stdout == "" and res.stderr


def test_verification_failure_exit_1(monkeypatch, capsys):
    from springer_comb import cli
    from springer_comb.genfun import CdpReport
    from springer_comb.polynomial import BivarPoly

    one = BivarPoly.monomial(1, 1)
    monkeypatch.setattr(cli, "verify_cdp", lambda p, jobs: CdpReport(False, one, one, BivarPoly()))
    code, doc = call_json("verify-cdp", *P232)
    assert code == 1 and doc["equal"] is False and doc["difference"] == [[1, 1, "1"]]
    assert "L - Hmot" in capsys.readouterr().err
