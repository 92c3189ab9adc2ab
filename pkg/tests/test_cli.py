import io
import json
import subprocess
import sys

import pytest

from qexterior.cli import (EXIT_CONFIG, EXIT_FAIL, EXIT_OK, EXIT_UNCLASSIFIABLE, RunConfig,
                           cmd_verify, main)
from qexterior.report import DimensionReport
from qexterior.cochains import cohomology_dims
from qexterior.algebra import DiagonalAutomorphism
from qexterior.fields import make_field
from qexterior.suite import corrupted_d_matrix


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


SCHEMA_KEYS = {"field", "automorphism", "case", "series", "methods", "checks"}


def test_compute_examples():
    code, doc = run_json("compute", "--char", "0", "--alpha", "q^0", "--beta", "q^0", "--max-degree", "6")
    assert code == EXIT_OK
    assert SCHEMA_KEYS <= doc.keys()
    assert [r["hh"] for r in doc["series"]] == [2, 2, 1, 0, 0, 0, 0]
    assert doc["methods"]["complex"] == doc["methods"]["closed_form"] == [2, 2, 1, 0, 0, 0, 0]
    assert doc["methods"]["oracle"] == [2, 2, 1, 0]
    assert doc["checks"] == {"dd_zero": True, "rank_bound": True, "duality": True}
    assert doc["field"] == {"characteristic": 0, "q": "transcendental"}
    assert set(doc["series"][0]) == {"n", "dim_ker", "dim_im", "hh", "hh_homology"}

    code, doc = run_json("compute", "--char", "2", "--alpha", "q^1", "--beta", "q^-1", "--max-degree", "4")
    assert code == EXIT_OK and doc["methods"]["complex"][1:] == [4] * 4

    code, doc = run_json("compute", "--char", "0", "--alpha", "-q^1", "--beta", "-q^-1", "--max-degree", "3")
    assert code == EXIT_OK and doc["series"][0]["hh"] == 3
    assert doc["case"] == "both-sigma/i"


def test_compute_numeric_q_and_disabled_oracle():
    code, doc = run_json("compute", "--q", "3", "--alpha", "generic", "--beta", "1/3", "--oracle-degree", "-1")
    assert code == EXIT_OK
    assert doc["field"]["q"] == 3 and doc["methods"]["oracle"] is None
    assert doc["automorphism"]["alpha"] == "2" and doc["case"] == "beta-sigma/mirror"


@pytest.mark.parametrize("argv,code", [
    (["compute", "--char", "4"], EXIT_CONFIG),
    (["compute", "--char", "2", "--q", "3"], EXIT_CONFIG),
    (["compute", "--q", "-1"], EXIT_CONFIG),
    (["compute", "--alpha", "0", "--beta", "1"], EXIT_CONFIG),
    (["compute", "--alpha", "q^"], EXIT_CONFIG),
    (["compute", "--alpha", "q^1"], EXIT_CONFIG),
    (["compute", "--max-degree", "-1"], EXIT_CONFIG),
    (["compute", "--oracle-degree", "7"], EXIT_CONFIG),
    (["compute", "--alpha", "(q+1", "--beta", "1"], EXIT_CONFIG),
    (["nonsense"], EXIT_CONFIG),
    (["compute", "--q", "2", "--alpha", "1267650600228229401496703205376", "--beta", "3"], EXIT_UNCLASSIFIABLE),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_output_is_deterministic_and_round_trips():
    for fmt in ("json", "csv", "text"):
        argv = ["compute", "--alpha", "q^-1", "--beta", "q^1", "--max-degree", "5", "--format", fmt]
        assert run(*argv) == run(*argv)
    _, text = run("compute", "--alpha", "q^-1", "--beta", "q^1", "--format", "json")
    assert json.dumps(json.loads(text), indent=2) + "\n" == text
    argv = ["verify", "--alpha", "q^2", "--beta", "generic", "--samples", "3", "--seed", "11"]
    assert run(*argv) == run(*argv)


def test_report_round_trip():
    for p in (0, 2):
        K = make_field(p)
        rep = cohomology_dims(DiagonalAutomorphism.parse("-q^-2", "generic", K), 5, K)
        data = rep.to_json()
        again = DimensionReport.from_json(json.loads(json.dumps(data)))
        assert again.to_json() == data


def test_csv_header():
    code, text = run("compute", "--max-degree", "2", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "n,dim_ker,dim_im,hh,hh_homology,closed_form,oracle"
    assert len(lines) == 4 and lines[1] == "0,2,0,2,2,2,2"


def test_verify_single_and_summary():
    code, doc = run_json("verify", "--alpha", "q^-3", "--beta", "q^3")
    assert code == EXIT_OK and doc["ok"] and doc["labels"] == ["both-sigma/iv/C2"]
    code, text = run("verify", "--char", "2", "--format", "text", "--oracle-degree", "2")
    assert code == EXIT_OK and text.rstrip().endswith("PASS")


def test_verify_negative_control():
    out = io.StringIO()
    cfg = RunConfig("verify", oracle_degree=1, format="text")
    assert cmd_verify(cfg, out, d_matrix_fn=corrupted_d_matrix) == EXIT_FAIL
    text = out.getvalue()
    assert "counterexample:" in text and "d_1" in text and text.rstrip().endswith("FAIL")


def test_table():
    code, doc = run_json("table")
    assert code == EXIT_OK
    assert [r["dim_ker_d1"] for r in doc["hh0"]] == [3, 2, 2, 2, 1]
    m3 = doc["auslander"][2]
    assert m3["t"] == 3 and m3["nonzero_degrees"] == [6, 7, 8] and m3["hh"][6:9] == [1, 2, 1]
    assert doc["asymmetry"]["forward"]["hh"][1:] == [0] * 10
    assert doc["asymmetry"]["inverse"]["hh"][1:] == [1] * 10
    code, text = run("table", "--which", "hh0", "--format", "csv")
    assert text.splitlines()[0] == "table,alpha,beta,dims" and len(text.splitlines()) == 6


def test_resolution_check():
    code, doc = run_json("resolution-check", "--max-degree", "8")
    assert code == EXIT_OK and all(doc["complex_ok"].values()) and len(doc["complex_ok"]) == 9
    code, doc = run_json("resolution-check", "--max-degree", "6")
    assert all(doc["exact_ok"].values()) and len(doc["exact_ok"]) == 7
    code, doc = run_json("resolution-check", "--max-degree", "0")
    assert code == EXIT_OK and doc["ranks"]["1"] == 12 and list(doc["complex_ok"]) == ["0"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qexterior", "compute", "--max-degree", "2", "--format", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "both-sigma/iv/C2" in proc.stdout
