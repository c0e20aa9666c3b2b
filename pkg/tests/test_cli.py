import json
import subprocess
import sys

import pytest

from cyclicspec.cli import InstanceSpec, random_instance, run_suite
from cyclicspec.cli.main import main
from cyclicspec.errors import RetryBudgetExhausted
from cyclicspec.polyalg.fields import GF
from cyclicspec.serialize import dumps, higgs_to_json

GRAPH = {"m": 2, "field": {"type": "Fp", "p": 7}, "dims": [1, 1],
         "phi": [[[["0", "1"]]], [[["6", "1"]]]]}
NODE = {"m": 1, "field": {"type": "Q"}, "dims": [2],
        "phi": [[[["0", "1"], ["0"]], [["0"], ["0", "-1"]]]]}      # (t - x)(t + x)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "H.json"
    p.write_text(json.dumps(GRAPH))
    return str(p)


# ------------------------------------------------------------------ instances

def test_random_instance_deterministic():
    spec = InstanceSpec(3, (2, 1, 2), seed=1)
    assert random_instance(spec) == random_instance(spec)


def test_random_instance_shapes():
    H = random_instance(InstanceSpec(2, (2, 1), seed=5))
    assert [A.shape for A in H.phi] == [(1, 2), (2, 1)]


def test_smooth_filter_linear_case():
    H = random_instance(InstanceSpec(2, (1, 1), GF(7), 1, seed=3, filter="smooth"))
    assert all(A[0, 0].degree() <= 1 for A in H.phi)


def test_retry_budget_reported():
    # constant 2x2 loops over F3: the curve is a product of A^1 with the roots of a
    # quadratic, reducible unless the quadratic is; seed 0 draws a reducible one
    with pytest.raises(RetryBudgetExhausted):
        random_instance(InstanceSpec(1, (2,), GF(3), 0, seed=0, filter="smooth", retries=1))


# ------------------------------------------------------------------ suites

def test_suite_center_dimension():
    rep = run_suite("center", GF(10007), m=2, N=4)
    assert rep.passed
    assert rep.checks[0].witness["dimension"] == 3


def test_suite_clifford():
    rep = run_suite("clifford", GF(10007))
    assert rep.passed
    assert rep.checks[0].witness["products_checked"] == 16


def test_suite_correspond_count():
    rep = run_suite("correspond", GF(10007), seed=7, count=20)
    assert len(rep.checks) == 20 and rep.passed


def test_suite_unknown():
    with pytest.raises(ValueError):
        run_suite("nope", GF(7))


# ------------------------------------------------------------------ commands

def test_center_command(capsys):
    code, out, _ = run(["center", "--m", "2", "--N", "4", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] and doc["checks"][0]["witness"]["dimension"] == 3
    assert set(doc) == {"report", "version", "field", "seed", "pass", "checks"}


def test_reports_are_byte_identical(capsys):
    argv = ["--seed", "3", "suite", "spectral", "--count", "4", "--json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_timing_is_opt_in(capsys):
    _, out, _ = run(["center", "--m", "1", "--N", "2", "--json"], capsys)
    assert "seconds" not in out
    _, out, _ = run(["center", "--m", "1", "--N", "2", "--json", "--timing"], capsys)
    assert "seconds" in out


def test_reduce_and_fiber(capsys, tmp_path):
    assert run(["--field", "F7", "reduce", "--m", "2"], capsys)[0] == 0
    out = tmp_path / "fib.json"
    code, _, _ = run(["--field", "F7", "reduce", "--m", "2", "--at", "0,0", "--out", str(out)], capsys)
    doc = json.loads(out.read_text())
    assert code == 0 and doc["simple"] is False and doc["associative"]
    assert run(["--field", "F7", "fiber", "--m", "3"], capsys)[0] == 0


def test_spectral_command(capsys, graph_file, tmp_path):
    rep = tmp_path / "rep.json"
    code, _, _ = run(["spectral", "--in", graph_file, "--report", str(rep)], capsys)
    assert code == 0
    assert json.loads(rep.read_text())["pass"]


def test_correspond_pipeline(capsys, graph_file, tmp_path):
    sd = tmp_path / "SD.json"
    back = tmp_path / "H2.json"
    assert run(["correspond", "forward", "--in", graph_file, "--out", str(sd)], capsys)[0] == 0
    doc = json.loads(sd.read_text())
    assert set(doc) >= {"c", "L0", "divisors"}
    assert run(["correspond", "reverse", "--in", str(sd), "--out", str(back)], capsys)[0] == 0
    assert json.loads(back.read_text()) == GRAPH
    code, out, _ = run(["correspond", "roundtrip", "--in", graph_file, "--json"], capsys)
    assert code == 0 and json.loads(out)["pass"]


def test_unsupported_regime_exit_code(capsys, tmp_path):
    p = tmp_path / "node.json"
    p.write_text(json.dumps(NODE))
    code, _, err = run(["correspond", "forward", "--in", str(p)], capsys)
    assert code == 3 and "unsupported" in err


def test_usage_errors(capsys, tmp_path):
    assert run(["center"], capsys)[0] == 2
    assert run(["gen", "--m", "2", "--dims", "1"], capsys)[0] == 2
    assert run(["--field", "F8", "center", "--m", "1", "--N", "1"], capsys)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"m": 2,\n "dims": [1, 1],,}')
    code, _, err = run(["spectral", "--in", str(bad)], capsys)
    assert code == 2 and "bad.json:2:" in err
    code, _, err = run(["spectral", "--in", str(tmp_path / "missing.json")], capsys)
    assert code == 2


def test_gen_deterministic(capsys):
    argv = ["--seed", "1", "gen", "--m", "2", "--dims", "2,1"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b
    doc = json.loads(a)
    assert doc["dims"] == [2, 1] and len(doc["phi"][0]) == 1 and len(doc["phi"][0][0]) == 2


def test_clifford_command(capsys):
    assert run(["clifford", "check"], capsys)[0] == 0
    assert run(["--field", "Q", "clifford"], capsys)[0] == 0
    assert run(["--field", "F7", "clifford", "--fiber", "0", "--fiber", "3"], capsys)[0] == 0
    assert run(["--field", "F2", "clifford"], capsys)[0] == 3


def test_console_script_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "cyclicspec.cli.main", "center", "--m", "2", "--N", "4"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "center: 1/1 passed" in out.stdout
