import json

import pytest

from lrsnake.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_phi_golden(capsys):
    code, out = run(capsys, "phi", "--n", "4", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0")
    assert code == 0 and out == "5,5,5,1\n"


def test_phi_trace(capsys):
    _, out = run(capsys, "phi", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0", "--trace")
    assert "tau: 1,2,2,3" in out and "nu: 4,2,1,-1" in out and "eta: 1,1,1,-3" in out


def test_phi_trivial_echo(capsys):
    _, out = run(capsys, "phi", "--mu", "2,1,0", "--omega", "1,1,1")
    assert out.strip() == "1,1,1"


def test_phi_json(capsys):
    _, out = run(capsys, "phi", "--a", "1", "--b", "4", "--mu", "2,1,0,0", "--omega", "5,3,2,0", "--json")
    assert json.loads(out) == {"omega": "5,3,2,0", "phi": "5,5,5,1"}


def test_lr_golden(capsys):
    code, out = run(capsys, "lr", "--n", "4", "--mu", "5,1,1,0", "--nu", "2,1,0,0", "--lambda", "5,3,2,0")
    assert code == 0 and out == "1\n"


def test_lr_family_csv(capsys):
    _, out = run(capsys, "lr", "--mu", "1,0", "--nu", "1,0", "--csv")
    assert out.splitlines() == ["lambda,coeff", '"2,0",1', '"1,1",1']


@pytest.mark.parametrize(
    "argv",
    [
        ["phi", "--mu", "2,1", "--omega", "3,x"],
        ["phi", "--n", "3", "--mu", "2,1", "--omega", "3,0"],
        ["phi", "--mu", "1,-1", "--omega", "0,0"],
        ["verify", "nonsense"],
        ["verify", "tropical", "--lo", "2", "--hi", "1"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_main_small(capsys):
    code, out = run(capsys, "verify", "main", "--n", "3", "--max-ab", "2", "--max-mu1", "3")
    rep = json.loads(out)
    assert code == 0 and rep["suite"] == "main" and rep["failures"] == []
    assert set(rep) >= {"suite", "params", "instances", "failures", "elapsed_ms", "seed"}


def test_verify_counterexamples(capsys):
    code, out = run(capsys, "verify", "counterexamples")
    rep = json.loads(out)
    assert code == 0
    assert rep["reproductions"]["n4_instance"]["y"] == [[1, 1, 1, 1], [2, 2, 0, 0]]
    assert len(rep["reproductions"]["n3_family"]) == 21


def test_verify_deterministic_apart_from_timing(capsys):
    def once():
        _, out = run(capsys, "verify", "birational", "--n", "3", "--samples", "20", "--seed", "5")
        rep = json.loads(out)
        rep.pop("elapsed_ms")
        return rep

    a, b = once(), once()
    assert a == b and a["seed"] == 5


def test_verify_failure_exit_code(monkeypatch, capsys):
    import lrsnake.cli as cli

    monkeypatch.setattr(cli, "run_suite", lambda name, **kw: {"suite": name, "params": {}, "instances": 1, "failures": [{}], "elapsed_ms": 0, "seed": None})
    code, _ = run(capsys, "verify", "jt")
    assert code == 1


def test_verify_csv(capsys):
    code, out = run(capsys, "verify", "jt", "--n", "3", "--csv")
    header, row = out.splitlines()
    assert header == "suite,instances,failures,elapsed_ms,seed"
    assert row.startswith("jt,") and row.split(",")[2] == "0"
