import json
import subprocess
import sys
from fractions import Fraction

import pytest

from cherednik_coinv.cli import main, parse_args, run
from cherednik_coinv.exactfield import ParameterSet
from cherednik_coinv.polyring import Polynomial


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_examples():
    cfg = parse_args("jack --r 2 --p 1 --n 2 --mu 0,1".split())
    assert (cfg.subcommand, cfg.r, cfg.p, cfg.n, cfg.mu) == ("jack", 2, 1, 2, (0, 1))
    assert cfg.kappa == 0 and cfg.fmt == "text"
    cfg = parse_args("verify --r 3 --p 3 --n 3".split())
    assert cfg.level == "quick" and cfg.p == 3
    cfg = parse_args("jack --r 4 --p 2 --n 2 --mu 1,0 --kappa 1/2 --c0 2/7 --c 2=1/5".split())
    assert cfg.kappa == Fraction(1, 2)
    assert cfg.params() == ParameterSet.default(4, 2, kappa=Fraction(1, 2), c0=Fraction(2, 7),
                                                c={2: Fraction(1, 5)})


@pytest.mark.parametrize("argv", [
    "hilbert --p 3 --r 4 --n 2",
    "jack --r 2 --n 2 --mu 0,1,2",
    "jack --r 2 --n 2 --mu 0,-1",
    "jack --r 2 --n 2 --mu 0,1 --kappa 0.5",
    "jack --r 4 --p 2 --n 2 --mu 0,1 --c 1=1/2",
    "basis --r 2 --n 2 --kappa 1",
    "apply --r 2 --n 2 --mu 0,1 --op s --i 2",
    "apply --r 2 --n 2 --mu 0,1 --op sigma",
    "frobnicate --r 2 --n 2",
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = call(capsys, *argv.split())
    assert code == 2 and "error" in err


def test_hilbert_text(capsys):
    code, out, _ = call(capsys, "hilbert", "--r", "2", "--p", "1", "--n", "2")
    assert code == 0 and out.strip() == "1 2 2 2 1"
    code, out, _ = call(capsys, "flagmaj", "--r", "2", "--p", "2", "--n", "2")
    assert out.strip() == "1 2 1"


def test_jack_constant(capsys):
    code, out, _ = call(capsys, "jack", "--r", "3", "--n", "2", "--mu", "0,0", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert Polynomial.from_json(obj["poly"]) == Polynomial.constant(2, 3, 1)
    assert obj["weight"]["beta"] == [0, 0]
    code, out, _ = call(capsys, "jack", "--r", "3", "--n", "2", "--mu", "0,0")
    assert out.startswith("f_(0, 0) = 1")


def test_json_is_byte_stable(capsys, monkeypatch):
    monkeypatch.delenv("CHEREDNIK_SEED", raising=False)
    argv = ["basis", "--r", "2", "--n", "2", "--format", "json"]
    _, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    assert first == second
    assert "seed" not in json.loads(first)


def test_seed_is_recorded(capsys, monkeypatch):
    monkeypatch.setenv("CHEREDNIK_SEED", "42")
    argv = ["jack", "--r", "3", "--n", "2", "--mu", "1,0", "--format", "json"]
    _, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    obj = json.loads(first)
    assert first == second and obj["seed"] == "42"
    assert ParameterSet.from_json(obj["params"]) != ParameterSet.default(3, 1)


def test_verify_reports_four_basis_elements(capsys):
    code, out, _ = call(capsys, "verify", "--r", "2", "--p", "2", "--n", "2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["ok"] and obj["basis_size"] == 4
    code, out, _ = call(capsys, "verify", "--r", "2", "--p", "2", "--n", "2", "--level", "full")
    assert code == 0 and "FAIL" not in out and "PASS chains" in out


def test_other_subcommands(capsys):
    code, out, _ = call(capsys, "descents", "--r", "1", "--n", "3", "--format", "json")
    assert code == 0
    assert sorted(len(c["members"]) for c in json.loads(out)["classes"]) == [1, 1, 2, 2]
    code, out, _ = call(capsys, "relations", "--r", "2", "--n", "2", "--degree", "2")
    assert code == 0 and "FAIL" not in out
    code, out, _ = call(capsys, "apply", "--r", "2", "--n", "2", "--mu", "0,1", "--op", "sigma",
                        "--i", "1", "--jack")
    assert code == 0 and out.strip() == "x1"
    code, out, _ = call(capsys, "apply", "--r", "1", "--n", "2", "--mu", "1,1", "--op", "h",
                        "--kappa", "1")
    assert out.strip() == "2*x1*x2"


def test_genericity_failure_exit_1(capsys):
    # r = 1: delta for (1, 0) is kappa - c0, zero at kappa = c0
    cfg = parse_args("jack --r 1 --n 2 --mu 1,0 --kappa 1/3 --c0 1/3".split())
    assert run(cfg) == 1
    assert "genericity" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cherednik_coinv", "hilbert", "--r", "1",
                           "--n", "3"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 2 2 1"
