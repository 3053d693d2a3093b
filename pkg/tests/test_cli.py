"""Command-line front end: outputs, exit codes and determinism."""

import io as stdio
import json
import math
import subprocess
import sys

import pytest

from tachyon.cli import main, parse_velocity


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", stdio.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


class TestVelocityParsing:
    def test_forms(self):
        assert parse_velocity("0.6c", 2.0) == 1.2
        assert parse_velocity("0.6") == 0.6
        assert parse_velocity("0.1c,0,0.2", 10.0).tolist() == [1.0, 0.0, 0.2]

    @pytest.mark.parametrize("text", ["fast", "1,2", ""])
    def test_rejects(self, text):
        with pytest.raises(Exception):
            parse_velocity(text)


class TestTransform:
    def test_infinite(self, cli):
        code, out, _ = cli(["transform", "--infinite"], '{"t":1,"x":2,"y":3,"z":4}')
        data = json.loads(out)
        assert code == 0
        assert data["output"] == {"chi": 1.0, "tau": [2.0, 3.0, 4.0]}
        assert data["interval_before"] == data["interval_after"] == -28

    def test_identity(self, cli):
        code, out, _ = cli(["transform", "--event", "1,2,3,4", "--V", "0"])
        assert code == 0 and json.loads(out)["output"] == {"t": 1, "x": 2, "y": 3, "z": 4}

    def test_superluminal_example(self, cli):
        code, out, _ = cli(["transform", "--event", "0,1", "--W", f"{math.sqrt(2)!r}c"])
        data = json.loads(out)["output"]
        assert code == 0
        assert data["chi"] == pytest.approx(-1.0, abs=1e-15) and data["tau"][0] == pytest.approx(math.sqrt(2))

    @pytest.mark.parametrize("flags", [["--V", "1c"], ["--V", "1.5"], ["--W", "0.5c"], ["--W", "1"]])
    def test_regime_errors(self, cli, flags):
        assert cli(["transform", "--event", "1,2", *flags])[0] == 2

    @pytest.mark.parametrize(
        "argv,stdin",
        [
            (["transform", "--event", "1,2"], ""),
            (["transform", "--V", "0.5", "--W", "2"], '{"t":1,"x":0}'),
            (["transform", "--V", "0.5"], "not json"),
            (["transform", "--V", "0.5"], '{"x":0}'),
            (["transform", "--event", "a,b", "--V", "0.1"], ""),
            (["transform", "--bogus"], ""),
            (["nope"], ""),
        ],
    )
    def test_malformed(self, cli, argv, stdin):
        try:
            code = cli(argv, stdin)[0]
        except SystemExit as exc:  # argparse-level errors
            code = exc.code
        assert code == 1


class TestMomentum:
    def test_eq11(self, cli):
        code, out, _ = cli(["momentum"], '{"mu":1,"w":[2,0,0],"s":[1,0,0]}')
        data = json.loads(out)
        assert code == 0
        assert data["E"] == pytest.approx(1 / math.sqrt(3)) and data["p"][0] == pytest.approx(2 / math.sqrt(3))
        assert data["infinite_velocity_frame"] == pytest.approx([0.5, 0, 0])

    @pytest.mark.parametrize("V,flag", [("0.4c", False), ("0.6c", True)])
    def test_anti_tachyon_flag(self, cli, V, flag):
        code, out, _ = cli(["momentum", "--boost", V], '{"mu":1,"w":[2,0,0],"s":[1,0,0]}')
        assert code == 0 and json.loads(out)["boosted"]["anti_tachyon"] is flag

    def test_infinite(self, cli):
        code, out, _ = cli(["momentum"], '{"mu":1,"w":["inf",0,0],"s":[1,0,0]}')
        data = json.loads(out)
        assert data["E"] == 0 and data["p_magnitude"] == 1

    def test_constraint_violation(self, cli):
        assert cli(["momentum"], '{"mu":1,"w":[2,0,0],"s":[0,1,0]}')[0] == 2

    def test_threshold_is_infinite_outcome(self, cli):
        code, out, _ = cli(["momentum", "--boost", "0.5c"], '{"mu":1,"w":[2,0,0],"s":[1,0,0]}')
        boosted = json.loads(out)["boosted"]
        assert code == 0 and boosted["infinite"] and boosted["anti_tachyon"] is None
        assert boosted["E"] == 0

    def test_superluminal_boost_rejected(self, cli):
        assert cli(["momentum", "--boost", "1.2c"], '{"mu":1,"w":[2,0,0],"s":[1,0,0]}')[0] == 2


class TestAmplitude:
    def test_two_equal_paths(self, cli):
        from tachyon import io
        from tachyon.amplitudes import two_arm_ensemble

        ensemble = io.dumps(io.ensemble_to_json(two_arm_ensemble(1.0, 1.0, 10.0)))
        code, out, _ = cli(["amplitude"], ensemble)
        data = json.loads(out)
        assert code == 0 and data["P"] == pytest.approx(1.0) and data["n"] == 2

    def test_lattice(self, cli):
        code, out, _ = cli(["amplitude", "--lattice", "6,1"])
        assert code == 0 and json.loads(out)["n"] == 126

    def test_cap(self, cli):
        assert cli(["amplitude", "--lattice", "30,0", "--cap", "1000"])[0] == 3

    def test_transfer_ignores_cap(self, cli):
        assert cli(["amplitude", "--lattice", "30,0", "--cap", "1000", "--method", "transfer"])[0] == 0


class TestScan:
    def test_fringe_csv(self, cli, tmp_path):
        target = tmp_path / "fringe.csv"
        assert cli(["scan", "--points", "9", "--out", str(target)])[0] == 0
        lines = target.read_text().splitlines()
        assert lines[0] == "param,P"
        rows = [tuple(map(float, line.split(","))) for line in lines[1:]]
        P = [r[1] for r in rows]
        assert rows[P.index(min(P))][0] == pytest.approx(math.pi)
        assert max(P) == pytest.approx(1.0) and min(P) < 1e-20

    def test_by_arm(self, cli):
        code, out, _ = cli(["scan", "--by", "arm", "--start", "0", "--stop", "1", "--points", "3"])
        assert code == 0 and out.splitlines()[1] == "0,1"


class TestVerify:
    def test_empty(self, cli):
        code, out, _ = cli(["verify", "--trials", "0"])
        assert code == 0 and json.loads(out)["checks"] == []

    @pytest.mark.parametrize("suite", ["kinematics", "fourvectors", "appendixB"])
    def test_suites_pass(self, cli, suite):
        code, out, _ = cli(["verify", "--suite", suite, "--trials", "20", "--seed", "3"])
        assert code == 0 and json.loads(out)["passed"]

    def test_corrupted_exponent(self, cli):
        code, out, _ = cli(["verify", "--suite", "axioms", "--trials", "3", "--A-exp", "1.5", "--expect-fail"])
        data = json.loads(out)
        assert code == 4
        assert data["failures"] == ["axiom_normalization"]
        witness = next(c for c in data["checks"] if c["check"] == "axiom_normalization")["witness"]
        assert witness["n"] > 1

    def test_corruption_needs_flag(self, cli):
        assert cli(["verify", "--suite", "axioms", "--A-exp", "1.5"])[0] == 1

    def test_tol_override(self, cli):
        code, out, _ = cli(["verify", "--suite", "kinematics", "--trials", "5", "--tol", "1e-30"])
        assert code == 4 and json.loads(out)["failures"]

    def test_env_tolerance(self, cli, monkeypatch):
        stdin = '{"mu":1,"w":[2.0001,0,0],"s":[1,0,0]}'
        assert json.loads(cli(["momentum", "--boost", "0.5c"], stdin)[1])["boosted"]["anti_tachyon"] is True
        monkeypatch.setenv("TACHYON_TOL", "1e-3")
        assert json.loads(cli(["momentum", "--boost", "0.5c"], stdin)[1])["boosted"]["anti_tachyon"] is None

    def test_deterministic(self, cli):
        first = cli(["verify", "--suite", "fourvectors", "--trials", "10", "--seed", "11"])
        second = cli(["verify", "--suite", "fourvectors", "--trials", "10", "--seed", "11"])
        assert first == second


def test_entry_point():
    proc = subprocess.run(["tachyon", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "sgn(s'.w')" in proc.stdout and "Exit codes" in proc.stdout
