import json
import subprocess
import sys

import pytest

from linkinv.cli import run
from linkinv.diagram import parse_pd
from linkinv.families import torus2


def call(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_then_invariants(capsys, monkeypatch):
    code, pd, _ = call(["construct", "torus2", "3"], capsys)
    assert code == 0 and parse_pd(pd) == torus2(3)
    code, out, _ = call(["invariants"], capsys, stdin=pd, monkeypatch=monkeypatch)
    r = json.loads(out)
    assert code == 0 and r["schema"] == 1
    assert r["determinant"] == {"re": -3, "im": 0} and r["signature"] == -2 and r["det_abs"] == 3


def test_turks_head_pipe_in_a_subprocess():
    pd = subprocess.run([sys.executable, "-m", "linkinv", "construct", "turkshead", "5"],
                        capture_output=True, text=True, check=True).stdout
    out = subprocess.run([sys.executable, "-m", "linkinv", "invariants"], input=pd,
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["det_abs"] == 121


@pytest.mark.parametrize("argv", [
    ["invariants", "braid 3: 1 -2 1 -2", "--bracket"],
    ["goeritz", "X(4,2,5,1) X(2,6,3,5) X(6,4,1,3)"],
    ["seifert", "braid 3: 1 -2 1 -2"],
    ["bracket", "X(4,2,5,1) X(2,6,3,5) X(6,4,1,3)"],
    ["signature", "braid 2: 1 1 1", "--psi", "1,1"],
    ["signature", "braid 3: -1 2 -1 2 2 2", "--function"],
    ["qa", "braid 2: 1 1 1", "--depth", "3"],
    ["graph", "v 2\ne 0 1 +\ne 0 1 +\ne 0 1 +\nrot 0: 0 1 2\nrot 1: 2 1 0"],
    ["lattice", "reduce", "x^2 y^2 X^2 Y^2"],
])
def test_reports_are_json_round_trips(argv, capsys):
    code, out, _ = call(argv, capsys)
    assert code == 0
    r = json.loads(out)
    assert r["schema"] == 1
    assert json.loads(json.dumps(r)) == r


def test_lattice_validate_and_move(capsys):
    code, out, _ = call(["lattice", "validate", "x y X Y"], capsys)
    assert code == 0 and json.loads(out)["ok"] and json.loads(out)["edges"] == 4
    code, out, _ = call(["lattice", "move", "x y X Y", "DH2", "0", "--dir", "Y"], capsys)
    assert code == 0 and json.loads(out)["result_edges"] == 6


def test_table_output(capsys):
    code, out, _ = call(["invariants", "braid 2: 1 1 1", "--table"], capsys)
    assert code == 0 and out.splitlines()[0].split()[0] == "schema"


@pytest.mark.parametrize("argv", [
    ["invariants", "X(1,2,3)"],
    ["lattice", "validate", "x x y"],
    ["signature", "braid 2: 1 1", "--function"],
    ["construct", "torus2"],
    ["lattice", "move", "x y X Y", "DH2", "0"],
    ["graph", "e 0 1 +"],
])
def test_input_errors_exit_with_two(argv, capsys):
    code, _, err = call(argv, capsys)
    assert code == 2 and err.startswith("error:")


def test_unknown_subcommand_exits_with_two(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2
