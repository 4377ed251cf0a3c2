from __future__ import annotations

import json
import subprocess
import sys

import pytest

from sl3skein.cli import main, parse_pairs
from sl3skein.invariants import ColoredLinkSpec, jones_torus
from sl3skein.tails import tail_series
from sl3skein.twist import twist_expansion
from sl3skein.webcore import builder as tb
from sl3skein.webcore import format_web


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jones_text(capsys):
    code, out, _ = run(capsys, "jones", "--orientation", "parallel", "--m", "1", "--s", "1", "--t", "1")
    assert code == 0
    assert out.strip() == str(jones_torus(ColoredLinkSpec("parallel", 1, 1, 1)))


def test_jones_machine_roundtrip(capsys):
    code, out, _ = run(capsys, "--format", "machine", "jones", "--orientation", "antiparallel",
                       "--m", "2", "--s", "1", "--t", "2")
    assert code == 0
    data = json.loads(out)
    assert parse_pairs(data["pairs"]) == jones_torus(ColoredLinkSpec("antiparallel", 2, 1, 2))


def test_tail(capsys):
    code, out, _ = run(capsys, "--format", "machine", "tail", "--orientation", "antiparallel",
                       "--m", "1", "--order", "10")
    assert code == 0
    assert parse_pairs(json.loads(out)["pairs"]) == tail_series("antiparallel", 1, 10).series
    code, out, _ = run(capsys, "tail", "--orientation", "antiparallel", "--m", "1", "--order", "3")
    assert out.strip() == "1 + 2*q + 4*q^2 + 6*q^3 + O(q^4)"


def test_twist(capsys):
    code, out, _ = run(capsys, "--format", "machine", "twist", "--kind", "parallel",
                       "--s", "2", "--t", "1", "--m", "2", "--convention", "l_form")
    assert code == 0
    data = json.loads(out)
    assert data["basis_convention"] == "l_form"
    exp = twist_expansion("parallel", 2, 1, 2)
    assert {i: parse_pairs(p) for i, p in data["entries"]} == exp.form("l_form")


def test_reduce_closed_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("edges:\n  e1: loop\n"))
    code, out, _ = run(capsys, "reduce", "-")
    assert code == 0
    assert out.strip() == "q^(-1) + 1 + q"


def test_reduce_open_file(capsys, tmp_path):
    f = tmp_path / "x.web"
    f.write_text(format_web(tb.crossing("+", "+", True).diagram))
    code, out, _ = run(capsys, "--format", "machine", "reduce", str(f))
    assert code == 0
    terms = json.loads(out)["terms"]
    assert len(terms) == 2
    nums = sorted(parse_pairs(t["coefficient"]["num"]).to_pairs() for t in terms)
    assert nums == [[(-1, -1)], [(2, 1)]]


def test_reduce_errors(capsys, tmp_path):
    f = tmp_path / "bad.web"
    f.write_text("boundary: p+\n")
    assert run(capsys, "reduce", str(f))[0] == 1
    assert run(capsys, "reduce", str(tmp_path / "missing.web"))[0] == 1


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "qcomb")
    assert code == 0
    assert out.splitlines()[-1] == "4/4 checks passed"


def test_verify_failure_sets_status(capsys):
    code, out, _ = run(capsys, "--format", "machine", "verify", "--suite", "tails", "--max-twists", "1")
    data = json.loads(out)
    assert code == 1 and data["failed"] == 2
    code, _, _ = run(capsys, "verify", "--suite", "tails", "--max-twists", "1", "--tail-variant", "verified")
    assert code == 0


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["jones", "--m", "1"],
    ["jones", "--orientation", "parallel", "--m", "0", "--s", "1", "--t", "1"],
    ["tail", "--orientation", "parallel", "--m", "1", "--order", "3", "--unknown"],
    ["verify", "--suite", "nope"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage:" in err


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "sl3skein.cli", "twist", "--kind", "antiparallel", "--s", "2", "--t", "2", "--m", "2"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
