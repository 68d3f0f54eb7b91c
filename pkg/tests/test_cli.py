import json
import subprocess
import sys

import pytest

from smallreps.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_square_text(capsys):
    code, out, _ = run(capsys, "square", "C", "3", "0,0,1", "-1")
    assert code == 0
    assert out.strip() == "L2 C3 b3 = V[2b2] + 1"


@pytest.mark.parametrize("eps", ["-1", "a"])
def test_square_structured(capsys, eps):
    code, out, _ = run(capsys, "--emit=structured", "square", "C", "3", "0,0,1", eps)
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "type": "C", "rank": 3, "lambda": [0, 0, 1], "epsilon": -1,
        "constituents": [{"lambda": [0, 2, 0], "parity": "V", "mult": 1}], "delta": 1,
    }


def test_emit_after_subcommand(capsys):
    code, out, _ = run(capsys, "square", "BC", "2", "0,1", "s", "--emit", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["epsilon"] == 1 and doc["delta"] == 1
    assert {"lambda": [1, 0], "parity": "W", "mult": 1} in doc["constituents"]


def test_output_is_byte_stable(capsys):
    a = run(capsys, "--emit=structured", "char", "BC", "2", "1,1")
    b = run(capsys, "--emit=structured", "char", "BC", "2", "1,1")
    assert a == b and a[0] == 0


def test_dim(capsys):
    assert run(capsys, "dim", "E", "8", "1,0,0,0,0,0,0,0")[1].strip() == "E8 b1: dim 3875"
    code, out, _ = run(capsys, "--emit=structured", "dim", "BC", "2", "0,1")
    assert json.loads(out)["dim"] == 2 and json.loads(out)["dim_total"] == 10


def test_identify(capsys):
    code, out, _ = run(capsys, "identify", "6", "star", "circle")
    assert code == 0 and out.strip() == "C3 b1"


def test_classify(capsys):
    code, out, _ = run(capsys, "--emit=structured", "classify", "G", "2")
    assert json.loads(out)["small"] == [{"lambda": [1, 0], "plus": "circle", "minus": "-"}]


@pytest.mark.parametrize(
    "argv",
    [
        ("square", "Q", "3", "1,0,0", "s"),
        ("square", "C", "3", "1,0", "s"),
        ("square", "C", "3", "1,0,0", "x"),
        ("square", "C", "3", "0,0,0", "s"),
        ("square", "C", "3", "a,b,c", "s"),
        ("dim", "D", "3", "1,0,0"),
        ("identify", "0", "star", "star"),
        ("identify", "4", "star", "round"),
        ("table", "5", "3"),
        ("table", "1", "0"),
        ("check", "medium"),
        ("frobnicate",),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_table1_matches(capsys):
    code, out, _ = run(capsys, "table", "1", "4")
    assert code == 0
    assert out.strip().endswith("match")


def test_table4_reports_printed_values_that_disagree(capsys):
    code, out, _ = run(capsys, "table", "4", "8")
    assert code == 1
    minus = [l for l in out.splitlines() if l.startswith("-") and not l.startswith("---")]
    plus = [l for l in out.splitlines() if l.startswith("+") and not l.startswith("+++")]
    assert [l.split(" | ")[0] for l in minus] == ["-A1", "-BC1"]
    assert "out=1" in plus[0] and "R2=1" in plus[1]


def test_table2_diff_is_unified(capsys):
    code, out, _ = run(capsys, "table", "2", "3")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "--- fixture/table2" and lines[1] == "+++ computed"
    assert any(l.startswith("@@") for l in lines)


def test_check_fast(capsys):
    code, out, _ = run(capsys, "check", "fast")
    assert code == 0
    assert all(l.startswith("PASS") for l in out.strip().splitlines())


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "smallreps.cli", "square", "A", "2", "1,0", "s"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "S2 A2 b1 = V[2b1]"


@pytest.mark.slow
def test_check_slow_includes_e8(capsys):
    code, out, _ = run(capsys, "--emit=structured", "check", "slow")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    fast = json.loads(run(capsys, "--emit=structured", "check", "fast")[1])
    # the slow tier adds the E8 cases to every suite that loops over types
    assert sum(s["cases"] for s in doc["suites"]) > sum(s["cases"] for s in fast["suites"])
