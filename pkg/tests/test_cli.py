import subprocess
import sys
from pathlib import Path

import pytest

from kicat.cli import FAILED, OK, USAGE, cmd_check, main

EXAMPLES = Path(__file__).resolve().parent.parent / "programs" / "examples.kic"


def test_check_example_file(capsys):
    assert main(["check", str(EXAMPLES)]) == OK
    out = capsys.readouterr().out
    assert out.strip().endswith("13/13 checks hold")
    assert out.count("PASS line") == 13


def test_check_reports_witness(tmp_path, capsys):
    f = tmp_path / "bad.kic"
    f.write_text("check id* == id;\ncheck u != u;\n")
    assert main(["check", str(f)]) == FAILED
    out = capsys.readouterr().out
    assert "FAIL line 1: id* == id" in out
    assert "  exit(<>,0): inf vs 1" in out
    assert "FAIL line 2: u != u\n  the two sides are equal" in out
    assert "0/2 checks hold" in out


def test_check_with_signature_flag(tmp_path, capsys):
    f = tmp_path / "s.kic"
    f.write_text("check x;x* == x*;x;\n")
    assert main(["check", str(f), "--sig", "actions x"]) == OK
    assert main(["check", str(f)]) == USAGE


def test_check_parallel(capsys):
    assert main(["check", str(EXAMPLES), "--jobs", "2"]) == OK
    assert "13/13 checks hold" in capsys.readouterr().out


def test_usage_errors(tmp_path, capsys):
    f = tmp_path / "syntax.kic"
    f.write_text("check u + == v;\n")
    assert main(["check", str(f)]) == USAGE
    assert main(["check", str(tmp_path / "missing.kic")]) == USAGE
    assert main(["fuzz", "--laws", "bogus"]) == USAGE
    assert main(["fuzz", "--sig", "ops f:0"]) == USAGE
    assert main(["support", "a", "--maxlen", "2"]) == USAGE
    assert main(["dot", "w", "-o", "-"]) == USAGE
    err = capsys.readouterr().err
    assert "NotTame" in err and "kicat:" in err
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_fuzz_command(tmp_path, capsys):
    out = tmp_path / "report.txt"
    assert main(["fuzz", "--laws", "star-fix,star-idempotent", "--trials", "5",
                 "--seed", "3", "--out", str(out)]) == OK
    text = out.read_text()
    assert "law star-fix valid trials=5 kept=5 passes=5 result=pass" in text
    assert "law star-idempotent invalid" in text and "result=refuted" in text
    assert main(["fuzz", "--list"]) == OK
    assert "star-uni\tkic\tvalid" in capsys.readouterr().out


def test_support_command(capsys):
    assert main(["support", "u", "--maxlen", "1", "--sig", "actions u"]) == OK
    assert capsys.readouterr().out == "<> u <> -> exit#0\n"
    assert main(["support", "[t, ~t]", "--maxlen", "0"]) == OK
    assert capsys.readouterr().out == "root 0: <t> -> exit#0\nroot 1: <> -> exit#0\n"


def test_dot_command(tmp_path, capsys):
    out = tmp_path / "m.dot"
    assert main(["dot", "loop", "--file", str(EXAMPLES), "-o", str(out), "--min"]) == OK
    assert out.read_text().startswith("digraph morphism {")
    assert main(["dot", "u*", "-o", "-"]) == OK
    assert "root0" in capsys.readouterr().out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "kicat.cli", "check", str(EXAMPLES)],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "13/13" in r.stdout


def test_cmd_check_writes_to_given_stream(tmp_path):
    import io
    buf = io.StringIO()
    f = tmp_path / "one.kic"
    f.write_text("check u;0 == 0;\n")
    assert cmd_check(str(f), out=buf) == OK
    assert buf.getvalue() == "PASS line 1: u;0 == 0\n1/1 checks hold\n"
