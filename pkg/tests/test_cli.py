"""Command-line interface: subcommands, exit codes, transcripts, REPL."""

import subprocess
import sys

import pytest

from cga.cli import main


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_prints_rendered_value(capsys):
    code, out, err = run_main(capsys, "eval", "e[2,1]")
    assert code == 0
    assert out == "-e[1,2]\n"
    assert err == ""


def test_eval_json(capsys):
    code, out, _ = run_main(capsys, "eval", "--json", "e[1,inf,2,0]")
    assert code == 0
    assert out == '{"e1.e2": "2", "e0.e1.e2.einf": "1"}\n'


def test_eval_parse_error_exit_code(capsys):
    code, out, err = run_main(capsys, "eval", "1 +")
    assert code == 2
    assert out == ""
    assert "Parse error" in err


def test_eval_eval_error_exit_code(capsys):
    code, out, err = run_main(capsys, "eval", "inv(e[inf])")
    assert code == 1
    assert "Error" in err


def test_eval_backend_flag(capsys):
    code, out, _ = run_main(capsys, "eval", "--backend", "float", "1/4 + e[1]")
    assert code == 0
    assert out == "0.25 + e[1]\n"


def test_backend_env_variable(monkeypatch, capsys):
    monkeypatch.setenv("CGA_BACKEND", "exact")
    code, out, err = run_main(capsys, "eval", "a*e[1]")
    assert code == 1
    assert "exact backend accepts no free symbols" in err


def test_run_script_transcript(tmp_path, capsys):
    script = tmp_path / "session.cga"
    script.write_text(
        "# a comment line\n"
        "\n"
        "X = x1*e[1] + x2*e[2] + x3*e[3];\n"
        "x = e[0] + X + 1/2*mag2(X)*e[inf];\n"
        "gp(x, x)\n"
    )
    code, out, _ = run_main(capsys, "run", str(script))
    assert code == 0
    assert out == (
        "In[1]= X = x1*e[1] + x2*e[2] + x3*e[3];\n"
        "In[2]= x = e[0] + X + 1/2*mag2(X)*e[inf];\n"
        "In[3]= gp(x, x)\n"
        "Out[3] = 0\n"
    )


def test_run_writes_transcript_file(tmp_path, capsys):
    script = tmp_path / "s.cga"
    script.write_text("e[2,1]\n")
    target = tmp_path / "t.txt"
    code, out, _ = run_main(capsys, "run", str(script), "--transcript", str(target))
    assert code == 0
    assert target.read_text() == out == "In[1]= e[2,1]\nOut[1] = -e[1,2]\n"


def test_run_continues_after_errors_and_reports_worst(tmp_path, capsys):
    script = tmp_path / "s.cga"
    script.write_text("inv(e[inf])\ne[2,1]\n")
    code, out, _ = run_main(capsys, "run", str(script))
    assert code == 1
    assert "Error:" in out
    assert "Out[2] = -e[1,2]" in out

    script.write_text("1 +\ne[2,1]\n")
    code, out, _ = run_main(capsys, "run", str(script))
    assert code == 2
    assert "Parse error" in out


def test_run_commands_inside_scripts(tmp_path, capsys):
    script = tmp_path / "s.cga"
    script.write_text(
        ":backend exact\n"
        "inversor(e[inf], point(0,0,0), 2)\n"
        ":json on\n"
        "e[2,1]\n"
    )
    code, out, _ = run_main(capsys, "run", str(script))
    assert code == 0
    assert out == (
        "backend: exact (environment cleared)\n"
        "In[1]= inversor(e[inf], point(0,0,0), 2)\n"
        "Out[1] = 1/2 e[0]\n"
        "In[2]= e[2,1]\n"
        'Out[2] = {"e1.e2": "-1"}\n'
    )


def test_missing_script_file(capsys):
    code, out, err = run_main(capsys, "run", "/nonexistent/path.cga")
    assert code == 1
    assert "Error" in err


def test_repl_subprocess_quits_cleanly():
    proc = subprocess.run(
        [sys.executable, "-m", "cga", "repl", "--backend", "symbolic"],
        input="e[2,1]\n:vars\n:quit\n",
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "Out[1] = -e[1,2]" in proc.stdout
    assert "I5 = " in proc.stdout


def test_repl_recovers_from_errors():
    proc = subprocess.run(
        [sys.executable, "-m", "cga", "repl"],
        input="1 +\ninv(e[inf])\ne[2,1]\n",
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0  # EOF after the last line exits with 0
    assert "Parse error" in proc.stdout
    assert "Error:" in proc.stdout
    assert "Out[3] = -e[1,2]" in proc.stdout


def test_repl_backend_switch_and_clear():
    proc = subprocess.run(
        [sys.executable, "-m", "cga", "repl"],
        input="v = 3;\n:backend float\n:clear I5\n:vars\n:quit\n",
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "backend: float (environment cleared)" in proc.stdout
    assert "I5i = " in proc.stdout
    assert "I5 = " not in proc.stdout


def test_console_script_entry_point_exists():
    import cga.cli

    assert callable(cga.cli.main)
