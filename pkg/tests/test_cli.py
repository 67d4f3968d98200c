from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from rrq.cli import main
from rrq.qseries import rr_value, u_of_q, y_of_q


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def field(text, name):
    for line in text.splitlines():
        if line.startswith(name + " = "):
            return line.split(" = ", 1)[1]
    raise KeyError(name)


def test_eval_f_at_zero():
    code, out = run("eval", "--fn", "f", "--q", "0")
    assert code == 0 and float(field(out, "f")) == 1.0


def test_eval_u_matches_library_bit_for_bit():
    code, out = run("eval", "--fn", "u", "--q", "0.5")
    assert code == 0 and float(field(out, "u")) == u_of_q(0.5).value


def test_eval_y_at_printed_zero():
    code, out = run("eval", "--fn", "y", "--q", "0.6816394360211508")
    assert code == 0
    # y is about 5.6e-9 there, not zero: y has no zero on (0, 1).
    assert 0 < float(field(out, "y")) < 1e-8


def test_eval_complex_nome():
    code, out = run("eval", "--fn", "R", "--q", "-0.3,0.2")
    re, im = (float(v) for v in field(out, "R").split(","))
    assert code == 0 and complex(re, im) == rr_value(complex(-0.3, 0.2)).value


def test_eval_eta():
    code, out = run("eval", "--fn", "eta", "--tau", "1")
    assert code == 0 and float(field(out, "eta")) == pytest.approx(0.7682254223260566, abs=1e-15)


@pytest.mark.parametrize("argv", [("eval", "--fn", "u", "--q", "1.5"), ("eval", "--fn", "u"),
                                  ("eval", "--fn", "w", "--q", "0.5"), ("eval",),
                                  ("eval", "--fn", "u", "--q", "abc"), ()])
def test_eval_bad_input(argv):
    assert run(*argv)[0] == 1


def test_root_y_zero_reports_no_sign_change():
    code, _ = run("root", "--target", "y=0")
    assert code == 3


def test_root_u_half():
    code, out = run("root", "--target", "u=0.5")
    assert code == 0
    assert float(field(out, "residual")) < 1e-12
    assert float(field(out, "root")) == pytest.approx(0.2407687486883669, abs=1e-13)


def test_root_complex():
    code, out = run("root", "--target", "u-complex=-11,2", "--seed", "-0.23,-0.17", "--tol", "1e-9")
    re, im = (float(v) for v in field(out, "root").split(","))
    assert code == 0
    assert abs(complex(re, im) - complex(-0.2302539558379255, -0.1672892791313823)) < 2e-8


def test_root_complex_needs_seed():
    assert run("root", "--target", "u-complex=-11,2")[0] == 1


def test_verify_unknown_case():
    assert run("verify", "--case", "NOPE")[0] == 1


def test_verify_single_case_json(tmp_path):
    path = tmp_path / "r.json"
    code, out = run("verify", "--case", "THM2-1", "--format", "json", "--out", str(path))
    assert code == 0 and "THM2-1" in out
    doc = json.loads(path.read_text())
    assert [c["id"] for c in doc["cases"]] == ["THM2-1"]


def test_verify_failure_exit_code():
    assert run("verify", "--case", "APP1", "--tol", "1e-12")[0] == 4


def test_verify_csv_to_stdout():
    code, out = run("verify", "--case", "EX1", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("id,status")


def test_verify_unwritable_output(tmp_path):
    code, _ = run("verify", "--case", "EX1", "--out", str(tmp_path / "no" / "such" / "file"))
    assert code == 1


def test_integrate():
    code, out = run("integrate", "--k", "0.5", "--a", "0.2", "--b", "0.6")
    assert code == 0 and float(field(out, "difference")) < 1e-9
    assert run("integrate", "--k", "0.5", "--a", "0.6", "--b", "0.2")[0] == 1


def test_plotdata_grid():
    code, out = run("plotdata", "--a", "0.05", "--b", "0.95", "--n", "64")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "q,R,u,y" and len(rows) == 65
    u = [float(r.split(",")[2]) for r in rows[1:]]
    assert all(a > b for a, b in zip(u, u[1:]))


def test_plotdata_row_matches_eval():
    _, out = run("plotdata", "--a", "0.05", "--b", "0.95", "--n", "3")
    q, r, u, y = (float(v) for v in out.strip().splitlines()[2].split(","))
    assert q == 0.5
    assert (r, u, y) == (rr_value(0.5).value, u_of_q(0.5).value, y_of_q(0.5).value)


@pytest.mark.parametrize("n", ["0", "-3"])
def test_plotdata_empty_grid(n):
    assert run("plotdata", "--n", n)[0] == 1


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "rrq", "eval", "--fn", "f", "--q", "0.5"],
                       capture_output=True, text=True, env={"RRQ_LOG": "debug", "PATH": ""})
    assert p.returncode == 0 and "0.2887880950866024" in p.stdout
