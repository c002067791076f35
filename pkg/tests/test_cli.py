import io
import json
import os
import subprocess
import sys

import pytest

from invconn.catalog import load_example
from invconn.cli import main
from invconn.document import InputDocument


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def exported(tmp_path):
    def _export(name):
        path = tmp_path / f"{name}.json"
        code, _, _ = run("catalog", "export", name, str(path))
        assert code == 0
        return path
    return _export


def test_catalog_list():
    code, out, _ = run("catalog", "list")
    assert code == 0
    assert out.splitlines() == ["solv-r4", "r6", "nil-rriF1", "nil-rriF2", "su3-t2"]


def test_catalog_show():
    code, out, _ = run("catalog", "show", "nil-rriF1")
    assert code == 0
    assert "natural connection flat: true" in out
    assert "\x1b[" not in out


def test_catalog_unknown():
    code, _, err = run("catalog", "show", "bogus")
    assert code == 1 and "bogus" in err


def test_export_then_validate(exported):
    path = exported("su3-t2")
    assert path.read_text() == InputDocument.from_entry(load_example("su3-t2")).dumps()
    code, out, _ = run("validate", str(path))
    assert code == 0
    assert "nondegenerate_ok: true" in out


def test_export_round_trip_bytes(exported, tmp_path):
    path = exported("solv-r4")
    again = tmp_path / "again.json"
    InputDocument.load(path).save(again)
    assert again.read_bytes() == path.read_bytes()


def test_degenerate_omega_exit_2(exported):
    path = exported("nil-rriF1")
    data = json.loads(path.read_text())
    data["omega"] = [["0", "0", "0", "1"], ["0", "0", "0", "0"], ["0", "0", "0", "0"], ["-1", "0", "0", "0"]]
    path.write_text(json.dumps(data))
    code, out, _ = run("validate", str(path))
    assert code == 2
    assert "nondegenerate_ok: false" in out


def test_jacobi_failure_exit_2(tmp_path):
    doc = {
        "format": 1, "name": "bad", "dim": 3, "basis": ["e1", "e2", "e3"], "h_indices": [], "m_indices": [0, 1, 2],
        "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}, {"i": 0, "j": 2, "coeffs": {"0": "1"}}],
        "omega": [["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run("validate", str(path), "--format", "json")
    assert code == 2
    assert json.loads(out)["structure"]["jacobi_ok"] is False
    code, _, _ = run("report", str(path))
    assert code == 2


def test_bad_rational_exit_1(exported):
    path = exported("nil-rriF1")
    data = json.loads(path.read_text())
    data["omega"][0][3] = "1/0"
    path.write_text(json.dumps(data))
    code, _, err = run("validate", str(path))
    assert code == 1
    assert "omega[0][3]" in err


def test_missing_file_exit_1(tmp_path):
    code, _, _ = run("validate", str(tmp_path / "nope.json"))
    assert code == 1


def test_report_su3_json(exported):
    path = exported("su3-t2")
    code, out, _ = run("report", str(path), "--a", "1/3", "--b", "1/3", "--format", "json")
    assert code == 0
    report = json.loads(out)
    diag = ["-8", "-8", "-4", "-4", "-4", "-4"]
    assert report["ricci"] == [[diag[i] if i == j else "0" for j in range(6)] for i in range(6)]
    assert report["ricci_parallel"] is True and report["preferred"] is True
    assert report["classification"]["symplectic"] is True
    assert report["flat"] is False


def test_report_is_deterministic(exported):
    path = exported("nil-rriF2")
    first = run("report", str(path), "--format", "json")[1]
    assert first == run("report", str(path), "--format", "json")[1]


def test_report_rrif2_witness(exported):
    path = exported("nil-rriF2")
    code, out, _ = run("report", str(path), "--a", "1/3", "--b", "1/3", "--format", "json")
    report = json.loads(out)
    assert report["flat"] is False
    w = report["flat_witness"]
    assert (w["x"], w["y"], w["z"]) == ("e3", "e4", "e4")
    assert w["value"] == ["-4/9", "0", "0", "0"]
    code, text, _ = run("report", str(path), "--a", "1/3", "--b", "1/3")
    assert "K(e3,e4)e4 = -4/9*e1" in text


def test_report_r6(exported):
    path = exported("r6")
    report = json.loads(run("report", str(path), "--a", "1/3", "--b", "1/3", "--format", "json")[1])
    assert all(v == "0" for row in report["ricci"] for v in row)
    assert report["killing_zero"] is True


def test_report_grid(exported):
    path = exported("su3-t2")
    code, out, _ = run("report", str(path), "--grid", "--format", "json")
    assert code == 0
    grid = json.loads(out)["grid"]
    assert len(grid) == 25
    assert [(r["a"], r["b"]) for r in grid if r["symplectic"]] == [("1/3", "1/3")]
    code, text, _ = run("report", str(path), "--grid")
    assert code == 0 and "torsion-free" in text


def test_report_compact(exported):
    path = exported("su3-t2")
    code, out, _ = run("report", str(path), "--compact", "--format", "json")
    assert code == 0
    c = json.loads(out)["compact"]
    assert all(c["w_properties"].values())
    assert c["ricci_natural_matches_generic"] and c["ricci_zero_one_matches_generic"]
    assert c["w_parallel"] is False and c["scope"] == "m-block conditions only"
    code, text, _ = run("report", str(path), "--compact")
    assert code == 0 and "w_parallel: false" in text


def test_compact_without_metric_exit_2(exported):
    code, _, err = run("report", str(exported("r6")), "--compact")
    assert code == 2 and "metric" in err


def test_flag_conflicts(exported):
    path = str(exported("r6"))
    assert run("report", path, "--grid", "--a", "0", "--b", "1")[0] == 1
    assert run("report", path, "--a", "0")[0] == 1
    assert run("report", path, "--a", "0.5", "--b", "1")[0] == 1


def test_color_toggle(exported, monkeypatch):
    class Tty(io.StringIO):
        def isatty(self):
            return True

    path = str(exported("nil-rriF1"))
    out = Tty()
    monkeypatch.delenv("INVCONN_COLOR", raising=False)
    main(["validate", path], out, io.StringIO())
    assert "\x1b[" in out.getvalue()
    out = Tty()
    monkeypatch.setenv("INVCONN_COLOR", "0")
    main(["validate", path], out, io.StringIO())
    assert "\x1b[" not in out.getvalue()


def test_module_entry_point(tmp_path):
    env = dict(os.environ, INVCONN_COLOR="0")
    done = subprocess.run([sys.executable, "-m", "invconn", "catalog", "list"], capture_output=True, text=True, env=env)
    assert done.returncode == 0 and "su3-t2" in done.stdout


def test_vector_text():
    from fractions import Fraction
    from invconn.cli import _vec_text

    names = ["a", "b", "c"]
    assert _vec_text((0, 0, 0), names) == "0"
    assert _vec_text((-1, 2, Fraction(-1, 3)), names) == "-a + 2*b - 1/3*c"
    assert _vec_text((0, 1, 0), names) == "b"
