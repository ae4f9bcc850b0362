import csv
import io
import json

import pytest

from ainf_elliptic import cli


def cval(s):
    return complex(s.replace("i", "j"))


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_json_schema(capsys):
    code, out = run(capsys, "hh", "--coeff", "B", "--diag", "2", "--nmax", "8", "--format", "json")
    rep = json.loads(out)
    assert set(rep) == {"command", "config", "rows", "pass", "wall_ms"}
    assert code == 0 and rep["pass"] is True
    assert [r["dim"] for r in rep["rows"]] == [0, 0, 1, 0, 1, 1, 0, 1]
    assert rep["config"]["tau"] == "0+1i"


def test_csv(capsys):
    code, out = run(capsys, "chain", "--label", "eta", "--shift", "0", "--nmax", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [int(r["dim"]) for r in rows] == [1, 1, 0, 0]


def test_text(capsys):
    code, out = run(capsys, "simplicial", "--n", "9", "--format", "text")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS")
    assert "homotopy=S^2" in out


def test_simplicial_representatives(capsys):
    code, out = run(capsys, "simplicial", "--representatives", "--nmax", "9", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert sum(1 for r in rows if "representative" in r) == 6


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sample\ntau = 0+2i\noutput = json\nnmax = 3\n", encoding="utf-8")
    code, out = run(capsys, "eisenstein", "j", "--config", str(cfg))
    rep = json.loads(out)
    assert rep["config"]["tau"] == "0+2i"
    assert abs(cval(rep["rows"][0]["j_lattice"]) - 287496) < 1e-6
    code, out = run(capsys, "eisenstein", "j", "--config", str(cfg), "--tau", "0+1i")
    assert json.loads(out)["config"]["tau"] == "0+1i"


def test_bad_config_line(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("tau 0+2i\n", encoding="utf-8")
    with pytest.raises(SystemExit) as e:
        cli.main(["eisenstein", "--config", str(cfg)])
    assert e.value.code == 2


@pytest.mark.parametrize("argv", [
    ["eisenstein", "--tau", "0-1i"],
    ["eisenstein", "--tau", "banana"],
    ["hh", "--coeff", "Z"],
    ["chain", "--label", "Q"],
    ["reproduce", "--criteria", "x"],
    ["reproduce", "--criteria", "99"],
    ["hh", "--nmax", "0"],
])
def test_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        cli.main(argv)
    assert e.value.code == 2


def test_exit_code_tracks_checks(capsys):
    code, _ = run(capsys, "ainfty", "check-f3", "--tau", "0.3+1.2i")
    assert code == 0
    code, out = run(capsys, "ainfty", "m6", "--tau", "0+2i", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and rep["pass"] is False
    failing = [r for r in rep["rows"] if not r["pass"] and not r.get("diagnostic")]
    assert [r["prediction"] for r in failing] == ["-5 t^4 e4"]


def test_ainfty_j(capsys):
    code, out = run(capsys, "ainfty", "j", "--tau", "0.5+1.3i", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert code == 0
    jr, jd = cval(row["recovered_j"]), cval(row["direct_j"])
    assert abs(jr - jd) < 1e-6 * abs(jd)


def test_complex_written_as_a_plus_bi(capsys):
    _, out = run(capsys, "eisenstein", "series", "--tau", "0.3+1.2i", "--format", "json")
    vals = [r["value"] for r in json.loads(out)["rows"] if r.get("series") == "e4" and "value" in r]
    assert isinstance(vals[0], str) and vals[0].endswith("i")
    assert abs(cval(vals[0])) > 0


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv(cli.THREADS_ENV, "2")
    code, out = run(capsys, "hh", "--coeff", "eta", "--nmax", "6", "--format", "json")
    assert code == 0
    monkeypatch.setenv(cli.THREADS_ENV, "many")
    with pytest.raises(SystemExit):
        cli.main(["hh", "--coeff", "eta"])


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code = cli.main(["ainfty", "stasheff", "--kmax", "5", "--format", "json", "-o", str(path)])
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(path.read_text())["pass"] is True


def test_reproduce_subset(capsys):
    code, out = run(capsys, "reproduce", "--criteria", "9", "--format", "text")
    assert code == 0
    assert "[PASS] criterion 9" in out


def test_seed_is_recorded(capsys):
    _, out = run(capsys, "hh", "--coeff", "ids", "--nmax", "4", "--seed", "17", "--format", "json")
    assert json.loads(out)["config"]["seed"] == 17
