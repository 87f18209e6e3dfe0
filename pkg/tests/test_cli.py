import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from dolgachev.cli import EXIT_OK, EXIT_USAGE, main

W0 = "2687/400,-247/80,-583/400,-829/400,-709/400,-909/400,-829/400,-789/400,-949/400,-789/400"
W1 = "2723/400,-251/80,-587/400,-841/400,-721/400,-921/400,-841/400,-801/400,-961/400,-801/400"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "--p", "3", "--q", "2", "--n-max", "3")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert set(doc) == {"meta", "rows", "ledger"}
    assert doc["meta"]["n_max"] == 3 and doc["meta"]["seed"] is None
    assert [r["a"] for r in doc["rows"]] == [3, 6, 9]
    assert [r["b"] for r in doc["rows"]] == [45, 90, 135]
    assert all(r["a_match"] and r["b_match"] for r in doc["rows"])
    assert len(doc["ledger"]) >= 3


def test_invariants_rational_surface_has_c(capsys):
    _, out, _ = run(capsys, "invariants", "--p", "1", "--q", "1", "--n-max", "2")
    rows = json.loads(out)["rows"]
    assert [r["b"] for r in rows] == [-3, -6]
    assert [r["c"] for r in rows] == [21, 42]


def test_non_coprime_skipped(capsys):
    code, out, err = run(capsys, "invariants", "--p", "4", "--q", "6")
    assert code == EXIT_OK
    assert "not coprime" in err
    doc = json.loads(out)
    assert doc["rows"] == [] and doc["meta"]["skipped"] == [{"p": 4, "q": 6, "reason": "not coprime"}]


def test_csv_json_round_trip(capsys):
    _, js, _ = run(capsys, "invariants", "--sweep", "5", "4", "--n-max", "6")
    _, cs, _ = run(capsys, "invariants", "--sweep", "5", "4", "--n-max", "6", "--format", "csv")
    rows_json = json.loads(js)["rows"]
    rows_csv = list(csv.DictReader(io.StringIO(cs)))
    assert len(rows_json) == len(rows_csv) > 0
    for rj, rc in zip(rows_json, rows_csv):
        for key, value in rj.items():
            if value is None:
                assert rc[key] == ""
            elif isinstance(value, bool):
                assert rc[key] == str(value).lower()
            else:
                assert rc[key] == str(value)


def test_parallel_sweep_is_ordered(capsys):
    _, one, _ = run(capsys, "invariants", "--sweep", "7", "6", "--n-max", "5", "--jobs", "1")
    _, two, _ = run(capsys, "invariants", "--sweep", "7", "6", "--n-max", "5", "--jobs", "3")
    assert one == two


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# example\np = 1\nq = 1\nn-max = 4\nformat = csv\n")
    _, out, _ = run(capsys, "invariants", "--config", str(cfg))
    assert len(list(csv.DictReader(io.StringIO(out)))) == 4
    _, out, _ = run(capsys, "invariants", "--config", str(cfg), "--n-max", "2", "--format", "json")
    assert len(json.loads(out)["rows"]) == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    code, _, err = run(capsys, "invariants", "--config", str(bad))
    assert code == EXIT_USAGE and "colour" in err
    code, _, err = run(capsys, "invariants", "--config", str(tmp_path / "missing.cfg"))
    assert code == EXIT_USAGE and "missing.cfg" in err


def test_out_path(tmp_path, capsys):
    dest = tmp_path / "inv.json"
    code, out, _ = run(capsys, "invariants", "--n-max", "2", "--out", str(dest))
    assert code == EXIT_OK and out == ""
    assert len(json.loads(dest.read_text())["rows"]) == 2
    code, _, err = run(capsys, "invariants", "--out", str(tmp_path / "no" / "such" / "f.json"))
    assert code == EXIT_USAGE and "f.json" in err


def test_walls_fixture(capsys):
    code, out, _ = run(capsys, "walls", "--n", "1", "--w0", W0, "--w1", W1)
    assert code == EXIT_OK
    rows = [l for l in out.splitlines() if l.startswith("zeta=")]
    assert len(rows) == 1 and rows[0].endswith("effective=false")
    code, out, _ = run(capsys, "walls", "--n", "1", "--w0", W0, "--w1", W1, "--format", "json")
    doc = json.loads(out)
    assert doc["rows"][0]["M"] == ["0", "1", "-1"] + ["0"] * 7
    assert doc["rows"][0]["effective"] is False


def test_walls_empty_and_errors(capsys):
    code, out, _ = run(capsys, "walls", "--n", "1", "--w0", W0, "--w1", W0, "--format", "json")
    assert code == EXIT_OK and json.loads(out)["rows"] == []
    minus = ",".join(str(-Fraction(x)) for x in W1.split(","))
    code, _, err = run(capsys, "walls", "--n", "1", "--w0", W0, f"--w1={minus}")
    assert code == EXIT_USAGE and "component" in err
    code, _, _ = run(capsys, "walls", "--n", "1", "--w0", W0)
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "walls", "--n", "1", "--w0", "1,2", "--w1", W1)
    assert code == EXIT_USAGE


def test_hilb2_command(capsys):
    code, out, _ = run(capsys, "hilb2", "T.T.T.T")
    assert code == EXIT_OK and out.strip() == "-96"
    code, out, _ = run(capsys, "hilb2", "A.B.T.T", "--let", "A=1,0,0,0,0,0,0,0,0,0",
                       "--let", "B=3,0,0,0,0,0,0,0,0,0")
    assert out.strip() == "-24"
    code, out, _ = run(capsys, "hilb2", "A.A.A.T", "--let", "A=1/2,0,0,0,0,0,0,0,0,0")
    assert out.strip() == "0"
    code, _, err = run(capsys, "hilb2", "T.T.T")
    assert code == EXIT_USAGE and "position 5" in err


def test_argparse_usage_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["invariants", "--format", "xml"])
    assert info.value.code == EXIT_USAGE


def test_verify_byte_identical_for_same_seed(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        dest = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "dolgachev", "verify", "--seed", "7", "--format", "json",
             "--out", str(dest)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]
    doc = json.loads(outs[0])
    assert doc["meta"] == {"depth": "fast", "seed": 7}
    assert all(c["passed"] for c in doc["checks"])
