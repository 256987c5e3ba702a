import csv
import json

import pytest

from symmetria import reference_tables
from symmetria.cli import main
from symmetria.series import TruncatedSeries


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_grand_ds(capsys):
    code, out, _ = run(capsys, "table", "grand_ds", "--n-max", "6", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["rows"][-1]["row"] == [148, 208, 216, 128, 160, 0, 64]
    assert data["mismatched_rows"] == []


@pytest.mark.parametrize("name, n, last", [
    ("dyck_ds", 7, [52, 84, 108, 60, 90, 0, 35]),
    ("partitions_psp", 8, [24, 16, 16, 0, 8]),
])
def test_tables_match_printed_rows(capsys, name, n, last):
    code, out, _ = run(capsys, "--json", "table", name, "--n-max", str(n))
    assert code == 0
    assert json.loads(out)["rows"][-1]["row"] == last


def test_table_mismatch_exit_code(capsys, monkeypatch):
    bad = dict(reference_tables.GRAND_DS)
    bad[3] = [4, 8, 0, 9]
    monkeypatch.setitem(reference_tables.TABLES, "grand_ds", (bad, 0, ("grand_dyck", "ds")))
    code, out, _ = run(capsys, "table", "grand_ds", "--n-max", "4")
    assert code == 1
    assert "MISMATCH" in out


def test_table_cap(capsys):
    code, _, err = run(capsys, "table", "grand_ds", "--n-max", "12", "--cap", "1000")
    assert code == 3
    assert "cap" in err


def test_series_pretty_and_json(capsys):
    code, out, _ = run(capsys, "series", "DS_GRAND", "--order", "3", "--pretty")
    assert code == 0
    assert out.strip() == "1 + 2sz + (2+4s²)z² + (4+8s+8s³)z³"
    code, out, _ = run(capsys, "series", "CATALAN", "--order", "4", "--json")
    s = TruncatedSeries.from_json(out)
    assert s.univariate() == [1, 1, 2, 5, 14]
    assert s.to_json() == out.strip()


def test_usage_errors(capsys):
    assert run(capsys, "series", "NOPE")[0] == 2
    assert run(capsys, "series", "CATALAN", "-o", "3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "distribution", "dyck", "pho", "3")[0] == 2
    assert run(capsys, "verify", "everything")[0] == 2


def test_config_with_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"order": 2, "json": True, "series": {"order": 3}}))
    code, out, _ = run(capsys, "series", "CATALAN", "--config", str(cfg))
    assert json.loads(out)["order"] == 3
    code, out, _ = run(capsys, "series", "CATALAN", "--config", str(cfg), "--order", "5")
    assert json.loads(out)["order"] == 5
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert run(capsys, "series", "CATALAN", "--config", str(cfg))[0] == 2


def test_verify_feq_report(capsys):
    code, out, _ = run(capsys, "verify", "feq", "--order", "8", "--json")
    assert code == 0
    report = json.loads(out)
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)
    assert report["mismatch"] == 0 and report["ok"] == len(names)


def test_verify_time_budget(capsys):
    code, out, _ = run(capsys, "verify", "all", "--time-budget", "0", "--json", "--max-n", "3",
                       "--order", "6")
    report = json.loads(out)
    assert code == 3
    assert report["skipped_suites"]


def test_distribution_with_law_and_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "distribution", "GrandDyck", "ds", "4")
    assert code == 0
    assert "14,16,24,0,16" in out
    path = tmp_path / "h.csv"
    code, out, _ = run(capsys, "distribution", "GrandDyck", "ds", "100", "--law",
                       "rayleigh:0.7071", "--csv", str(path), "--json")
    data = json.loads(out)
    assert 0 < data["law"]["kolmogorov"] < 1
    rows = list(csv.DictReader(path.open()))
    assert sum(int(r["count"]) for r in rows) == int(rows[0]["total"]) == data["total"]
