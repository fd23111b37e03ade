import json
import math

import pytest

import hankelmb.acceptance as acceptance
from hankelmb.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_transform_closed(capsys):
    code, out, _ = run(capsys, ["transform", "--example", "a1", "--a", "1",
                                "--q", "2", "--method", "closed"])
    assert code == 0
    assert "0.18393972058" in out
    assert "+/-" in out  # no bare values


def test_transform_oracle_matches_series(capsys):
    code, out, _ = run(capsys, ["transform", "--example", "a6", "--a", "1", "--c", "1",
                                "--q", "2", "--method", "oracle", "--json"])
    assert code == 0
    oracle = json.loads(out)
    code, out, _ = run(capsys, ["transform", "--example", "a6", "--a", "1", "--c", "1",
                                "--q", "2", "--method", "series", "--json"])
    assert code == 0
    series = json.loads(out)
    assert abs(oracle["value"] - series["value"]) <= 1e-6 * abs(series["value"])


def test_transform_precondition_violation_exits_one(capsys):
    code, _, err = run(capsys, ["transform", "--example", "a5", "--a", "2", "--c", "1",
                                "--q", "1", "--method", "closed"])
    assert code == 1
    assert "q > a" in err


def test_unknown_example_exits_one(capsys):
    code, _, err = run(capsys, ["transform", "--example", "zz", "--q", "1"])
    assert code == 1
    assert "unknown example" in err


def test_bad_flag_exits_one(capsys):
    code, _, _ = run(capsys, ["transform", "--example", "a1", "--q", "not-a-number"])
    assert code == 1


def test_compare_json_deterministic_apart_from_timings(capsys):
    argv = ["compare", "--example", "a1", "--a", "1", "--q-grid", "0.5,1,2", "--json"]
    payloads = []
    for _ in range(2):
        code, out, _ = run(capsys, argv)
        assert code == 0
        data = json.loads(out)
        data.pop("timings_ms")
        payloads.append(json.dumps(data, sort_keys=True))
    assert payloads[0] == payloads[1]


def test_sweep_defaults_to_csv(capsys):
    code, out, _ = run(capsys, ["sweep", "--example", "a3", "--a", "1", "--n", "0",
                                "--q-grid", "1,2"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "q,method,value,error,agree"
    assert len(lines) == 1 + 2 * 3
    # byte-identical on repetition
    code, out2, _ = run(capsys, ["sweep", "--example", "a3", "--a", "1", "--n", "0",
                                 "--q-grid", "1,2"])
    assert out2 == out


def test_empty_q_grid_is_empty_report(capsys):
    code, out, _ = run(capsys, ["sweep", "--example", "a1", "--a", "1", "--q-grid", ""])
    assert code == 0
    assert out.strip() == "q,method,value,error,agree"


def test_compare_flags_all_agreeing(capsys):
    code, out, _ = run(capsys, ["compare", "--example", "a1", "--a", "1",
                                "--q-grid", "0.5,1,2,5,10", "--csv"])
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert all(row.endswith(",true") for row in rows)


def test_compare_small_q_regime_completes(capsys):
    # below the representation's q0 the methods may disagree; the sweep must
    # still complete with per-row flags rather than abort
    code, out, _ = run(capsys, ["compare", "--example", "a6", "--a", "1", "--c", "1",
                                "--q-grid", "0.1", "--csv"])
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 3
    assert all(row.split(",")[-1] in ("true", "false", "") for row in rows)


def test_asymptotic_from_table_file(tmp_path, capsys):
    table = tmp_path / "derivs.txt"
    table.write_text("".join(f"{(-1.0) ** k}\n" for k in range(14)))
    code, out, _ = run(capsys, ["asymptotic", str(table), "--method", "j0",
                                "--q", "5", "--terms", "7", "--json"])
    assert code == 0
    data = json.loads(out)
    assert abs(data["value"] - 1.0 / math.sqrt(26.0)) <= data["first_omitted"]


def test_asymptotic_missing_file_exits_one(capsys):
    code, _, err = run(capsys, ["asymptotic", "/nonexistent/table.txt", "--q", "5"])
    assert code == 1
    assert "cannot read" in err


def test_check_growth_text_output(capsys):
    code, out, _ = run(capsys, ["check-growth", "--example", "a3", "--a", "1", "--n", "0"])
    assert code == 0
    assert "admissible=False" in out
    code, out, _ = run(capsys, ["check-growth", "--example", "a1", "--a", "1"])
    assert code == 0
    assert "admissible=True" in out
    code, out, _ = run(capsys, ["check-growth", "--example", "a7", "--a", "1", "--json"])
    assert code == 0
    assert json.loads(out)["a_est"] == pytest.approx(math.pi / 2, abs=0.05)


def test_selftest_green(capsys):
    code, out, _ = run(capsys, ["selftest"])
    assert code == 0
    assert "PASS overall" in out


def test_selftest_corrupted_tolerance_exits_nonzero(capsys, monkeypatch):
    # negative control: an unreachable tolerance must fail the suite
    monkeypatch.setitem(acceptance.TOLERANCES, "a1_reproduction", 1e-18)
    code, out, _ = run(capsys, ["selftest"])
    assert code == 2
    assert "FAIL a1_reproduction" in out
