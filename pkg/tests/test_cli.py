import json

import pytest

from flatperm.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_distribution_both_json(capsys):
    status, out, _ = run(capsys, "distribution", "--pattern", "12-3",
                         "--n", "3", "--method", "both", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["coefficients"] == {"0": "2", "1": "4"}
    assert payload["match"] is True


def test_distribution_n2_all_patterns(capsys):
    for pattern in ("12-3", "21-3", "23-1", "32-1", "31-2"):
        status, out, _ = run(capsys, "distribution", "--pattern", pattern,
                             "--n", "2", "--format", "json")
        assert status == 0
        assert json.loads(out)["coefficients"] == {"0": "2"}


def test_distribution_usage_errors(capsys):
    status, _, err = run(capsys, "distribution", "--pattern", "31-2", "--n", "0")
    assert status == 2 and "positive" in err
    with pytest.raises(SystemExit) as exc:
        run(capsys, "distribution", "--pattern", "14-2", "--n", "3")
    assert exc.value.code == 2


def test_distribution_brute_cap(capsys):
    status, _, err = run(capsys, "distribution", "--pattern", "31-2",
                         "--n", "12", "--method", "brute")
    assert status == 2 and "cap" in err and "10" in err


def test_recurrence_cap(capsys):
    status, _, err = run(capsys, "distribution", "--pattern", "31-2",
                         "--n", "201")
    assert status == 2 and "200" in err
    status, _, err = run(capsys, "table", "--n-max", "201")
    assert status == 2 and "200" in err


def test_verify_oracle_example(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "oracle", "--n-max", "7")
    assert status == 0
    lines = [line for line in out.splitlines() if line.startswith("PASS")]
    assert len(lines) == 5  # one line per pattern
    assert "FAIL" not in out


def test_distribution_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("FLATPERM_MAX_N", "4")
    status, _, err = run(capsys, "distribution", "--pattern", "31-2",
                         "--n", "5", "--method", "brute")
    assert status == 2 and "cap is 4" in err
    monkeypatch.setenv("FLATPERM_MAX_N", "5")
    status, out, _ = run(capsys, "distribution", "--pattern", "31-2",
                         "--n", "5", "--method", "brute", "--format", "csv")
    assert status == 0
    assert out.splitlines()[0] == "pattern,n,source,exponent,coefficient"


def test_table_csv(capsys):
    status, out, _ = run(capsys, "table", "--n-max", "4", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "pattern,n,avoiders,average_num,average_den"
    rows = {tuple(line.split(",")[:2]): line.split(",")[2:] for line in lines[1:]}
    assert rows[("31-2", "4")] == ["20", "1", "6"]
    assert rows[("23-1", "4")] == rows[("32-1", "4")]
    for pattern in ("13-2", "31-2", "21-3", "32-1", "23-1", "12-3"):
        assert rows[(pattern, "1")] == ["1", "0", "1"]


def test_series_outputs(capsys):
    status, out, _ = run(capsys, "series", "--which", "g31_2_r0", "--order", "6")
    assert status == 0
    values = [line.split(": ")[1] for line in out.splitlines()[1:]]
    assert values == ["0", "0", "0", "6", "20", "70"]
    status, out, _ = run(capsys, "series", "--which", "egf_21_3",
                         "--order", "3", "--format", "json")
    assert json.loads(out)["coefficients"] == ["2/1", "6/1", "10/1"]
    status, _, err = run(capsys, "series", "--which", "egf_12_3", "--order", "0")
    assert status == 2 and "positive" in err
    status, _, err = run(capsys, "series", "--which", "egf_12_3", "--order", "65")
    assert status == 2 and "cap" in err


def test_verify_suite_pass(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "bijections",
                         "--n-max", "5")
    assert status == 0
    assert "PASS" in out and "FAIL" not in out
    status, out, _ = run(capsys, "verify", "--suite", "refined",
                         "--n-max", "5", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(check["passed"] for check in payload["checks"])


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "--suite", "everything")
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, "table", "--n-max", "5", "--format", "json")
    _, second, _ = run(capsys, "table", "--n-max", "5", "--format", "json")
    assert first == second


def test_json_round_trip_idempotent(capsys):
    _, out, _ = run(capsys, "distribution", "--pattern", "23-1", "--n", "4",
                    "--method", "both", "--format", "json")
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    status, out, _ = run(capsys, "table", "--n-max", "3", "--format", "json",
                         "--out", str(target))
    assert status == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["n_max"] == 3
