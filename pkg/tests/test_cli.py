import json

import pytest

from flipwait.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    return code, json.loads(out), err


def test_expect_all_agrees(capsys):
    code, payload, _ = run_json(capsys, "expect", "HH", "--method", "all", "--json")
    assert code == 0
    assert payload["schema"] == 1
    assert payload["results"] == {"markov": "6", "conway": "6", "closed": "6"}
    assert payload["agree"] is True


def test_expect_single_method(capsys):
    code, payload, _ = run_json(capsys, "expect", "HTHT", "--method", "conway", "--json")
    assert code == 0
    assert payload["results"] == {"conway": "20"}


def test_expect_no_closed_form(capsys):
    code, payload, _ = run_json(capsys, "expect", "HTHHTHH", "--method", "closed", "--json")
    assert code == 0
    assert payload["results"] == {"closed": None}
    code, out, _ = run_cli(capsys, "expect", "HTHHTHH", "--method", "closed")
    assert code == 0
    assert "no closed form" in out


def test_expect_die(capsys):
    code, payload, _ = run_json(capsys, "expect", "0,0", "--alphabet", "6", "--json")
    assert code == 0
    assert payload["results"]["markov"] == "42"
    assert payload["agree"] is True


def test_count(capsys):
    code, payload, _ = run_json(capsys, "count", "HH", "--upto", "8", "--json")
    assert code == 0
    assert payload["counts"] == ["0", "0", "1", "1", "2", "3", "5", "8", "13"]


def test_seq(capsys):
    code, payload, _ = run_json(capsys, "seq", "fib:2", "--upto", "7", "--json")
    assert code == 0
    assert payload["values"] == ["0", "1", "1", "2", "3", "5", "8", "13"]


def test_sum_id2(capsys):
    code, payload, _ = run_json(capsys, "sum", "id2", "--k", "2", "--m", "1", "--N", "400", "--json")
    assert code == 0
    assert payload["target"] == "18"
    assert payload["certified"] is True


def test_sum_requires_params(capsys):
    code, _, err = run_cli(capsys, "sum", "id2", "--k", "2")
    assert code == 1
    assert "requires" in err


def test_sum_alt(capsys):
    code, payload, _ = run_json(capsys, "sum", "alt", "--s", "3", "--N", "300", "--json")
    assert code == 0
    assert payload["target"] == "10"


def test_simulate_deterministic(capsys):
    args = ("simulate", "--pattern", "HH", "--trials", "20000", "--seed", "42", "--json")
    code, first, _ = run_json(capsys, *args)
    assert code == 0
    code, second, _ = run_json(capsys, *args)
    assert first == second
    assert first["min"] == 2
    assert isinstance(first["mean"], float)
    assert first["total_flips"] == str(round(first["mean"] * 20000))


def test_scan_writes_reports(capsys, tmp_path):
    out_json = tmp_path / "scan.json"
    out_csv = tmp_path / "scan.csv"
    code, payload, _ = run_json(
        capsys, "scan", "--max-len", "3", "--out", str(out_json), "--csv", str(out_csv), "--json"
    )
    assert code == 0
    assert payload["scanned"] == 14
    assert payload["violations"] == []
    full = json.loads(out_json.read_text())
    assert len(full["records"]) == 14
    assert out_csv.read_text().count("\n") == 15


def test_scan_threads_flag_matches_single(capsys):
    code1, p1, _ = run_json(capsys, "scan", "--max-len", "5", "--json")
    code2, p2, _ = run_json(capsys, "scan", "--max-len", "5", "--threads", "3", "--json")
    assert code1 == code2 == 0
    assert p1 == p2


def test_inspect(capsys):
    code, payload, _ = run_json(capsys, "inspect", "HTH", "--json")
    assert code == 0
    assert payload["correlation_set"] == [1, 3]
    assert payload["expected_wait"] == "10"
    assert payload["transitions"] == [[1, 0], [1, 2], [3, 0], [3, 3]]


def test_inspect_die(capsys):
    code, payload, _ = run_json(capsys, "inspect", "0,2,2", "--alphabet", "3", "--json")
    assert code == 0
    assert payload["complement"] is None
    assert payload["correlation_set"] == [3]
    assert payload["expected_wait"] == "27"


def test_usage_error_exit_code_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expect"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 1


def test_bad_pattern_exit_code_1(capsys):
    code, _, err = run_cli(capsys, "expect", "HTX")
    assert code == 1
    assert "error" in err


def test_human_output_shows_approximations(capsys):
    code, out, _ = run_cli(capsys, "sum", "id1", "--k", "2", "--N", "64")
    assert code == 0
    assert "partial" in out and "target" in out and "~" in out


def test_scan_threads_env_var(capsys, monkeypatch):
    monkeypatch.setenv("FLIPWAIT_THREADS", "2")
    code, payload, _ = run_json(capsys, "scan", "--max-len", "4", "--json")
    assert code == 0
    assert payload["violations"] == []


def test_expect_all_disagreement_exits_2(capsys, monkeypatch):
    import flipwait.cli as cli_mod

    monkeypatch.setattr(cli_mod.exact, "expected_wait_conway", lambda p: 999)
    code, payload, err = run_json(capsys, "expect", "HH", "--method", "all", "--json")
    assert code == 2
    assert payload["agree"] is False
    assert "disagreement" in err
