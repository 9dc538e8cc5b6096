"""
Tests for the command-line surface
"""
import json

from src.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def test_gen_universal_reports_zero_correction(capsys):
    assert main(["--no-color", "gen", "--family", "universal-d1", "--n", "3", "--p", "24"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["meta"]["cor"] == 0
    assert data["meta"]["report"]["core_constant"] == 2


def test_gen_classic_fermat_reports_cor(capsys):
    assert main(["--no-color", "gen", "--family", "classic-fermat", "--n", "3", "--p", "16"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["meta"]["cor"] == 8


def test_gen_is_byte_identical(capsys):
    args = ["--no-color", "gen", "--family", "bi-residue", "--n", "2", "--p", "16"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_gen_rejects_bad_parameters():
    assert main(["--no-color", "gen", "--family", "universal-d1", "--n", "0", "--p", "8"]) == EXIT_USAGE


def test_unknown_family_is_a_usage_error():
    assert main(["gen", "--family", "nope", "--n", "3", "--p", "8"]) == EXIT_USAGE


def test_table_prints_golden_layout(capsys, golden_dir):
    assert main(["--no-color", "table", "--family", "classic-fermat", "--p", "18", "--n", "3"]) == EXIT_OK
    assert capsys.readouterr().out == (golden_dir / "shorthand_p18_m9.txt").read_text()


def test_table_notes_empty_front_end(capsys):
    assert main(["--no-color", "table", "--family", "universal-d1", "--p", "8", "--n", "2"]) == EXIT_OK
    assert "front-end is empty" in capsys.readouterr().out


def test_compare_json(capsys):
    assert main(["--no-color", "compare", "--p", "24", "--n", "3", "--json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["saved_fa_count"] == 12
    assert record["expected_saving"] == 12


def test_compare_at_4n_saves_nothing(capsys):
    assert main(["--no-color", "compare", "--p", "12", "--n", "3", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["saved_fa_count"] == 0


def test_report_json(capsys):
    assert main(["--no-color", "report", "--family", "classic-fermat", "--p", "17", "--n", "3", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["cor"] == 6
    assert report["block_corrections"] == [-7, -7, -3]


def test_report_text(capsys):
    assert main(["--no-color", "report", "--family", "classic-fermat", "--p", "16", "--n", "3"]) == EXIT_OK
    assert "|-19|_9 = 8" in capsys.readouterr().out


def test_verify_single_sweep(capsys):
    code = main(["--no-color", "verify", "--family", "universal-d1", "--p", "10", "--n", "2", "--json"])
    assert code == EXIT_OK
    verdicts = json.loads(capsys.readouterr().out)
    assert verdicts[0]["passed"] is True
    assert verdicts[0]["evaluated"] == 1024


def test_verify_over_budget_is_a_usage_error(monkeypatch):
    monkeypatch.setenv("RESGEN_EXHAUSTIVE_BUDGET", "1024")
    assert main(["--no-color", "verify", "--family", "universal-d1", "--p", "12", "--n", "2"]) == EXIT_USAGE


def test_verify_plan(capsys, repo_root):
    code = main(["--no-color", "verify", "--plan", str(repo_root / "plans" / "quick.yml"), "--json"])
    assert code == EXIT_OK
    assert all(v["passed"] for v in json.loads(capsys.readouterr().out))


def test_export_round_trip(tmp_path):
    netlist = tmp_path / "g.json"
    verilog = tmp_path / "g.v"
    assert main(["--no-color", "gen", "--family", "classic-mersenne", "--p", "6", "--n", "3",
                 "--out", str(netlist)]) == EXIT_OK
    assert main(["--no-color", "export", str(netlist), "--out", str(verilog)]) == EXIT_OK
    assert "module resgen_classic_mersenne_p6_n3" in verilog.read_text()


def test_export_missing_file(tmp_path):
    assert main(["--no-color", "export", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE}) == 3
