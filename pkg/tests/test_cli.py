import pytest

from ecamech.cli import main, parse_config_file


def test_rules_subcommand_lists_88(capsys):
    assert main(["rules"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 88
    assert lines[0] == "  0: orbit {0 255}"
    assert any(line.startswith("110:") for line in lines)


def test_run_end_to_end(tmp_path, capsys):
    code = main(
        [
            "run",
            "--rules",
            "30,110",
            "--width",
            "300",
            "--tmax",
            "4",
            "--seeds",
            "1,2",
            "--out",
            str(tmp_path),
            "--format",
            "csv,json",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "ranked by C_q growth" in out
    assert (tmp_path / "traces.csv").exists()
    assert (tmp_path / "report.json").exists()
    assert not list(tmp_path.glob("*.svg"))


def test_run_no_classical_and_pbm(tmp_path):
    code = main(
        [
            "run",
            "--rules",
            "90",
            "--width",
            "200",
            "--tmax",
            "3",
            "--seeds",
            "7",
            "--out",
            str(tmp_path),
            "--format",
            "csv",
            "--no-classical",
            "--pbm",
        ]
    )
    assert code == 0
    assert (tmp_path / "rule090_seed7.pbm").exists()
    line = (tmp_path / "traces.csv").read_text().splitlines()[1]
    assert line.split(",")[4] == ""


def test_unknown_flag_is_usage_error(capsys):
    assert main(["run", "--bogus"]) == 1
    assert "usage error" in capsys.readouterr().err


def test_missing_subcommand_is_usage_error():
    assert main([]) == 1


def test_bad_rules_list_is_usage_error(capsys):
    assert main(["run", "--rules", "30,abc"]) == 1


def test_out_of_range_rule_is_usage_error(tmp_path):
    assert main(["run", "--rules", "900", "--out", str(tmp_path)]) == 1


def test_unwritable_out_is_runtime_error(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code = main(
        [
            "run",
            "--rules",
            "30",
            "--width",
            "200",
            "--tmax",
            "2",
            "--seeds",
            "1",
            "--out",
            str(blocker / "sub"),
            "--format",
            "csv",
        ]
    )
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_config_file_supplies_settings(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# small smoke run\n"
        "rules = 30\n"
        "width = 250\n"
        "tmax = 4\n"
        "seeds = 3\n"
        "format = csv\n"
        "classical = false\n"
        f"out = {tmp_path / 'out'}\n"
    )
    assert main(["run", "--config", str(cfg)]) == 0
    lines = (tmp_path / "out" / "traces.csv").read_text().splitlines()
    assert len(lines) == 1 + 4
    assert lines[1].startswith("30,3,1,")


def test_flags_override_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"rules = 30\nwidth = 250\ntmax = 6\nseeds = 1\nformat = csv\nout = {tmp_path / 'a'}\n")
    assert main(["run", "--config", str(cfg), "--tmax", "2", "--out", str(tmp_path / "b")]) == 0
    lines = (tmp_path / "b" / "traces.csv").read_text().splitlines()
    assert [line.split(",")[2] for line in lines[1:]] == ["1", "2"]


def test_config_file_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("wdith = 100\n")
    assert main(["run", "--config", str(cfg)]) == 1
    assert "unknown key" in capsys.readouterr().err


def test_config_file_missing(tmp_path):
    assert main(["run", "--config", str(tmp_path / "absent.cfg")]) == 1


def test_parse_config_file_values(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("rules = 30,110  # the extremes\nchi2-alpha = 0.01\n")
    assert parse_config_file(str(cfg)) == {"rules": "30,110", "chi2-alpha": "0.01"}
