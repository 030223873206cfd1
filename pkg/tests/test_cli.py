import json

import pytest

from atlas import build_parser, main
from utils.config import get_settings, set_config_path


def test_table_list(capsys):
    assert main(["table", "--list"]) == 0
    assert "gl12" in capsys.readouterr().out.split()


def test_check_json(capsys):
    code = main(["check", "--algebra", "gl", "--m", "2", "--n", "3", "--module", "std", "--borel", "dddee"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["reports"][0]["verdict"] == "spherical"
    assert data["reports"][0]["stabilizer"]["closed"]
    assert data["numerically_spherical"]


def test_check_markdown(capsys):
    code = main(["--format", "md", "check", "--algebra", "osp", "--m", "3", "--n", "1", "--module", "std", "--scan"])
    assert code == 0
    out = capsys.readouterr().out
    assert "| ed | spherical |" in out
    assert "| de | not_spherical |" in out


def test_parse_error_exit_code(capsys):
    code = main(["check", "--algebra", "gl", "--m", "1", "--n", "2", "--module", "bogus"])
    assert code == 2
    assert "bogus" in capsys.readouterr().err


def test_exceptional_check_rejected():
    assert main(["check", "--algebra", "g12", "--module", "std"]) == 2


def test_not_spherical_exit_code():
    code = main(["monoid", "--algebra", "osp", "--m", "3", "--n", "1", "--module", "std", "--borel", "de"])
    assert code == 4


def test_monoid_row(capsys):
    assert main(["monoid", "--row", "OSP", "--max-degree", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["matches"]


def test_monoid_unknown_row():
    assert main(["monoid", "--row", "nope"]) == 2


def test_borel_and_scan_are_exclusive():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["check", "--algebra", "gl", "--module", "std", "--borel", "ed", "--scan"])


def test_config_override(tmp_path, capsys):
    config = tmp_path / "config.yml"
    config.write_text("log_level: ERROR\nscan:\n  jobs: 1\n", encoding="utf-8")
    try:
        assert main(["--config", str(config), "table", "--list"]) == 0
        assert get_settings().log_level == "ERROR"
    finally:
        set_config_path("config.yml")
    capsys.readouterr()


@pytest.mark.slow
def test_table_exit_code(capsys):
    assert main(["table", "exceptional"]) == 0


def test_table_list_has_cli_ids(capsys):
    assert main(["table", "--list"]) == 0
    ids = capsys.readouterr().out.split()
    assert "intro-families" in ids
    assert "appendix-b" in ids


@pytest.mark.slow
@pytest.mark.parametrize("table_id, args", [("intro-families", []), ("appendix-b", ["--max-degree", "3"])])
def test_table_by_id(capsys, table_id, args):
    assert main(["--format", "md", "table", table_id] + args) == 0
    assert f"## {table_id}: PASS" in capsys.readouterr().out
