import pytest

from tools.tables import equivalence_hint, evaluate_row, list_tables, load_table, run_table
from tools.highest_weight import q_family
from utils.errors import ParseError

TABLES = ["appendix-b", "exceptional", "gl12", "intro-families", "osp-irreducibles", "p3-nabla", "q2-family"]


def test_list_tables():
    assert list_tables() == TABLES


def test_load_table_missing():
    with pytest.raises(ParseError):
        load_table("no-such-table")


def test_rows_have_cites():
    for name in TABLES:
        for row in load_table(name)["rows"]:
            assert row["cite"]
            assert row["key"]


def test_single_row():
    row = {"key": "OSP32", "kind": "any-borel", "algebra": {"kind": "osp", "m": 3, "n": 1}, "module": "std",
           "expect": True, "cite": "x"}
    assert evaluate_row(row).ok


def test_bad_row_is_reported_not_raised():
    row = {"key": "bad", "kind": "superdim", "algebra": {"kind": "gl", "m": 1, "n": 1}, "module": "bogus",
           "expect": "(1|1)", "cite": "x"}
    result = evaluate_row(row)
    assert not result.ok
    assert "ParseError" in result.note


def test_redirect_row():
    row = {"key": "d21a", "kind": "candidates", "algebra": {"kind": "d21a", "alpha": "1"},
           "expect": {"redirect": "osp(4|2)"}, "cite": "x"}
    assert evaluate_row(row).ok


def test_known_discrepancy_row():
    result = evaluate_row({"key": "GL", "kind": "monoid", "row": "GL", "cite": "x"}, max_degree=2)
    assert result.ok
    assert result.known_discrepancy


@pytest.mark.slow
def test_monoid_table_flags_two_discrepancies():
    report = run_table("appendix-b", jobs=1, max_degree=2)
    assert report.ok, [(r.key, r.expected, r.actual, r.note) for r in report.failures]
    assert sorted(r.key for r in report.discrepancies) == ["GL", "Q"]
    assert "已知出入 2 行" in report.to_markdown()


@pytest.mark.parametrize("module, expected", [("pi:family:t=-1/2", True), ("family:t=-1/2", False)])
def test_res_p22_spherical_only_after_parity_shift(module, expected):
    row = {"key": "ResP22", "kind": "any-borel", "algebra": {"kind": "q", "n": 2}, "module": module,
           "expect": expected, "cite": "x"}
    result = evaluate_row(row)
    assert result.ok, result.actual


def test_q_family_hint():
    assert equivalence_hint(q_family("-1/2")) == "Res_[p(2),p(2)] P_{2|2}"


@pytest.mark.slow
@pytest.mark.parametrize("name", TABLES)
def test_golden_tables(name):
    report = run_table(name, jobs=1)
    assert report.ok, [(r.key, r.expected, r.actual, r.note) for r in report.failures]
