from __future__ import annotations

import pytest

from strongsplitter import tables


@pytest.mark.parametrize("name", tables.TABLES)
def test_rendered_table_matches_golden(name):
    text = tables.render(name)
    assert tables.diff_against_golden(name, text) == ""


def test_diff_reports_changes():
    text = tables.golden("a1").replace("E4-minor=No", "E4-minor=Yes", 1)
    diff = tables.diff_against_golden("a1", text)
    assert diff.startswith("--- golden/a1.txt")
    assert "-A\t" in diff and "+A\t" in diff


def test_golden_row_counts():
    def body(name):
        return [ln for ln in tables.golden(name).splitlines() if not ln.startswith("#")]

    assert len(body("a1")) == 7 and len(body("a2")) == 7
    a3 = body("a3")
    assert [sum(ln.startswith(p + " ") for ln in a3) for p in "ABC"] == [14, 8, 14]
    for p in "ABC":
        rows = [r for ln in a3 if ln.startswith(p + " ") for r in ln.split("\t")[1].split()]
        assert len(rows) == len(set(rows)) == 52
