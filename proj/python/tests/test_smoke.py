import json

import pytest

import hwcc


def test_examples():
    assert [str(c) for c in hwcc.cc("1+")] == ["1+", "++"]
    assert [str(c) for c in hwcc.cc("1+2+")] == ["1+2+", "1+++", "++1+", "++++"]
    assert [str(c) for c in hwcc.ltc("1+2+")] == ["++1+", "++++"]
    assert hwcc.av("1+2+") == 4
    assert hwcc.g_cell("1+2+") == 3
    assert str(hwcc.annihilator_partner("1+")) == "++"
    assert hwcc.annihilator_partner("12") is None


def test_clan_and_weyl_round_trip():
    c = hwcc.Clan("12+34++")
    w = c.w()
    assert str(w) == "-1,-2,7,-3,-4,6,5"
    assert w.in_script_w()
    assert hwcc.clan_from_w(w) == c
    assert c.tau() == w.tau()
    assert hwcc.closure_leq("++++", "1+2+")
    assert hwcc.bruhat_leq(hwcc.Clan("++++").w(), hwcc.Clan("1+2+").w())


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        hwcc.Clan("1+3")


def test_enumerate_and_table():
    rows = hwcc.enumerate(3)
    assert len(rows) == 8
    assert rows[0]["clan"] == "+++"
    assert json.loads(hwcc.table(3, "json"))["rows"] == rows
    assert hwcc.table(3, "csv").splitlines()[0].startswith("clan,w,dim")


def test_cells_and_oracle():
    doc = hwcc.cells(4)
    assert doc["total"] == 16
    assert sorted(str(c) for c in hwcc.geometric_cell(3, 2)) == sorted(["1+2", "1++", "+12"])
    for c in hwcc.all_clans(5):
        assert hwcc.rank_oracle(c) == hwcc.g_cell(c)


def test_verify_report():
    report = hwcc.verify(n_max=3)
    assert report["schema"] == "hwcc.verification/1"
    assert report["passed"]
