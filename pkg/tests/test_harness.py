import csv
import io
import json

import pytest

from twinvol import harness
from twinvol.harness import (
    CampaignConfig,
    Family,
    render_text,
    run_campaign,
    run_dihedral_campaign,
    run_indicator_campaign,
    run_order_class_campaign,
    run_table1,
    write_csv,
    write_json,
)

from oracles import perm_twisted_count


def _dump(report, writer):
    buf = io.StringIO()
    writer(report, buf)
    return buf.getvalue()


def test_dihedral_l3():
    rep = run_dihedral_campaign(CampaignConfig(Family.DIHEDRAL, max_l=3))
    assert rep.summary == {"cases": 6, "violations": 0, "equality_cases": 4}
    assert max(r.m for r in rep.records) == 4 == rep.records[0].T


def test_dihedral_l6_has_nonidentity_equality():
    rep = run_dihedral_campaign(CampaignConfig(Family.DIHEDRAL, max_l=6))
    rec = next(r for r in rep.records if (r.group, r.u, r.v) == ("D:6", 5, 0))
    assert rec.m == 8 == rec.T == perm_twisted_count(6, 5, 0) and rec.equality
    keys = [(int(r.group[2:]), r.u, r.v) for r in rep.records]
    assert keys == sorted(keys)
    assert rep.ok


def test_brute_cap_controls_cross_check():
    rep = run_dihedral_campaign(CampaignConfig(Family.DIHEDRAL, max_l=8, brute_cap=5))
    assert all((r.m_brute is not None) == (int(r.group[2:]) <= 5) for r in rep.records)


def test_violations_are_collected(monkeypatch):
    monkeypatch.setattr(harness, "degree_sum", lambda g: 3)
    rep = run_dihedral_campaign(CampaignConfig(Family.DIHEDRAL, max_l=4))
    assert not rep.ok
    assert rep.summary["violations"] == len(rep.counterexamples) > 1
    assert any("exceeds T=3" in c for c in rep.counterexamples)
    assert rep.summary["cases"] == 6 + 8


def test_parallel_matches_serial():
    serial = run_dihedral_campaign(CampaignConfig(Family.DIHEDRAL, max_l=25))
    parallel = run_dihedral_campaign(CampaignConfig(Family.DIHEDRAL, max_l=25, jobs=2))
    assert _dump(serial, write_json) == _dump(parallel, write_json)


def test_order_campaign_p3():
    rep = run_order_class_campaign(CampaignConfig(Family.ORDERS, primes=(3,)))
    assert rep.ok
    groups = []
    for r in rep.records:
        if r.group not in groups:
            groups.append(r.group)
    assert groups == ["Z:3", "Z:9", "Z:3xZ:3", "Z:6", "D:3"]
    z3_id = next(r for r in rep.records if r.group == "Z:3" and r.u == 1)
    assert (z3_id.m, z3_id.T) == (1, 3)
    d3 = [r.m for r in rep.records if r.group == "D:3"]
    assert sorted(d3) == [1, 1, 4, 4, 4, 4]


def test_order_campaign_p2_klein():
    rep = run_order_class_campaign(CampaignConfig(Family.ORDER_2P, primes=(2,)))
    klein = [r for r in rep.records if r.group == "Z:2xZ:2"]
    assert len(klein) == 6
    assert max(r.m for r in klein) == 4 == klein[0].T
    assert any("Klein" in n or "D_2" in n for n in rep.notes)


def test_order_campaign_single_class_and_cap():
    rep = run_order_class_campaign(CampaignConfig(Family.ORDER_P, primes=(313,)))
    assert {r.group for r in rep.records} == {"Z:313"} and len(rep.records) == 312
    capped = run_order_class_campaign(CampaignConfig(Family.ORDER_P_SQUARED, primes=(5, 7), two_cyclic_max_p=5))
    assert "Z:7xZ:7" not in {r.group for r in capped.records}
    assert any("cap" in n for n in capped.notes)


@pytest.mark.parametrize(
    "cfg",
    [
        CampaignConfig(Family.ORDERS, primes=(4,)),
        CampaignConfig(Family.ORDERS, primes=(37,)),
        CampaignConfig(Family.DIHEDRAL, max_l=2),
        CampaignConfig(Family.DIHEDRAL, max_l=1001),
        CampaignConfig(Family.DIHEDRAL, max_l=10, brute_cap=61),
        CampaignConfig(Family.INDICATORS, max_l=21),
        CampaignConfig(Family.TABLE1, jobs=0),
    ],
)
def test_config_validation(cfg):
    with pytest.raises(ValueError):
        run_campaign(cfg)


def test_table1():
    rep = run_table1(CampaignConfig(Family.TABLE1))
    assert rep.ok
    assert [r.label for r in rep.records] == ["e", "sigma_1", "sigma_2", "sigma_3", "sigma_4", "sigma_5"]
    assert [r.record.m for r in rep.records] == [4, 1, 1, 4, 4, 4]
    assert rep.records[0].elements == ("e", "s", "rs", "r^2s")
    assert [(r.image_r, r.image_s) for r in rep.records][3:] == [("r^2", "s"), ("r^2", "r^2s"), ("r^2", "rs")]
    assert len(rep.notes) == 2


def test_indicator_campaign():
    rep = run_indicator_campaign(CampaignConfig(Family.INDICATORS, max_l=6))
    assert rep.ok
    classical = [r for r in rep.records if r["kind"] == "classical"]
    assert classical[0]["group"] == "D:3" and classical[0]["indicators"] == [1, 1, 1]
    d3 = next(r for r in rep.records if (r["group"], r["kind"], r["u"], r["v"]) == ("D:3", "twisted", 2, 0))
    assert d3["lhs"] == d3["rhs"] == 4
    d4 = next(r for r in rep.records if (r["group"], r["u"], r["v"]) == ("D:4", 3, 0))
    assert d4["lhs"] == d4["rhs"] == 6
    kinds = {r["kind"] for r in rep.records}
    assert kinds == {"classical", "twisted", "twisted-raw"}


def test_writers_agree():
    rep = run_order_class_campaign(CampaignConfig(Family.ORDERS, primes=(2, 3)))
    doc = json.loads(_dump(rep, write_json))
    assert doc["summary"] == rep.summary
    assert doc["config"] == {"family": "orders", "primes": [2, 3], "two_cyclic_max_p": None}
    rows = list(csv.DictReader(io.StringIO(_dump(rep, write_csv))))
    assert list(rows[0]) == ["group", "u", "v", "m_closed", "m_brute", "rot", "refl", "T", "ineq_holds", "equality"]
    assert len(rows) == len(doc["records"]) == len(rep.records)
    for row, rec in zip(rows, doc["records"]):
        assert row["group"] == rec["group"]
        assert int(row["m_brute"]) == rec["m_brute"]
        assert int(row["T"]) == rec["T"]
        assert row["equality"] == ("true" if rec["equality"] else "false")
    text = render_text(rep, max_rows=10**6)
    assert f"cases={rep.summary['cases']} violations=0" in text
    for rec in doc["records"][:20]:
        assert f"group={rec['group']}  u={json.dumps(rec['u'], separators=(',', ':'))}" in text


def test_indicator_csv():
    rep = run_indicator_campaign(CampaignConfig(Family.INDICATORS, max_l=4))
    rows = list(csv.DictReader(io.StringIO(_dump(rep, write_csv))))
    assert list(rows[0]) == ["group", "kind", "u", "v", "lhs", "rhs", "ok"]
    assert all(r["ok"] == "true" for r in rows)
