import json

import pytest

from g2sub import catalog
from g2sub.catalog import Status, entry, load_table, parse_catalog, verify_table
from g2sub.expr import parse_elements
from g2sub.subspace import NILRADICAL, normalizer, span


def test_one_line_block_with_quoted_semicolons():
    text = '[T3:7] gens = "X[0,1]+X[3,1]; X[2,1]; X[3,2]" ; expect = solvable,nilpotent\n'
    (e,) = parse_catalog(text)
    assert (e.table_id, e.row_id) == ("T3", "7")
    assert len(parse_elements(e.text("gens"))) == 3
    assert e.flags() == {"solvable": True, "nilpotent": True}


def test_repeated_keys_and_comments():
    text = '# header\n[PROP2:x]\nsummand = "X[1,0]" 1 irreducible # note\nsummand = "X[0,1]" 1 trivial\n'
    (e,) = parse_catalog(text)
    assert e.values("summand") == ['"X[1,0]" 1 irreducible', '"X[0,1]" 1 trivial']


def test_malformed_blocks():
    with pytest.raises(catalog.CatalogError):
        parse_catalog('gens = "X[1,0]"\n')
    with pytest.raises(catalog.CatalogError):
        parse_catalog('[T3:1]\ngens = "X[1,0]\n')


def test_table_sizes():
    assert len(load_table("T3")) == 49
    assert len(load_table("T40")) == 25
    assert len(load_table("T20")) == 4
    assert len(load_table("T2")) == 2


def test_every_expression_round_trips():
    assert catalog.roundtrip_failures() == []


def test_t3_rows_pairwise_distinct():
    rep = verify_table("T3")
    (rec,) = [r for r in rep.entries if r.check == "pairwise_distinct"]
    assert rec.status is Status.PASS


def test_t3_lambda_rows_sampled_four_times():
    rep = verify_table("T3")
    for row in ("9", "21"):
        checks = [r.check for r in rep.entries if r.row_id == row and r.check.startswith("subalgebra")]
        assert len(checks) == 4


def test_linked_normalizers_agree():
    for e in load_table("T40"):
        if e.get("t3") and not e.get("lambda"):
            t3 = entry("T3", e.get("t3"))
            assert normalizer(span(parse_elements(t3.text("gens")))) == span(parse_elements(e.text("normalizer")))


def test_u_beta_normalizer_row():
    rep = verify_table("T40")
    (rec,) = [r for r in rep.entries if r.row_id == "2"]
    assert rec.status is Status.PASS and rec.details == "dim 9"


def test_listed_normalizer_of_last_row_is_too_small():
    e = entry("T40", "25")
    s = span(parse_elements(e.text("subalgebra")))
    n = normalizer(s)
    assert n.dim == 7 and n.contains_space(NILRADICAL)
    assert span(parse_elements(e.text("listed_normalizer"))).dim == 6


def test_t20_ranks():
    rep = verify_table("T20")
    assert rep.ok and [r.details.split(",")[0] for r in rep.entries] == ["rank 6", "rank 8", "rank 10", "rank 12"]


@pytest.mark.parametrize("tid", catalog.TABLE_IDS)
def test_each_table_passes(tid):
    rep = verify_table(tid)
    assert rep.ok, rep.to_text()


def test_counts():
    assert catalog.theorem1_counts() == (64, 2, 49)


def test_report_is_deterministic_and_serializable():
    a, b = catalog.verify_all(), catalog.verify_all()
    assert a.to_text() == b.to_text() and a.to_json() == b.to_json()
    doc = json.loads(a.to_json())
    assert doc["ok"] and doc["summary"]["fail"] == 0
    assert doc["summary"]["skipped"] == 1


def test_failed_check_is_recorded_not_raised():
    rep = catalog.VerificationReport()
    catalog._guard(rep, "T3", "x", "boom", lambda: 1 / 0)
    assert not rep.ok and "ZeroDivisionError" in rep.failures()[0].details
