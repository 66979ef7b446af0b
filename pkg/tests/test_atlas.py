import pytest

from irrsub.atlas import (
    CHARACTERISTICS,
    Condition,
    ExpectedRow,
    expected_rows,
    levi_subgroups,
    load_db,
    maximal_subgroups,
    module_dim,
    twist_instances,
)
from irrsub.modular import FactorMultiset, decompose, evaluate
from irrsub.notation import parse_weight
from irrsub.rootsys import GroupShape
from irrsub.verify import row_factors


@pytest.fixture(scope="module")
def db():
    return load_db()


def names(g, p):
    return {m.name for m in maximal_subgroups(g, p)}


def test_maximal_lists():
    assert {"A7", "A2A5", "G2C3", "A2"} <= names("E7", 5)
    assert "A2" not in names("E7", 2)
    for p in CHARACTERISTICS:
        assert names("G2", p) == ({"A2", "~A2"} if p == 3 else {"A2"})


def test_conditions():
    assert Condition("p!=2").holds(0)
    assert Condition("p>3").holds(0)
    assert not Condition("p=2").holds(0)
    assert Condition("p>=5").holds(5) and not Condition("p>=5").holds(3)
    assert Condition("p≠3").holds(2) and not Condition("p≠3").holds(3)
    assert Condition("any").holds(7)
    with pytest.raises(ValueError):
        Condition("q=2")


def test_levi_rows():
    e6 = {lv.name: lv for lv in levi_subgroups("E6")}
    assert e6["D5"].V == "λ1 / λ4 / 0"
    e8 = {lv.name: lv for lv in levi_subgroups("E8")}
    assert {"λ1^2", "λ6", "λ7"} <= {t.strip() for t in e8["D7"].L.split("/")}
    assert "A2A2" in {lv.name for lv in levi_subgroups("E7")}


@pytest.mark.parametrize("g", ["E6", "E7", "E8"])
def test_levi_trivial_count(g, db):
    rank = GroupShape.parse(g).rank
    for lv in levi_subgroups(g):
        if lv.L is None:
            continue
        for p in CHARACTERISTICS:
            f = decompose(evaluate(lv.L, lv.shape, p, db), p, db)
            assert f.trivial_count() >= rank - lv.shape.rank, (lv.name, p)
            assert f.total_dim(p, db) == module_dim(g, "L")


@pytest.mark.parametrize("g", ["G2", "F4", "E6", "E7", "E8"])
def test_maximal_dimensions_sum(g, db):
    for p in CHARACTERISTICS:
        for m in maximal_subgroups(g, p):
            for which in ("V", "L"):
                expr = getattr(m, which)
                if expr is None:
                    continue
                f = decompose(evaluate(expr, m.shape, p, db), p, db)
                assert f.total_dim(p, db) == module_dim(g, which), (m.name, p, which)


def test_expected_rows():
    t1 = [r for r in expected_rows("1") if r.kind == "row"]
    assert [r.id for r in t1] == ["A2", "~A2"]
    assert t1[1].condition.holds(3) and not t1[1].condition.holds(5)
    assert {r.table for r in expected_rows(group="E6")} >= {"3"}


def test_twist_instances():
    row = ExpectedRow("3", "E6", "x", "A2^3", twist="rs=0")
    assert twist_instances(row, (1, 2)) == [{"r": 0, "s": 1}, {"r": 1, "s": 0}]
    assert twist_instances(ExpectedRow("3", "E6", "x", "A2^3", twist="0<r<s"), (2, 3)) == [{"r": 2, "s": 3}]
    assert twist_instances(ExpectedRow("3", "E6", "x", "A2^3"), (1, 2)) == [{}]


def test_weyl_term_rows_keep_printed_text():
    rows = [r for r in expected_rows() if r.table_text]
    assert rows
    assert all(r.has_data for r in rows)


def test_f4_b2b2_factor_restriction_at_p2(db):
    # L(F4) on one B2 factor of the maximal B2B2 at p=2; 10 and 02 are
    # exchanged by the special isogeny, so 01^5 cannot occur
    row = ExpectedRow("-", "F4", "B2B2 factor 0", "B2B2", factors=(0,))
    got = row_factors(row, 2, db, {}, "L")
    b2 = GroupShape.parse("B2")
    want = FactorMultiset(b2, {parse_weight(b2, w): k
                               for w, k in [("10", 5), ("01", 4), ("02", 1), ("00", 12)]})
    assert got == want
