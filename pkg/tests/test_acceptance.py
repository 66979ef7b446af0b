"""Acceptance criteria 1-8.  Each test prints one PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v`` (the lines are
printed with capture disabled) or ``python3 tests/test_acceptance.py``.
"""

from itertools import product
import time

import pytest

from irrsub.atlas import EXCEPTIONAL, ExpectedRow, expected_rows, load_db, seed_db
from irrsub.charring import weyl_character, weyl_dim
from irrsub.embed import restrict_character
from irrsub.modular import decompose
from irrsub.rootsys import GroupShape
from irrsub.verify import (
    TWIST_SETS,
    check_factor_distinctness,
    row_factors,
    screen_irreducibility,
    screen_rows,
    verify_maximal,
    verify_tables,
    verify_weyl_table,
)

from _oracles import SIMPLE_ROOTS, EuclideanSystem

PS = (0, 2, 3, 5, 7)
# full-run budgets
DIMENSION_SECONDS = 1.0
TABLE_SECONDS = 300.0
PROPERTY_CASES = 1000


@pytest.fixture
def report(capsys):
    def emit(n, title, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {n} {title}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
        return ok
    return emit


@pytest.fixture(scope="module")
def db():
    return load_db()


def G(text):
    return GroupShape.parse(text)


def test_criterion_1_dimensions(report, db):
    t0 = time.perf_counter()
    named = [("G2", "10"), ("F4", "0001"), ("E6", "100000"), ("E7", "0000001")]
    adjoint = [("G2", "01"), ("F4", "1000"), ("E6", "010000"), ("E7", "1000000"), ("E8", "00000001")]
    dims = [weyl_dim(G(g), tuple(int(c) for c in w)) for g, w in named + adjoint]
    d8 = restrict_character(weyl_character(G("E8"), (0,) * 7 + (1,)),
                            __import__("irrsub.atlas", fromlist=["named_embedding"])
                            .named_embedding("E8", "D8", 0, db))
    d8dims = sorted(decompose(d8, 0, db).dims(0, db).values())
    took = time.perf_counter() - t0
    ok = dims == [7, 26, 27, 56, 14, 52, 78, 133, 248] and d8dims == [120, 128] and took < DIMENSION_SECONDS
    report(1, "dimensions", ok, f"{dims}, L(E8) on D8 {d8dims}, {took:.2f}s")
    assert ok


def test_criterion_2_maximal_entries(report, db):
    res = [r for g in ("E6", "E7", "E8") for r in verify_maximal(g, db, PS)]
    bad = [r for r in res if r.status != "pass"]
    ok = bool(res) and not bad
    report(2, "maximal-subgroup dimension sums", ok, f"{len(res) - len(bad)}/{len(res)} checks")
    assert ok, [r.text() for r in bad]


def test_criterion_3_tables(report, db):
    t0 = time.perf_counter()
    rep = verify_tables(["1", "2", "3", "4", "10", "11", "12", "13"], twist_sets=TWIST_SETS, ps=PS, db=db)
    spot = verify_tables(["5"], twist_sets=TWIST_SETS, ps=PS, db=db)
    took = time.perf_counter() - t0
    ok = rep.ok and spot.ok and bool(spot.results) and took < TABLE_SECONDS
    report(3, "table verification", ok,
           f"tables 1-4,10-13: {rep.summary()}; table 5 spot: {spot.summary()}; {took:.1f}s")
    assert ok, rep.text() + spot.text()


def test_criterion_4_weyl_module_table(report):
    seed = seed_db()
    res = verify_weyl_table(seed)
    bad = [r for r in res if r.status != "pass"]
    ok = len(res) == len(seed) and not bad
    report(4, "Weyl-module table reconstruction", ok, f"{len(res) - len(bad)}/{len(res)} entries")
    assert ok, [r.text() for r in bad]


def _is_a2_pair(pair):
    ids = sorted(x.row for x in pair)
    return "via (10,01^[r])" in ids[0] and "via (10,10^[r])" in ids[1] and all("A2" in i for i in ids)


def test_criterion_5_distinctness(report, db):
    problems, e8_pairs = [], 0
    for g in EXCEPTIONAL:
        for p in PS:
            for inst in TWIST_SETS:
                rep = check_factor_distinctness(g, p, inst, db)
                if rep.errors:
                    problems.append(f"{g} p={p} {inst}: {len(rep.errors)} errors")
                want = 1 if (g == "E8" and p not in (0, 3)) else 0
                if len(rep.pairs) != want or (want and not _is_a2_pair(rep.pairs[0])):
                    problems.append(rep.text().strip())
                if g == "E8":
                    e8_pairs += len(rep.pairs)
    ok = not problems
    report(5, "distinct L(G) factors", ok,
           f"E8 A2 pair found in {e8_pairs} of 6 (p, twist) runs with p in 2,5,7; none elsewhere"
           if ok else "; ".join(problems))
    assert ok


def test_criterion_6_kostant_oracle(report):
    checked = 0
    mismatches = []
    for name in sorted(SIMPLE_ROOTS):
        oracle = EuclideanSystem(name)
        for lam in product(range(4), repeat=oracle.rank):
            checked += 1
            if weyl_character(G(name), lam).as_dict() != oracle.character(lam):
                mismatches.append((name, lam))
    ok = not mismatches
    report(6, "Kostant oracle", ok, f"{checked} weights over {', '.join(sorted(SIMPLE_ROOTS))}")
    assert ok, mismatches


def test_criterion_7_property_suite(report):
    import test_properties as tp
    from conftest import ExactDB

    exact = ExactDB()
    tp.CASES.clear()
    tp.test_weyl_character_is_invariant_with_weyl_dimension()
    tp.test_tensor_dimension_multiplies()
    tp.test_decompose_reconstructs(exact=exact)
    tp.test_restriction_preserves_dimension()
    tp.test_dual_is_an_involution()
    tp.test_decompose_commutes_with_twisting(exact=exact)
    total = sum(tp.CASES.values())
    ok = total >= PROPERTY_CASES
    report(7, "property suite", ok, ", ".join(f"{k} {v}" for k, v in sorted(tp.CASES.items()))
           + f"; {total} cases")
    assert ok


F4_CANDIDATES = [("F4", p) for p in PS] + [("C4", 2), ("~D4", 2), ("G2", 7)]


def test_criterion_8_screening(report, db):
    problems = []
    rows3 = {r.id: r for r in expected_rows("3") if r.kind == "row"}
    for name, p in F4_CANDIDATES:
        row = rows3[name]
        lie, v = row_factors(row, p, db, {}, "L"), row_factors(row, p, db, {}, "V")
        verdict = screen_irreducibility("E6", p, lie.group, lie, v, db)
        if not verdict.irreducible:
            problems.append(f"{name} p={p}: {verdict.text()}")
        if name != "F4" and max(v.dims(p, db).values()) < 26:
            problems.append(f"{name} p={p}: no 26-dimensional factor on V27")
    no_trivial = contradictions = screened = 0
    for g in EXCEPTIONAL:
        for p in PS:
            for inst in TWIST_SETS:
                for s in screen_rows(g, p, inst, db):
                    screened += 1
                    if s.error:
                        problems.append(f"{g} {s.row.id} p={p}: {s.error}")
                        continue
                    if s.L.trivial_count() == 0:
                        no_trivial += 1
                        if s.verdict.reason != "no-trivials":
                            problems.append(f"{g} {s.row.id} p={p}: no trivials but {s.verdict.text()}")
                    contradictions += s.unexplained
    diag = ExpectedRow("-", "E6", "A2 in A2^3 via (10,10,10)", "A2^3", via="10,10,10")
    lie, v = row_factors(diag, 2, db, {}, "L"), row_factors(diag, 2, db, {}, "V")
    verdict = screen_irreducibility("E6", 2, "A2", lie, v, db)
    if verdict.irreducible or "D4" not in verdict.witness_names():
        problems.append(f"A2^3 diagonal p=2: {verdict.text()}")
    ok = not problems and contradictions == 0
    report(8, "screening", ok,
           f"{len(F4_CANDIDATES)} F4 candidates irreducible, {no_trivial} no-trivial row instances, "
           f"A2^3 diagonal witnesses {verdict.witness_names()}, {contradictions} contradictions "
           f"in {screened} screened row instances" if ok else "; ".join(problems))
    assert ok


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
