import pytest

from irrsub.atlas import load_db, seed_db
from irrsub.charring import tensor, weyl_character
from irrsub.modular import (
    FactorMultiset,
    InconsistentDatabaseError,
    ModularDB,
    UnknownCharacterError,
    compose_factors,
    decompose,
    evaluate,
    frobenius_twist,
    irr_char,
    irr_dim,
    steinberg_split,
    weyl_factors,
)
from irrsub.rootsys import GroupShape, SimpleType


def G(text):
    return GroupShape.parse(text)


@pytest.fixture(scope="module")
def db():
    return load_db()


def test_frobenius_twist():
    a = weyl_character(G("A2"), (1, 0))
    assert frobenius_twist(a, 0, 3) == a
    t = frobenius_twist(a, 1, 3)
    assert t.dim == 3
    assert set(t.dominant_part()) == {(3, 0)}
    with pytest.raises(ValueError):
        frobenius_twist(a, 1, 0)


def test_steinberg_split():
    assert steinberg_split((1, 1), 3) == [((1, 1), 0)]
    assert steinberg_split((3, 0), 3) == [((1, 0), 1)]
    assert steinberg_split((3, 1), 2) == [((1, 1), 0), ((1, 0), 1)]
    lam, p = (7, 4), 2
    parts = steinberg_split(lam, p)
    assert tuple(sum(w[i] * p ** r for w, r in parts) for i in range(2)) == lam
    assert all(max(w) < p and any(w) for w, _ in parts)


def test_irreducible_dimensions(db):
    assert irr_dim(G("A2"), (1, 1), 3, db) == 7
    assert irr_dim(G("G2"), (2, 0), 7, db) == 26
    assert irr_char(G("E6"), (0, 1, 0, 0, 0, 0), 0, db) == weyl_character(G("E6"), (0, 1, 0, 0, 0, 0))
    # Steinberg: L(30) at p=3 is the twist of the natural module
    assert irr_dim(G("A2"), (3, 0), 3, db) == 3
    assert irr_dim(G("A2"), (4, 0), 3, db) == 9


def test_decompose_examples(db):
    a2 = G("A2")
    t = tensor(weyl_character(a2, (1, 0)), weyl_character(a2, (0, 1)))
    assert decompose(t, 3, db) == FactorMultiset(a2, {(1, 1): 1, (0, 0): 2})
    lam = (1, 1)
    assert decompose(irr_char(a2, lam, 3, db), 3, db) == FactorMultiset(a2, {lam: 1})
    f4 = G("F4")
    assert weyl_factors(f4, (0, 0, 0, 1), 3, db) == FactorMultiset(f4, {(0, 0, 0, 1): 1, (0, 0, 0, 0): 1})
    assert weyl_factors(G("E6"), (0, 1, 0, 0, 0, 0), 3, db) == \
        FactorMultiset(G("E6"), {(0, 1, 0, 0, 0, 0): 1, (0,) * 6: 1})
    assert weyl_factors(G("B4"), (0, 1, 0, 0), 2, db) == \
        FactorMultiset(G("B4"), {(0, 1, 0, 0): 1, (1, 0, 0, 0): 1, (0, 0, 0, 0): 2})
    assert weyl_factors(G("E8"), (0,) * 7 + (1,), 0, db) == FactorMultiset(G("E8"), {(0,) * 7 + (1,): 1})


def test_reconstruction_identity(db):
    g = G("G2")
    ch = tensor(weyl_character(g, (1, 0)), weyl_character(g, (0, 1)))
    for p in (0, 2, 3, 5, 7):
        f = decompose(ch, p, db)
        assert compose_factors(f, p, db) == ch
        assert f.total_dim(p, db) == ch.dim


def test_seed_entries():
    s = seed_db()
    assert s.lookup(SimpleType.parse("G2"), 7, (2, 0)) == {(2, 0): 1, (0, 0): 1}
    assert s.lookup(SimpleType.parse("E7"), 2, (1, 0, 0, 0, 0, 0, 0)) == \
        {(1, 0, 0, 0, 0, 0, 0): 1, (0,) * 7: 1}
    assert all(v == "table" for v in s.provenance.values())


def test_strict_mode_raises_on_missing_entry():
    strict = ModularDB("strict")
    with pytest.raises(UnknownCharacterError):
        irr_char(G("A2"), (1, 1), 3, strict)
    # p=0 never needs the database
    assert irr_char(G("A2"), (1, 1), 0, strict).dim == 8
    perm = ModularDB()
    assert irr_dim(G("A2"), (1, 1), 3, perm) == 8


def test_database_grammar_and_checks():
    db = ModularDB()
    db.read_text("A 2 3 11 : 11^1, 00^1  # {table}\n\n# comment only\n")
    assert db.lookup(SimpleType.parse("A2"), 3, (1, 1)) == {(1, 1): 1, (0, 0): 1}
    assert db.provenance[(SimpleType.parse("A2"), 3, (1, 1))] == "table"
    again = ModularDB()
    again.read_text(db.dumps())
    assert again.entries == db.entries
    with pytest.raises(InconsistentDatabaseError):
        db.add(SimpleType.parse("A2"), 3, (1, 1), {(1, 1): 1, (0, 0): 2})
    with pytest.raises(InconsistentDatabaseError):
        ModularDB().add(SimpleType.parse("A2"), 3, (1, 1), {(0, 0): 1})
    with pytest.raises(InconsistentDatabaseError):
        ModularDB().add(SimpleType.parse("A2"), 3, (1, 0), {(1, 0): 1, (1, 1): 1})
    with pytest.raises(ValueError):
        ModularDB().read_text("A 2 3 11 11^1\n")


def test_inconsistent_entry_is_detected_when_peeling():
    db = ModularDB()
    # claims W(11) at p=3 has two trivial factors; L(11) would then need a
    # negative zero-weight multiplicity
    db.add(SimpleType.parse("A2"), 3, (1, 1), {(1, 1): 1, (0, 0): 3})
    with pytest.raises(InconsistentDatabaseError):
        irr_char(G("A2"), (1, 1), 3, db)


def test_evaluate_expressions(db):
    a2 = G("A2")
    ch = evaluate("W(11) / 00^2", a2, 3, db)
    assert ch.dim == 10
    assert evaluate("10^[r]", a2, 3, db, {"r": 1}) == frobenius_twist(weyl_character(a2, (1, 0)), 1, 3)
    g = G("A2A2")
    assert evaluate("(10,01) / (01,10)", g, 0, db).dim == 18
