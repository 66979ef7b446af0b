import pytest

from irrsub.atlas import load_db, named_embedding
from irrsub.charring import weyl_character
from irrsub.embed import (
    DiagonalSpec,
    WeightMap,
    compose_embeddings,
    diagonal_embedding,
    identity_embedding,
    is_classical_irreducible,
    restrict_character,
    restrict_factors,
    subsystem_embedding,
)
from irrsub.modular import FactorMultiset, decompose, evaluate
from irrsub.rootsys import GroupShape, SimpleType, build_root_datum, graph_aut, special_isogeny


def G(text):
    return GroupShape.parse(text)


A2 = SimpleType.parse("A2")
V27 = (1, 0, 0, 0, 0, 0)
LE6 = (0, 1, 0, 0, 0, 0)


@pytest.fixture(scope="module")
def db():
    return load_db()


def f(shape, text, p, db):
    return decompose(evaluate(text, G(shape) if isinstance(shape, str) else shape, p, db), p, db)


def test_diagonal_maps():
    e = diagonal_embedding(DiagonalSpec(((0, graph_aut(A2)),), 0), A2)
    assert e.matrix == identity_embedding(G("A2")).matrix
    e = diagonal_embedding(DiagonalSpec(((0, graph_aut(A2)), (1, graph_aut(A2))), 3), A2)
    assert e.apply((1, 2, 3, 4)) == (1 + 9, 2 + 12)
    e = diagonal_embedding(DiagonalSpec(((0, graph_aut(A2)), (0, graph_aut(A2, "sigma"))), 0), A2)
    assert e.apply((1, 2, 3, 4)) == (1 + 4, 2 + 3)
    with pytest.raises(ValueError):
        diagonal_embedding(DiagonalSpec(((0, graph_aut(A2)), (1, graph_aut(A2))), 0), A2)
    b2 = SimpleType.parse("B2")
    with pytest.raises(ValueError):
        diagonal_embedding(DiagonalSpec(((0, graph_aut(b2)), (0, special_isogeny(b2))), 3), b2)


def test_levi_d5_on_v27(db):
    e = named_embedding("E6", "levi:D5", 0, db)
    got = decompose(restrict_character(weyl_character(G("E6"), V27), e), 0, db)
    assert got == f("D5", "10000 / 00010 / 00000", 0, db)
    assert sorted(d for d in got.dims(0, db).values()) == [1, 10, 16]


def test_a2_cubed_on_v27(db):
    e = named_embedding("E6", "A2^3", 0, db)
    got = decompose(restrict_character(weyl_character(G("E6"), V27), e), 0, db)
    assert got == f("A2A2A2", "(10,01,00) / (00,10,01) / (01,00,10)", 0, db)


def test_transporter_restrictions(db):
    e = named_embedding("E6", "F4", 0, db)
    got = decompose(restrict_character(weyl_character(G("E6"), LE6), e, 0, db), 0, db)
    assert sorted(got.dims(0, db).values()) == [26, 52]
    b4 = named_embedding("F4", "B4", 0, db)
    v26 = weyl_character(G("F4"), (0, 0, 0, 1))
    for p in (0, 3):
        got = decompose(restrict_character(v26, b4, p, db), p, db)
        assert got == f("B4", "W(1000) / 0001 / 0000", p, db)


def test_e8_d8_adjoint(db):
    e = named_embedding("E8", "D8", 0, db)
    got = decompose(restrict_character(weyl_character(G("E8"), (0,) * 7 + (1,)), e, 0, db), 0, db)
    assert sorted(got.dims(0, db).values()) == [120, 128]


@pytest.mark.parametrize("g,key", [("E6", "levi:D5"), ("E6", "A2^3"), ("E7", "A7"),
                                   ("E8", "D8"), ("E8", "A8"), ("F4", "B4"), ("G2", "A2")])
def test_subsystem_contains_sub_adjoint(g, key, db):
    e = named_embedding(g, key, 0, db)
    d = build_root_datum(SimpleType.parse(g))
    amb = restrict_character(weyl_character(G(g), d.root_to_weight(d.highest_root)), e)
    sub = e.target
    for i, t in enumerate(sub.components):
        sd = build_root_datum(t)
        lam = [0] * sub.rank
        s = sub.slices()[i]
        lam[s] = sd.root_to_weight(sd.highest_root)
        adj = weyl_character(sub, tuple(lam))
        assert all(amb.mult(w) >= k for w, k in adj.items())


def test_subsystem_roots_checked():
    d = build_root_datum(SimpleType.parse("A3"))
    e = subsystem_embedding(d, [(1, 0, 0), (0, 1, 0)])
    assert e.target.same_group(G("A2"))
    with pytest.raises(ValueError):
        subsystem_embedding(d, [(1, 0, 0), (2, 1, 0)])


def test_composition(db):
    outer = named_embedding("E6", "A2^3", 0, db)
    auts = ((0, graph_aut(A2)),) * 3
    inner = diagonal_embedding(DiagonalSpec(auts, 0), A2)
    both = compose_embeddings(outer, inner)
    direct = WeightMap(outer.source, inner.target,
                       tuple(tuple(sum(inner.matrix[j][k] * outer.matrix[k][i]
                                       for k in range(6)) for i in range(6)) for j in range(2)))
    assert both.matrix == direct.matrix
    ch = weyl_character(G("E6"), LE6)
    assert restrict_character(ch, both) == restrict_character(restrict_character(ch, outer), inner)
    ident = identity_embedding(G("E6"))
    assert compose_embeddings(ident, outer).matrix == outer.matrix
    with pytest.raises(ValueError):
        compose_embeddings(inner, outer)


def test_restrict_factors(db):
    e = named_embedding("E6", "F4", 3, db)
    empty = FactorMultiset(G("E6"))
    assert len(restrict_factors(empty, e, 3, db)) == 0
    fm = FactorMultiset(G("E6"), {LE6: 1})
    got = restrict_factors(fm, e, 3, db)
    assert got.total_dim(3, db) == fm.total_dim(3, db)


def test_classical_irreducibility_predicate():
    b2 = G("B2")
    assert is_classical_irreducible("B", FactorMultiset(b2, {(1, 0): 1}))
    assert not is_classical_irreducible("B", FactorMultiset(b2, {(1, 0): 2}))
    a2 = G("A2")
    assert not is_classical_irreducible("D", FactorMultiset(a2, {(1, 0): 1, (0, 1): 1}))
    assert is_classical_irreducible("A", FactorMultiset(a2, {(1, 0): 1}))
