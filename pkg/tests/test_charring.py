from itertools import product
from math import comb

import pytest

from irrsub.charring import (
    FormalCharacter,
    alt_power,
    dominant_weyl_multiplicities,
    dual,
    subtract,
    sym_power,
    tensor,
    trivial_character,
    weyl_character,
    weyl_dim,
)
from irrsub.modular import decompose
from irrsub.atlas import seed_db
from irrsub.rootsys import GroupShape, SimpleType

from _oracles import SIMPLE_ROOTS, EuclideanSystem, negate_weights


def G(text):
    return GroupShape.parse(text)


@pytest.mark.parametrize("name", sorted(SIMPLE_ROOTS))
def test_freudenthal_matches_kostant(name):
    # every dominant weight with coordinates at most 3, full weight multisets
    oracle = EuclideanSystem(name)
    for lam in product(range(4), repeat=oracle.rank):
        assert weyl_character(G(name), lam).as_dict() == oracle.character(lam), lam


def test_product_of_rank_one_factors_matches_oracle():
    a1 = EuclideanSystem("A1")
    for a, b in product(range(4), repeat=2):
        left, right = a1.character((a,)), a1.character((b,))
        expect = {u + v: m * n for u, m in left.items() for v, n in right.items()}
        assert weyl_character(G("A1A1"), (a, b)).as_dict() == expect


@pytest.mark.parametrize("name,lam,dim", [
    ("G2", (1, 0), 7), ("F4", (0, 0, 0, 1), 26), ("E6", (1, 0, 0, 0, 0, 0), 27),
    ("E7", (0, 0, 0, 0, 0, 0, 1), 56), ("G2", (0, 1), 14), ("F4", (1, 0, 0, 0), 52),
    ("E6", (0, 1, 0, 0, 0, 0), 78), ("E7", (1, 0, 0, 0, 0, 0, 0), 133),
    ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
])
def test_named_dimensions(name, lam, dim):
    assert weyl_dim(G(name), lam) == dim
    assert weyl_character(G(name), lam).dim == dim


def test_a2_adjoint_dominant_part():
    assert dominant_weyl_multiplicities(SimpleType.parse("A2"), (1, 1)) == {(1, 1): 1, (0, 0): 2}


def test_trivial_and_errors():
    assert weyl_character(G("E7"), (0,) * 7) == trivial_character(G("E7"))
    with pytest.raises(ValueError):
        weyl_character(G("A2"), (-1, 0))
    with pytest.raises(ValueError):
        weyl_dim(G("A2"), (1, 0, 0))


def test_tensor():
    g = G("A2")
    t = tensor(weyl_character(g, (1, 0)), weyl_character(g, (0, 1)))
    assert t.dim == 9
    assert set(t.dominant_part()) == {(1, 1), (0, 0)}
    assert decompose(t, 0, seed_db()).format() == "11^1, 00^1"
    v = weyl_character(G("G2"), (1, 0))
    assert tensor(v, v).dim == 49
    assert tensor(v, trivial_character(G("G2"))) == v
    with pytest.raises(ValueError):
        tensor(v, weyl_character(g, (1, 0)))


def test_exterior_powers():
    g2 = G("G2")
    v = weyl_character(g2, (1, 0))
    assert alt_power(v, 1) == v
    a3 = alt_power(v, 3)
    assert a3.dim == 35
    assert decompose(a3, 0, seed_db()).format() == "20^1, 10^1, 00^1"
    a5 = G("A5")
    nat = weyl_character(a5, (1, 0, 0, 0, 0))
    assert alt_power(nat, 3) == weyl_character(a5, (0, 0, 1, 0, 0))
    for k in range(8):
        assert alt_power(v, k).dim == comb(7, k)
    assert sum(alt_power(v, k).dim for k in range(8)) == 2 ** 7
    assert sym_power(v, 2).dim == comb(8, 2)
    with pytest.raises(ValueError):
        alt_power(v, 8)


def test_dual():
    a2 = G("A2")
    assert dual(weyl_character(a2, (1, 0))) == weyl_character(a2, (0, 1))
    d5 = G("D5")
    spin = weyl_character(d5, (0, 0, 0, 1, 0))
    assert dual(spin) == weyl_character(d5, (0, 0, 0, 0, 1))
    assert dual(spin).as_dict() == negate_weights(spin.as_dict())
    adj = weyl_character(G("E6"), (0, 1, 0, 0, 0, 0))
    assert dual(adj) == adj
    assert dual(dual(spin)) == spin


def test_subtract():
    g = G("A2")
    t = tensor(weyl_character(g, (1, 0)), weyl_character(g, (0, 1)))
    assert subtract(t, weyl_character(g, (1, 1))) == trivial_character(g)
    assert subtract(t, t).is_empty()
    assert subtract(t, FormalCharacter(g)) == t
    with pytest.raises(ValueError):
        subtract(trivial_character(g), t)
