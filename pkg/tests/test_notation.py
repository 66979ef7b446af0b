import pytest

from irrsub.notation import format_weight, normalize_expr, parse_factor_list, parse_weight
from irrsub.rootsys import GroupShape


def G(text):
    return GroupShape.parse(text)


def test_weight_strings():
    assert parse_weight(G("E6"), "100000") == (1, 0, 0, 0, 0, 0)
    assert parse_weight(G("A2A2"), "10,01") == (1, 0, 0, 1)
    assert parse_weight(G("A2"), "(12;0)") == (12, 0)
    assert parse_weight(G("A2"), "(12 3)") == (12, 3)
    assert parse_weight(G("E7"), "λ1+λ5") == (1, 0, 0, 0, 1, 0, 0)
    assert parse_weight(G("E7"), "2l7") == (0,) * 6 + (2,)
    assert parse_weight(G("B4"), "0") == (0,) * 4
    assert format_weight(G("A2"), (12, 0)) == "(12;0)"
    assert format_weight(G("A2A2"), (1, 0, 0, 1)) == "10,01"


@pytest.mark.parametrize("text", ["1000", "1x", "λ9", "(1;2;3)", "10,01,00"])
def test_bad_weights(text):
    with pytest.raises(ValueError):
        parse_weight(G("A2A2") if "," in text else G("A2"), text)


def test_expressions_normalise():
    assert normalize_expr("W(11)² ⊗ 00") == normalize_expr("W(11)^2 * 00")
    node = parse_factor_list("(10,W(11)^[r]) / (00,00)^3", 2)
    assert node is not None
    with pytest.raises(ValueError):
        parse_factor_list("(10,11", 2)
