import pytest
from hypothesis import given, strategies as st

from wreathkit.exceptions import ParseError
from wreathkit.graphprod import GPContext
from wreathkit.groupring import Laurent
from wreathkit.groups import Cyclic, FreeAbelian, FreeProductOfCyclics
from wreathkit.parsing import (load_json_arg, parse_element_expr, parse_gp_word, parse_gword, parse_laurent,
                               parse_wreath)
from wreathkit.sgraph import SimpGraph
from wreathkit.wreath import WreathProduct

U3 = GPContext(SimpGraph.from_edges(["u"], []), Cyclic(3))
PATH = GPContext(SimpGraph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c")]), Cyclic(0))
L2 = WreathProduct(Cyclic(2), Cyclic(0))


def test_gp_word_examples():
    assert parse_gp_word(U3, "u^2*u^1") == ()
    assert parse_gp_word(U3, "u") == (("u", 1),)
    assert parse_gp_word(PATH, "b * a^-2 * 1") == (("a", -2), ("b", 1))
    assert parse_gp_word(PATH, "c * a") == (("c", 1), ("a", 1))
    assert parse_gp_word(PATH, "1") == ()


def test_gp_word_free_abelian_vertex():
    ctx = GPContext(SimpGraph.from_edges(["v"], []), FreeAbelian(2))
    assert parse_gp_word(ctx, "v^[1,-2]") == (("v", (1, -2)),)


@pytest.mark.parametrize("text,pos", [("u^2*w", 4), ("u^", 2), ("u^2 u", 4), ("u & u", 2), ("", 0)])
def test_gp_word_error_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_gp_word(U3, text)
    assert exc.value.position == pos


def test_wreath_examples():
    assert parse_wreath(L2, "lamp(5,1)") == L2.make({5: 1}, 0)
    assert parse_wreath(L2, "lamp(0) * t^3") == L2.make({0: 1}, 3)
    assert parse_wreath(L2, "t * lamp(0) * t^-1") == L2.make({1: 1})
    assert parse_wreath(L2, "move(-2)") == L2.move(-2)
    assert parse_wreath(L2, "1") == L2.identity


def test_wreath_over_free_product():
    W = WreathProduct(Cyclic(3), FreeProductOfCyclics((2, 0)))
    H = W.B
    z = W.B.mul(H.generator(0), H.generator(1))
    assert parse_wreath(W, "lamp(t0*t1, 2)") == W.make({z: 2})
    assert parse_wreath(W, "t0 * t1") == W.move(z)


def test_wreath_error_position():
    with pytest.raises(ParseError) as exc:
        parse_wreath(L2, "lamp(0,1) * s")
    assert exc.value.position == 12
    with pytest.raises(ParseError):
        parse_wreath(L2, "lamp(0,1")


def test_laurent_examples():
    assert parse_laurent("X^-1 (mod 4)") == Laurent.from_dict(4, {-1: 1})
    assert parse_laurent("1+2*X^1", 4) == Laurent.from_dict(4, {0: 1, 1: 2})
    assert parse_laurent("10*X+6", 15) == Laurent.from_dict(15, {1: 10, 0: 6})
    assert parse_laurent("3X - X^2") == Laurent.from_dict(0, {1: 3, 2: -1})
    assert parse_laurent("-1") == Laurent.from_dict(0, {0: -1})


def test_laurent_errors():
    with pytest.raises(ParseError):
        parse_laurent("X (mod 4)", 5)
    with pytest.raises(ParseError) as exc:
        parse_laurent("1 + Y")
    assert exc.value.position == 4
    with pytest.raises(ParseError):
        parse_laurent("")


@given(st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=5), st.sampled_from([0, 4, 15]))
def test_laurent_text_round_trip(coeffs, k):
    p = Laurent.from_dict(k, coeffs)
    if not p.is_zero():
        assert parse_laurent(str(p)) == p


@given(st.dictionaries(st.integers(-5, 5), st.integers(0, 1), max_size=4), st.integers(-4, 4))
def test_wreath_text_round_trip(lamps, pos):
    x = L2.make(lamps, pos)
    assert parse_wreath(L2, x.text()) == x
    assert L2.decode(x.to_json()) == x


def test_gword():
    assert parse_gword("ab cd") == "abcd"
    with pytest.raises(ParseError) as exc:
        parse_gword("ab ce")
    assert exc.value.position == 4


def test_dispatch():
    assert parse_element_expr("gp-word", "u^3", U3) == ()
    assert parse_element_expr("laurent", "X", modulus=2) == Laurent.monomial(2, 1, 1)
    assert parse_element_expr("gword", "ad") == "ad"
    assert parse_element_expr("wreath", "t", L2) == L2.move(1)
    with pytest.raises(ValueError):
        parse_element_expr("nope", "")


def test_load_json_arg(tmp_path):
    assert load_json_arg('{"a": 1}') == {"a": 1}
    f = tmp_path / "x.json"
    f.write_text("[1, 2]")
    assert load_json_arg(str(f)) == [1, 2]


def test_integer_vertex_named_one():
    ctx = GPContext(SimpGraph.from_edges([0, 1], []), Cyclic(2))
    assert parse_gp_word(ctx, "0*1") == ((0, 1), (1, 1))
