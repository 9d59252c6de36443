import pytest
from hypothesis import given, strategies as st

from wreathkit.exceptions import ParseError
from wreathkit.grig import (U0, V0, free_involutive_reduce, presentation, sigma_power, sigma_sub, u_word,
                            v_word)

gwords = st.text(alphabet="abcd", max_size=12)


def test_sigma_on_letters():
    assert [sigma_sub(x) for x in "abcd"] == ["aca", "d", "b", "c"]
    assert sigma_sub("") == ""


def test_base_words():
    assert u_word(0) == "adadadad"
    assert u_word(1) == "acac" * 4
    assert len(v_word(0)) == 24 and v_word(0) == V0


def test_u1_counted_by_hand():
    # a -> aca, d -> c, so ad -> acac
    assert sigma_sub("ad") == "acac"


@pytest.mark.parametrize("n", range(11))
def test_lengths(n):
    assert len(u_word(n)) == 2 ** (n + 3)
    assert len(v_word(n)) == 3 * 2 ** (n + 3)


def test_length_recursion_via_letter_counts():
    # |sigma(w)| = 3 #a + #b + #c + #d; the a-count is preserved and the
    # others fill the rest, which halves the a-density each time
    for n in range(8):
        w = u_word(n)
        assert len(sigma_sub(w)) == 3 * w.count("a") + len(w) - w.count("a")


@pytest.mark.parametrize("n", range(6))
def test_words_are_freely_reduced(n):
    assert free_involutive_reduce(u_word(n)) == u_word(n)
    assert free_involutive_reduce(v_word(n)) == v_word(n)


@given(gwords, gwords)
def test_sigma_is_a_monoid_morphism(x, y):
    assert sigma_sub(x + y) == sigma_sub(x) + sigma_sub(y)


@given(gwords, st.integers(0, 3), st.integers(0, 3))
def test_sigma_powers_compose(w, m, n):
    assert sigma_power(sigma_power(w, m), n) == sigma_power(w, m + n)


def test_presentation_counts():
    for n in range(6):
        p = presentation(n)
        assert len(p.rels) == 6 + 2 * n
        assert p.gens == ("a", "b", "c", "d")


def test_presentation_text():
    p = presentation(0)
    assert p.to_text() == f"<a,b,c,d | a^2, b^2, c^2, d^2, bcd, {U0}>"
    assert p.relator_text(p.rels[5]) == U0


def test_presentation_contains_words_verbatim():
    p = presentation(2)
    texts = [p.relator_text(r) for r in p.rels]
    assert texts[5:8] == [u_word(0), u_word(1), u_word(2)]
    assert texts[8:] == [v_word(0), v_word(1)]


def test_free_involutive_reduce():
    assert free_involutive_reduce("aab") == "b"
    assert free_involutive_reduce("abab") == "abab"
    assert free_involutive_reduce("adda") == ""


@given(gwords)
def test_free_reduction_is_idempotent(w):
    r = free_involutive_reduce(w)
    assert free_involutive_reduce(r) == r
    assert all(x != y for x, y in zip(r, r[1:]))


def test_bad_letters():
    with pytest.raises(ParseError) as exc:
        sigma_sub("abxd")
    assert exc.value.position == 2
    with pytest.raises(ValueError):
        presentation(-1)
