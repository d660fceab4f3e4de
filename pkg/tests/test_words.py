import pytest
from hypothesis import given, strategies as st

from germkit.words import Token, WordSyntaxError, e, parse_word, render_word, s, sstar, u

tokens = st.one_of(
    st.builds(s, st.integers(-9, 9).filter(lambda m: m != 0)),
    st.builds(sstar, st.integers(-9, 9).filter(lambda m: m != 0)),
    st.builds(u, st.integers(-20, 20)),
    st.builds(e, st.integers(-9, 9).filter(lambda m: m != 0)),
)
words = st.lists(tokens, min_size=1, max_size=8).map(tuple)


def test_token_validation():
    assert str(s(3)) == "s(3)"
    assert str(sstar(-2)) == "s(-2)*"
    assert str(u(0)) == "u(0)"
    assert str(e(5)) == "e(5)"
    with pytest.raises(ValueError, match="zero modulus"):
        s(0)
    with pytest.raises(ValueError, match="zero modulus"):
        e(0)
    with pytest.raises(ValueError, match="unknown token kind"):
        Token("t", 1)


def test_parse_frozen():
    assert parse_word("s(2)* u(1) s(3)") == (sstar(2), u(1), s(3))
    assert parse_word("  e(4)\tu(-7) ") == (e(4), u(-7))
    assert parse_word("s(-5)*") == (sstar(-5),)


@pytest.mark.parametrize(
    "text, position, fragment",
    [
        ("", 0, "empty word"),
        ("   ", 0, "empty word"),
        ("s(2) x(3)", 5, "expected s(m), s(m)*, u(n) or e(m)"),
        ("u(1) e(3)*", 5, "'*' is only allowed after s"),
        ("e(0)", 0, "zero modulus"),
        ("u(1) s(0)*", 5, "zero modulus"),
        ("s(2)u(1)", 0, "expected"),
        ("s(+2)", 0, "expected"),
    ],
)
def test_parse_errors_carry_position(text, position, fragment):
    with pytest.raises(WordSyntaxError) as err:
        parse_word(text)
    assert err.value.position == position
    assert fragment in str(err.value)
    assert f"position {position}:" in str(err.value)


@given(words)
def test_render_parse_roundtrip(word):
    assert parse_word(render_word(word)) == word
