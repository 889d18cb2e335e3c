import pytest
from hypothesis import given, strategies as st

from micronuc.errors import MalformedToken, NotDoubleOccurrence
from micronuc.word import Word, canonical_words, canonicalize, parse_word, render_word


def test_parse_compact():
    w = parse_word("1212")
    assert w.symbols == (1, 2, 1, 2)
    assert w.n == 2


def test_parse_tokens():
    assert parse_word("10 3 10 3").symbols == (10, 3, 10, 3)
    assert parse_word("10,3, 10 ,3").symbols == (10, 3, 10, 3)


def test_parse_empty():
    assert parse_word("").n == 0
    assert parse_word("   ").symbols == ()


@pytest.mark.parametrize("text", ["121", "1", "1112", "1 2 3 1 2"])
def test_not_double_occurrence(text):
    with pytest.raises(NotDoubleOccurrence):
        parse_word(text)


@pytest.mark.parametrize("text", ["1a1a", "1 x 1 x", "-1 -1", "0 0"])
def test_malformed(text):
    with pytest.raises(MalformedToken):
        parse_word(text)


@pytest.mark.parametrize("given_,expected", [
    ((2, 1, 2, 1), (1, 2, 1, 2)),
    ((1, 2, 1, 2), (1, 2, 1, 2)),
    ((10, 3, 10, 3), (1, 2, 1, 2)),
])
def test_canonicalize(given_, expected):
    assert canonicalize(Word(given_)).symbols == expected


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 3), (3, 15), (4, 105)])
def test_canonical_word_census(n, count):
    words = list(canonical_words(n))
    assert len(words) == count
    assert len(set(words)) == count
    assert all(w.is_canonical() for w in words)


@st.composite
def words(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    labels = draw(st.lists(st.integers(1, 40), min_size=n, max_size=n, unique=True))
    symbols = draw(st.permutations(labels * 2))
    return Word(tuple(symbols))


@given(words())
def test_render_parse_round_trip(w):
    assert parse_word(render_word(w)) == w


@given(words())
def test_canonicalize_idempotent_and_pattern_preserving(w):
    c = canonicalize(w)
    assert canonicalize(c) == c
    same = lambda s: [(i, j) for i in range(len(s)) for j in range(len(s)) if s[i] == s[j]]
    assert same(c.symbols) == same(w.symbols)


def test_compact_form_is_one_symbol_per_digit():
    assert parse_word("1221").symbols == (1, 2, 2, 1)
    # a multi-digit label has to go through the token form
    assert render_word(Word((12, 3, 12, 3))) == "12 3 12 3"
