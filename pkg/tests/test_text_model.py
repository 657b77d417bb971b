import itertools

import pytest
from hypothesis import given, strategies as st

from lyx.errors import InvalidInput, InvalidRange
from lyx.text_model import (
    SENTINEL, TOKENS, Fragment, extract, fragment, kf_length, load_text,
    parse_token_file, subfragment, suffix_kfragment, text_from_symbols,
)


def test_load_bytes():
    t = load_text(b"banana")
    assert t.n == 6 and t.sigma == 256
    assert t.symbols == tuple(b"banana")


def test_load_tokens_rank_remap():
    t = load_text([10, 3, 10], TOKENS)
    assert t.symbols == (1, 0, 1) and t.sigma == 2


def test_empty_input_rejected():
    with pytest.raises(InvalidInput):
        load_text(b"")
    with pytest.raises(InvalidInput):
        load_text([], TOKENS)


def test_bad_tokens_rejected():
    with pytest.raises(InvalidInput):
        load_text([1, -2], TOKENS)
    with pytest.raises(InvalidInput):
        load_text([1 << 40], TOKENS)
    with pytest.raises(InvalidInput):
        parse_token_file("1 2 x")
    with pytest.raises(InvalidInput):
        load_text(b"ab", "words")


@given(st.lists(st.integers(0, 10**9), min_size=1, max_size=60))
def test_token_remap_is_order_isomorphic(tokens):
    t = load_text(tokens, TOKENS)
    assert t.sigma == len(set(tokens))
    for i, j in itertools.product(range(len(tokens)), repeat=2):
        assert (tokens[i] < tokens[j]) == (t.symbols[i] < t.symbols[j])


def test_fragment():
    t = load_text(b"banana")
    f = fragment(t, 2, 4)
    assert isinstance(f, Fragment) and len(f) == 3
    assert bytes(extract(t, (f,))) == b"ana"
    assert bytes(extract(t, (fragment(t, 6, 6),))) == b"a"
    with pytest.raises(InvalidRange):
        fragment(t, 4, 2)
    with pytest.raises(InvalidRange):
        fragment(t, 0, 2)


def test_subfragment_examples():
    t = load_text(b"banana")
    w = ((1, 3), (4, 6))
    sub = subfragment(w, 3, 5)
    assert [bytes(extract(t, (p,))) for p in sub] == [b"n", b"an"]
    assert subfragment(w, 1, 6) == w
    t2 = load_text(b"abcd")
    sub = subfragment(((1, 2), (3, 4)), 2, 3)
    assert [bytes(extract(t2, (p,))) for p in sub] == [b"b", b"c"]
    with pytest.raises(InvalidRange):
        subfragment(w, 0, 2)


def test_extract_examples():
    t = load_text(b"banana")
    assert bytes(extract(t, ((1, 3), (4, 6)))) == b"banana"
    assert bytes(extract(t, ((2, 4),))) == b"ana"
    assert extract(t, ((1, 6),)) == t.symbols
    assert extract(t, ((1, 1), SENTINEL)) == (ord("b"), 256)


pieces = st.lists(st.tuples(st.integers(1, 12), st.integers(0, 4)), min_size=1, max_size=5)


@given(pieces, st.data())
def test_subfragment_matches_slice_and_composes(ps, data):
    t = text_from_symbols([i % 5 for i in range(20)], 5)
    w = tuple((a, a + d) for a, d in ps)
    L = kf_length(w)
    value = extract(t, w)
    for l in range(1, L + 1):
        for r in range(l, L + 1):
            assert extract(t, subfragment(w, l, r)) == value[l - 1:r]
    a = data.draw(st.integers(1, L))
    b = data.draw(st.integers(a, L))
    c = data.draw(st.integers(1, b - a + 1))
    d = data.draw(st.integers(c, b - a + 1))
    inner = subfragment(subfragment(w, a, b), c, d)
    assert extract(t, inner) == extract(t, subfragment(w, a + c - 1, a + d - 1))
    for k in range(L + 1):
        assert extract(t, suffix_kfragment(w, k)) == (value[L - k:] if k else ())
