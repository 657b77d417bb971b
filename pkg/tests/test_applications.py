import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import engine_of, random_kfragment
from lyx.applications import (
    canonical_rotation, cyclic_equal, cyclic_fingerprint, lyndon_factorize_fragment,
    max_rotation, min_rotation, rotate,
)
from lyx.engine import Engine
from lyx.errors import LyxError
from lyx.lyndon_core import duval_factorize
from lyx.minsuf import test_profile
from lyx.oracle import booth_min_rotation, brute_max_rotation, naive_cyclic_equal
from lyx.text_model import extract, text_from_symbols


def test_rotation_examples():
    eng = engine_of("banana")
    assert min_rotation(eng, (1, 6)).shift == 5
    assert min_rotation(eng, (1, 6)).canonical_start == 6
    assert max_rotation(eng, (1, 6)).shift == 2
    assert bytes(extract(eng.text, canonical_rotation(eng, (1, 6)))) == b"abanan"
    aaa = engine_of("aaa")
    assert min_rotation(aaa, (1, 3)).shift == 0 and max_rotation(aaa, (1, 3)).shift == 0
    ab = engine_of("ab")
    assert min_rotation(ab, (1, 2)).shift == 0
    assert max_rotation(ab, (1, 2)).shift == 1
    assert min_rotation(engine_of("ba"), (1, 2)).shift == 1


def test_rotate_builds_the_rotation():
    eng = engine_of("abcdef")
    for v in (((1, 6),), ((1, 2), (4, 6)), ((3, 3), (1, 2), (5, 6))):
        s = extract(eng.text, v)
        for k in range(len(s)):
            assert extract(eng.text, rotate(v, k)) == s[k:] + s[:k]


def test_cyclic_equal_examples():
    eng = engine_of("anabanaa")
    # "anab", "bana", "aban" are rotations of each other, "anaa" is not
    assert cyclic_equal(eng, (1, 4), (4, 7))
    assert cyclic_equal(eng, (3, 6), (1, 4))
    assert not cyclic_equal(eng, (1, 4), (5, 8))
    assert not cyclic_equal(eng, (1, 4), (1, 3))
    assert cyclic_fingerprint(eng, (1, 4)) == cyclic_fingerprint(eng, (4, 7))
    assert cyclic_fingerprint(eng, (1, 4)).length == 4
    assert len(cyclic_fingerprint(eng, (1, 4)).hex()) == 16


def test_cyclic_equal_is_an_equivalence_relation():
    rng = random.Random(1)
    s = [rng.randrange(2) for _ in range(40)]
    eng = Engine(text_from_symbols(s, 2), test_profile())
    frags = [(l, l + 4) for l in range(1, 37)]
    rel = {(a, b): cyclic_equal(eng, a, b) for a in frags for b in frags}
    for a in frags:
        assert rel[a, a]
        for b in frags:
            assert rel[a, b] == rel[b, a]
            for c in frags:
                if rel[a, b] and rel[b, c]:
                    assert rel[a, c]


def test_lyndon_examples():
    eng = engine_of("banana")
    assert lyndon_factorize_fragment(eng, (1, 6)).shape() == [(1, 1), (2, 2), (1, 1)]
    assert lyndon_factorize_fragment(engine_of("aaaa"), (1, 4)).shape() == [(1, 4)]
    two = engine_of("banana")
    lf = lyndon_factorize_fragment(two, ((1, 2), (3, 6)))
    assert [(bytes(extract(two.text, w)), p) for w, p in lf.factors] == [(b"b", 1), (b"an", 2), (b"a", 1)]


def test_lyndon_uses_one_generalized_query_per_factor():
    rng = random.Random(2)
    s = [rng.randrange(2) for _ in range(200)]
    eng = Engine(text_from_symbols(s, 2), test_profile())
    for _ in range(300):
        v = random_kfragment(rng, 200, 3, 50)
        before = eng.gen_calls
        lf = lyndon_factorize_fragment(eng, v)
        assert eng.gen_calls - before <= len(lf.factors)


def test_invalid_kfragments_raise():
    eng = engine_of("banana")
    for bad in (((0, 2),), ((3, 2),), ((1, 7),), ()):
        with pytest.raises(LyxError):
            min_rotation(eng, bad)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=30), st.data())
def test_rotations_match_brute_force(s, data):
    eng = Engine(text_from_symbols(s, 3), test_profile(2, 2))
    n = len(s)
    v = tuple(
        (a, data.draw(st.integers(a, min(n, a + 12))))
        for a in data.draw(st.lists(st.integers(1, n), min_size=1, max_size=3))
    )
    w = extract(eng.text, v)
    comp = tuple(2 - c for c in w)
    assert min_rotation(eng, v).shift == booth_min_rotation(w)
    assert max_rotation(eng, v).shift == booth_min_rotation(comp) == brute_max_rotation(w)
    lf = lyndon_factorize_fragment(eng, v)
    assert [(extract(eng.text, x), p) for x, p in lf.factors] == list(duval_factorize(w).factors)


def test_fingerprints_on_short_kfragments():
    rng = random.Random(3)
    s = [rng.randrange(2) for _ in range(300)]
    eng = Engine(text_from_symbols(s, 2), test_profile())
    pool = [random_kfragment(rng, 300, 3, 64) for _ in range(300)]
    # add rotations so that equal classes actually occur
    pool += [rotate(v, rng.randrange(len(extract(eng.text, v)))) for v in pool[:100]]
    fps = [cyclic_fingerprint(eng, v) for v in pool]
    vals = [extract(eng.text, v) for v in pool]
    for i, j in itertools.combinations(range(len(pool)), 2):
        if i % 3 and j % 5:
            continue
        want = naive_cyclic_equal(vals[i], vals[j])
        assert (fps[i] == fps[j]) == want
        assert cyclic_equal(eng, pool[i], pool[j]) == want


def test_fingerprint_depends_on_seed_only():
    a = engine_of("mississippi", seed=5)
    b = engine_of("mississippi", seed=5)
    c = engine_of("mississippi", seed=6)
    assert cyclic_fingerprint(a, (2, 5)) == cyclic_fingerprint(b, (2, 5))
    assert cyclic_fingerprint(a, (2, 5)) != cyclic_fingerprint(c, (2, 5))
