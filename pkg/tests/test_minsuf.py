import random

import pytest
from hypothesis import given, strategies as st

from conftest import esa_of
from lyx.errors import InvalidArguments
from lyx.esa import ESA
from lyx.lyndon_core import min_suffix_log
from lyx.minsuf import (
    PAPER, TEST, BlockTable, DistinguishedTable, MinSufIndex, TierProfile, build_extender,
    decompose, f_eval, is_distinguished, make_profile, oid, oid_ranks, paper_profile, test_profile,
)
from lyx.oracle import is_order_isomorphic, naive_minsuf
from lyx.text_model import text_from_symbols


def test_asymptotic_profile_f_examples():
    p = paper_profile(1 << 20)
    assert f_eval(p, 1 << 20) == 1 << 16
    assert f_eval(p, 1 << 16) == 1 << 16
    assert f_eval(p, 16) == 16
    with pytest.raises(InvalidArguments):
        f_eval(p, 1)


def test_test_profile_f():
    p = test_profile()
    assert f_eval(p, 1 << 16) == 16
    assert f_eval(p, 1 << 10) == 8
    assert f_eval(p, 9) == 2


def test_profile_validation():
    with pytest.raises(InvalidArguments):
        TierProfile(TEST, 3, 8).validate()
    with pytest.raises(InvalidArguments):
        TierProfile(TEST, 8, 4).validate()
    with pytest.raises(InvalidArguments):
        TierProfile(PAPER, 2, 8).validate()  # f(x) = x just above the cutoff
    with pytest.raises(InvalidArguments):
        make_profile("fast", 10)
    assert make_profile("test", 100, tau=2, short_cutoff=2) == TierProfile(TEST, 2, 2)
    assert paper_profile(1 << 20).tau == 4


@pytest.mark.parametrize("kind", [PAPER, TEST])
def test_profile_law_in_declared_range(kind):
    p = paper_profile(1 << 20) if kind == PAPER else test_profile()
    lo, hi = p.law_range()
    for b in range(lo, hi + 1):
        x = 1 << b
        assert f_eval(p, f_eval(p, x)) <= b


def test_decompose_long_fragment_example():
    p = paper_profile(1 << 21)
    u, v1, v2 = decompose(p, 1, 1200000)
    assert v1 == (131073, 1179648) and v2 == (1179649, 1200000) and u == (1, 131072)
    assert (v1[1] - v1[0] + 1) == 1 << 20
    assert v1[1] % f_eval(p, 1200000) == 0


@given(st.integers(1, 5000), st.integers(32, 5000))
def test_decompose_postconditions_test_profile(l, L):
    p = test_profile()
    r = l + L - 1
    u, (a, b), (c, d) = decompose(p, l, r)
    F = f_eval(p, L)
    P = b - a + 1
    assert P & (P - 1) == 0 and b % F == 0
    assert c == b + 1 and d == r and 1 <= d - c + 1 <= F
    if u is None:
        assert a == l
    else:
        assert u == (l, a - 1) and a - l <= P


def test_decompose_rejects_short():
    with pytest.raises(InvalidArguments):
        decompose(test_profile(), 1, 1)


def test_extender_examples():
    e = esa_of("bananaz")
    x = build_extender(e, 1, 6)
    assert x.positions() == [6, 6]
    # candidates s + "z": the smallest is "ananaz", starting at 2
    assert x.query(7) == 2
    e = esa_of("bananaab")
    x = build_extender(e, 1, 6)
    assert x.positions() == [7]
    assert x.query(7) == 7
    assert x.query(8) == 6
    with pytest.raises(InvalidArguments):
        x.query(6)
    assert len(build_extender(esa_of("banana"), 1, 6).R) == 0


def test_extender_rank_claim_small():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 30)
        s = tuple(rng.randrange(2) for _ in range(n))
        e = ESA(text_from_symbols(s, 2))
        for l in range(1, n):
            for r in range(l, n):
                x = build_extender(e, l, r)
                powers = x.lam.power_fragments()
                for r2 in range(r + 1, n + 1):
                    tail = s[r:r2]
                    want = sum(1 for a, b in powers
                               if (s[a - 1:b] * (len(tail) // (b - a + 1) + 2)) < tail)
                    assert x.R.rank(r2 << 7) == want


def test_distinguished_count_matches_enumeration():
    n = 64
    p = test_profile()
    e = esa_of(bytes(random.Random(1).randrange(97, 99) for _ in range(n)))
    d = DistinguishedTable(e, p)
    want = {(1 << q, r) for q in range(7) for r in range(1 << q, n + 1) if is_distinguished(p, 1 << q, r)}
    got = {key for key, _ in d.items()}
    assert got == want
    for (L, r), x in d.items():
        assert d.get(L, r) is x and (x.start, x.end) == (r - L + 1, r)


def test_paper_profile_small_text_has_no_tables():
    e = esa_of("abracadabra")
    d = DistinguishedTable(e, paper_profile(11))
    assert len(d) == 0


def test_oid_examples():
    assert oid(b"ba") == oid(b"ca") != oid(b"ab")
    assert oid(b"banana") == oid(b"xazaza")
    assert oid_ranks(b"banana") == (1, 0, 2, 0, 2, 0)
    with pytest.raises(InvalidArguments):
        oid(b"")
    with pytest.raises(InvalidArguments):
        oid(b"abc", 2)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=8), st.lists(st.integers(0, 5), min_size=1, max_size=8))
def test_oid_iff_order_isomorphic(x, y):
    assert (oid(x, 8) == oid(y, 8)) == is_order_isomorphic(x, y)


def test_block_table_examples():
    e = esa_of("abababab")
    b = BlockTable(e, 2)
    assert b.distinct() == 2  # "abab" four times... and the short tail block "ab"
    for n in (17, 50, 333):
        b = BlockTable(esa_of("a" * n), 4)
        full = {k for i, k in enumerate(b.block_oid) if (i + 2) * 4 <= n}
        assert len(full) == 1
    rng = random.Random(2)
    s = bytes(rng.choice(b"abc") for _ in range(60))
    e = esa_of(s)
    b = BlockTable(e, 4)
    for l in range(1, 61):
        for r in range(l, min(60, l + 3) + 1):
            assert b.query(l, r) == min_suffix_log(e, l, r)


def test_tiers_all_fragments_random_texts():
    rng = random.Random(7)
    for sigma in (2, 4, 26):
        s = [rng.randrange(sigma) for _ in range(256)]
        e = ESA(text_from_symbols(s, sigma))
        ms = MinSufIndex(e, test_profile())
        for l in range(1, 257):
            for r in range(l, 257):
                want = l - 1 + naive_minsuf(s[l - 1:r])
                assert ms.minsuf(l, r) == want
                assert ms.minsuf_logstar(l, r) == want
                if (l + r) % 5 == 0:
                    assert ms.minsuf_log(l, r) == want


def test_single_letter_and_short_dispatch():
    e = esa_of("mississippi")
    ms = MinSufIndex(e, test_profile())
    for i in range(1, 12):
        assert ms.minsuf(i, i) == i
    for l in range(1, 12):
        for r in range(l, min(11, l + 7) + 1):
            assert ms.minsuf_logstar(l, r) == ms.minsuf_log(l, r)


def test_logstar_depth_is_small():
    rng = random.Random(4)
    n = 4096
    s = [rng.randrange(2) for _ in range(n)]
    e = ESA(text_from_symbols(s, 2))
    p = test_profile()
    ms = MinSufIndex(e, p)

    def iterations(L):
        # how many times f can be applied before dropping to the cutoff
        k = 0
        while L > p.short_cutoff:
            L = f_eval(p, L)
            k += 1
        return k

    for _ in range(3000):
        l = rng.randint(1, n)
        r = rng.randint(l, n)
        want = ms.minsuf_log(l, r)
        assert ms.minsuf_logstar(l, r) == want
        assert ms.last_depth <= iterations(r - l + 1) + 1


def test_paper_profile_table_space():
    rng = random.Random(8)
    n = (1 << 16) + 4096
    s = [rng.randrange(2) for _ in range(n)]
    e = ESA(text_from_symbols(s, 2))
    d = DistinguishedTable(e, paper_profile(n))
    per_letter = d.stored_entries() / n
    # measured about 9.5 entries per text position (3.3 extenders each holding Lambda and R)
    assert per_letter <= 12
    ms = MinSufIndex(e, paper_profile(n), dist=d)
    for _ in range(300):
        if rng.random() < 0.5:
            l = rng.randint(1, n - 65537)
            r = rng.randint(l + 65536, n)
        else:
            l = rng.randint(1, n)
            r = rng.randint(l, n)
        assert ms.minsuf(l, r) == ms.minsuf_log(l, r)
