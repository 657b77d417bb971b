import random

from hypothesis import given, strategies as st

from lyx.suffix_array import kasai, sa_doubling, sa_is, sa_naive, suffix_array


def test_examples():
    assert [p + 1 for p in suffix_array(b"banana")] == [6, 4, 2, 1, 5, 3]
    assert [p + 1 for p in suffix_array(b"aaa")] == [3, 2, 1]
    assert suffix_array(b"z") == [0]


@given(st.lists(st.integers(0, 3), min_size=1, max_size=300))
def test_constructions_agree(s):
    want = sa_naive(s)
    assert sa_is(s, 4) == want
    assert sa_doubling(s) == want
    assert suffix_array(s, "sais") == want


@given(st.lists(st.integers(0, 2), min_size=1, max_size=120))
def test_kasai(s):
    sa = sa_naive(s)
    lcp = kasai(s, sa)
    assert lcp[0] == 0
    for k in range(1, len(sa)):
        a, b = s[sa[k - 1]:], s[sa[k]:]
        h = 0
        while h < min(len(a), len(b)) and a[h] == b[h]:
            h += 1
        assert lcp[k] == h


def test_large_periodic_input():
    s = [0, 1] * 5000 + [0]
    assert sa_is(s, 2) == sa_doubling(s)


def test_constructions_agree_up_to_2000():
    rng = random.Random(11)
    for n, sigma in ((2000, 2), (2000, 4), (1500, 26), (2000, 1000), (1000, 1)):
        s = [rng.randrange(sigma) for _ in range(n)]
        want = sa_naive(s)
        assert sa_is(s, sigma) == want
        assert sa_doubling(s) == want
