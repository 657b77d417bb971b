import bisect

import pytest
from hypothesis import given, strategies as st

from lyx.errors import InvalidArguments, InvalidRange
from lyx.small_rank import SmallSet, build_small_set


def test_examples():
    s = SmallSet([5, 1, 5, 3])
    assert s.elements == [1, 3, 5]
    assert SmallSet([]).rank(10) == 0
    assert SmallSet([7]).elements == [7]
    assert s.rank(4) == 2
    assert s.rank(1) == 0
    assert s.pred(1) is None
    assert s.succ(1) == 1
    assert s.succ(6) is None
    assert 3 in s and 4 not in s
    with pytest.raises(InvalidRange):
        s.select(3)
    with pytest.raises(InvalidArguments):
        SmallSet([-1])


def test_payload():
    s = build_small_set([4, 2], {4: "x", 2: "y"})
    assert s.payload_at(0) == "y" and s.payload_at(1) == "x"


@given(st.lists(st.integers(0, 128), max_size=64), st.integers(0, 130))
def test_against_sorted_array(values, x):
    s = SmallSet(values)
    ref = sorted(set(values))
    r = bisect.bisect_left(ref, x)
    assert s.rank(x) == r
    assert s.pred(x) == (ref[r - 1] if r else None)
    assert s.succ(x) == (ref[r] if r < len(ref) else None)
    if s.succ(x) is not None:
        assert s.select(s.rank(x)) == s.succ(x)
    assert s.rank(x) <= s.rank(x + 1)
    if ref:
        assert s.rank(ref[-1] + 1) == len(ref)
