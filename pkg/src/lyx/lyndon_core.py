"""Lyndon factorization and significant suffixes.

For a fragment v the significant suffixes are the few suffixes s of v (at
most log2|v| + 2 of them, including the empty one) that can be the suffix
part of MinSuf(v, w) = min{ s w : s suffix of v } for some continuation w.
They are stored as an ascending list of lengths ``asc`` with ``asc[0] == 0``.
Consecutive differences ``asc[j+1] - asc[j]`` are the lengths of the
suffix-aligned power fragments used by the rank characterization: for
``w`` with rank j among those powers, MinSuf(v, w) uses the suffix of length
``asc[j]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidArguments, InvalidInput
from .esa import ESA, LESS
from .text_model import kf_length


@dataclass(frozen=True)
class LyndonFactorization:
    factors: tuple  # ((word, exponent), ...); word is a tuple of letters or a k-fragment

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def shape(self) -> list[tuple[int, int]]:
        """(word length, exponent) pairs."""
        return [(_word_len(w), p) for w, p in self.factors]


def _word_len(w) -> int:
    if w and isinstance(w[0], tuple):
        return kf_length(w)
    return len(w)


def duval_factorize(s: Sequence) -> LyndonFactorization:
    s = tuple(s)
    n = len(s)
    if n == 0:
        raise InvalidInput("empty string has no Lyndon factorization")
    out: list[tuple[tuple, int]] = []
    i = 0
    while i < n:
        # s[i..j) is a prefix of a power of the Lyndon word s[i..i+period)
        j = i + 1
        k = i
        while j < n:
            a = s[k]
            b = s[j]
            if a < b:
                k = i
            elif a == b:
                k += 1
            else:
                break
            j += 1
        period = j - k
        reps = (j - i) // period
        out.append((s[i:i + period], reps))
        i += reps * period
    return LyndonFactorization(tuple(out))


@dataclass(frozen=True)
class SignificantSuffixes:
    start: int
    end: int
    asc: tuple = field(repr=False)

    @property
    def suffix_lengths(self) -> list[int]:
        """Decreasing lengths, ending with 0."""
        return list(reversed(self.asc))

    @property
    def xp_lengths(self) -> list[int]:
        """Lengths of the power fragments, longest first."""
        a = self.asc
        return [a[j + 1] - a[j] for j in range(len(a) - 2, -1, -1)]

    def power_fragments(self) -> list[tuple[int, int]]:
        """Suffix-aligned power fragments in the order of ``asc`` gaps (shortest suffix first)."""
        a = self.asc
        r = self.end
        return [(r - (a[j + 1] - a[j]) + 1, r) for j in range(len(a) - 1)]

    def __len__(self) -> int:
        return len(self.asc)


# ----------------------------------------------------------------------
# reversed-order maximal suffix of u·v, for adjacent u = T[l..r], v = T[r+1..r2]

def max_suf_rev_len(e: ESA, l: int, r: int, r2: int) -> int:
    """Length of the suffix s of T[l..r] with s·T[r+1..r2] largest in reversed order.

    Equivalently s·v$ is the smallest among all suffixes of u (empty one
    included) followed by v$.  Requires |u| <= |v|.
    """
    k = e.rmin(l, r)
    base = r - k + 1
    # candidates as lengths of s
    best = 0
    cmp = e.compare_suffixes_to_dollar
    a = r - base + 1
    if cmp(a, r + 1, r2) < 0:
        best = base
    # T[k..r] extended to the longest power of itself that suffixes u
    if a - base >= l:
        h = e.lce_rev(r, r - base)
        room = r - base - l + 1
        if h > room:
            h = room
        p = (base + h) // base
        if p > 1:
            c = p * base
            if cmp(r - c + 1, r - best + 1, r2) < 0:
                best = c
    if k > l:
        k2 = e.rmin(l, k - 1)
        step = k - k2
        j = k - 1 - step
        h = 0
        if j >= l:
            h = e.lce_rev(k - 1, j)
            room = j - l + 1
            if h > room:
                h = room
        p = (step + h) // step
        c = base + p * step
        if cmp(r - c + 1, r - best + 1, r2) < 0:
            best = c
    return best


def max_suf_rev(e: ESA, u, v) -> int:
    """Fragment-level wrapper; returns |s|."""
    l, r = u
    l2, r2 = v
    if l2 != r + 1 or l > r or l2 > r2:
        raise InvalidArguments("u and v must be adjacent non-empty fragments")
    if r - l > r2 - l2:
        raise InvalidArguments("|u| must not exceed |v|")
    return max_suf_rev_len(e, l, r, r2)


# ----------------------------------------------------------------------
# significant suffixes

def extend_significant(e: ESA, asc: list, ul: int, ur: int, r: int) -> None:
    """Turn the ascending lengths for v = T[ur+1..r] into those for T[ul..r], in place.

    Requires |u| <= |v| where u = T[ul..ur].
    """
    sp = max_suf_rev_len(e, ul, ur, r) + (r - ur)
    top = asc[-1]
    if sp == top:
        return
    if e.compare_suffixes_to_dollar(r - top + 1, r - sp + 1, r) <= 0:
        return
    start = r - sp + 1
    lce = e.lce
    while True:
        si = asc[-1]
        if si == 0 or lce(start, r - si + 1) >= si:
            break
        asc.pop()
    if si:
        p = si - asc[-2]
        if lce(start, start + p) >= sp - p:
            asc.pop()
    asc.append(sp)


def significant_lengths(e: ESA, l: int, r: int) -> list:
    """Ascending significant-suffix lengths of T[l..r]."""
    L = r - l + 1
    chain = []
    while L > 1:
        chain.append(L)
        L = (L + 1) >> 1
    asc = [0, 1]
    cur = 1
    for L in reversed(chain):
        extend_significant(e, asc, r - L + 1, r - cur, r)
        cur = L
    return asc


def significant_suffixes(e: ESA, v) -> SignificantSuffixes:
    l, r = v
    if l > r:
        raise InvalidInput("empty fragment")
    return SignificantSuffixes(l, r, tuple(significant_lengths(e, l, r)))


def context_rank(e: ESA, asc: Sequence[int], r: int, w) -> int:
    """Number of power fragments x with x^inf smaller than the k-fragment w."""
    rank = 0
    li = e.lcp_infinite
    for j in range(len(asc) - 1):
        xl = asc[j + 1] - asc[j]
        if li((r - xl + 1, r), w)[1] == LESS:
            rank += 1
        else:
            break
    return rank


def minsuf_with_context(e: ESA, lam: SignificantSuffixes, w) -> int:
    """Length of the suffix s of v with s·w = MinSuf(v, w), by scanning the powers."""
    return lam.asc[context_rank(e, lam.asc, lam.end, tuple(w))]


def min_suffix_log(e: ESA, l: int, r: int) -> int:
    """Start of the minimal suffix of T[l..r] from the significant suffixes of T[l..r-1]."""
    if l == r:
        return l
    asc = significant_lengths(e, l, r - 1)
    cmp = e.compare_suffixes_to
    best = r
    for s in asc:
        a = r - s
        if a != best and cmp(a, best, r) < 0:
            best = a
    return best


def is_lyndon(e: ESA, x) -> bool:
    l, r = x
    return min_suffix_log(e, l, r) == l
