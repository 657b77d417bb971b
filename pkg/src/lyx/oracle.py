"""Brute-force reference answers computed on materialized strings only.

Nothing here touches the index; these functions exist so that every fast
path can be checked against something obviously correct.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import inf
from typing import Any, Sequence

# Marker for the sentinel letter inside materialized strings.
DOLLAR = inf


@dataclass
class OracleReport:
    query: Any
    engine: Any
    oracle: Any

    @property
    def match(self) -> bool:
        return self.engine == self.oracle

    def __str__(self) -> str:
        flag = "ok" if self.match else "MISMATCH"
        return f"{flag}: {self.query} engine={self.engine!r} oracle={self.oracle!r}"


def naive_minsuf(s: Sequence) -> int:
    """1-based start of the smallest non-empty suffix."""
    if not isinstance(s, bytes):
        s = tuple(s)
    return min(range(len(s)), key=lambda i: s[i:]) + 1


def naive_minsuf_pair(v: Sequence, w: Sequence) -> int:
    """Length of the suffix s of v (possibly empty) minimizing s + w."""
    v = tuple(v)
    w = tuple(w)
    n = len(v)
    best = min(range(n + 1), key=lambda i: v[i:] + w)
    return n - best


def naive_max_suf_rev(u: Sequence, v: Sequence) -> int:
    """Length of the suffix s of u for which s+v is largest in reversed order.

    Via the sentinel: the largest in reversed order is the smallest once $ is
    appended.
    """
    return naive_minsuf_pair(u, tuple(v) + (DOLLAR,))


def brute_min_rotation(s: Sequence) -> int:
    s = tuple(s)
    return min(range(len(s)), key=lambda i: s[i:] + s[:i])


def brute_max_rotation(s: Sequence) -> int:
    s = tuple(s)
    n = len(s)
    best = 0
    for i in range(1, n):
        if s[i:] + s[:i] > s[best:] + s[:best]:
            best = i
    return best


def booth_min_rotation(s: Sequence) -> int:
    """Smallest left shift giving the least rotation (Booth's failure-function scan)."""
    s = tuple(s)
    n = len(s)
    ss = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = f[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n if n else 0


def duval(s: Sequence) -> list[tuple[tuple, int]]:
    """Lyndon factorization as (word, exponent) pairs."""
    s = tuple(s)
    n = len(s)
    words: list[tuple] = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            words.append(s[i:i + j - k])
            i += j - k
    out: list[tuple[tuple, int]] = []
    for w in words:
        if out and out[-1][0] == w:
            out[-1] = (w, out[-1][1] + 1)
        else:
            out.append((w, 1))
    return out


def naive_significant(s: Sequence) -> list[int]:
    """Decreasing lengths |s_lambda| > ... > |s_m| > 0 of the significant suffixes."""
    s = tuple(s)
    fac = duval(s)
    m = len(fac)
    lengths = [0] * (m + 1)  # lengths[i] = |s_{i+1}| with 0-based factor index i
    for i in range(m - 1, -1, -1):
        w, p = fac[i]
        lengths[i] = lengths[i + 1] + p * len(w)
    lam = m - 1
    n = len(s)
    while lam >= 0:
        w = fac[lam][0]
        nxt = lengths[lam + 1]
        if s[n - nxt:] != w[:nxt]:
            break
        lam -= 1
    return [lengths[i] for i in range(lam + 1, m + 1)]


def naive_rank(A: Sequence[Sequence], w: Sequence) -> int:
    """Strictly-smaller count over the distinct values of A."""
    w = tuple(w)
    return sum(1 for a in set(tuple(x) for x in A) if a < w)


def is_order_isomorphic(x: Sequence, y: Sequence) -> bool:
    if len(x) != len(y):
        return False
    n = len(x)
    for i in range(n):
        for j in range(n):
            if (x[i] < x[j]) != (y[i] < y[j]):
                return False
    return True


def naive_cyclic_equal(a: Sequence, b: Sequence) -> bool:
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b):
        return False
    return any(a[i:] + a[:i] == b for i in range(len(a))) if a else True


def naive_is_lyndon(s: Sequence) -> bool:
    s = tuple(s)
    return all(s[i:] > s for i in range(1, len(s)))
