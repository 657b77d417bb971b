"""Suffix array construction (0-based) and Kasai LCP."""
from __future__ import annotations

from typing import Sequence


def _compact(s: Sequence[int]) -> tuple[list[int], int]:
    # Map letters to dense ranks so bucket arrays stay small.
    letters = sorted(set(s))
    if letters[-1] == len(letters) - 1:
        return list(s), len(letters) - 1
    rank = {c: i for i, c in enumerate(letters)}
    return [rank[c] for c in s], len(letters) - 1


def sa_naive(s: Sequence[int]) -> list[int]:
    s = list(s)
    return sorted(range(len(s)), key=lambda i: s[i:])


def sa_doubling(s: Sequence[int]) -> list[int]:
    """Prefix doubling with Python's sort; O(n log^2 n) but simple."""
    n = len(s)
    if n == 0:
        return []
    rank = list(_compact(s)[0])
    sa = list(range(n))
    k = 1
    while True:
        key = [(rank[i], rank[i + k] if i + k < n else -1) for i in range(n)]
        sa.sort(key=key.__getitem__)
        new = [0] * n
        for j in range(1, n):
            new[sa[j]] = new[sa[j - 1]] + (key[sa[j]] != key[sa[j - 1]])
        rank = new
        if rank[sa[-1]] == n - 1:
            return sa
        k <<= 1


def sa_is(s: Sequence[int], upper: int) -> list[int]:
    """Induced sorting over letters in [0, upper]."""
    n = len(s)
    if n == 0:
        return []
    if n == 1:
        return [0]
    if n == 2:
        return [0, 1] if s[0] < s[1] else [1, 0]
    if n < 40:
        return sa_naive(s)

    ls = [False] * n
    for i in range(n - 2, -1, -1):
        ls[i] = ls[i + 1] if s[i] == s[i + 1] else s[i] < s[i + 1]

    sum_l = [0] * (upper + 2)
    sum_s = [0] * (upper + 2)
    for i in range(n):
        if not ls[i]:
            sum_s[s[i]] += 1
        else:
            sum_l[s[i] + 1] += 1
    for i in range(upper + 1):
        sum_s[i] += sum_l[i]
        if i < upper:
            sum_l[i + 1] += sum_s[i]

    sa = [-1] * n

    def induce(lms: list[int]) -> None:
        for i in range(n):
            sa[i] = -1
        buf = sum_s[:]
        for d in lms:
            if d == n:
                continue
            c = s[d]
            sa[buf[c]] = d
            buf[c] += 1
        buf = sum_l[:]
        c = s[n - 1]
        sa[buf[c]] = n - 1
        buf[c] += 1
        for i in range(n):
            v = sa[i]
            if v >= 1 and not ls[v - 1]:
                c = s[v - 1]
                sa[buf[c]] = v - 1
                buf[c] += 1
        buf = sum_l[:]
        for i in range(n - 1, -1, -1):
            v = sa[i]
            if v >= 1 and ls[v - 1]:
                c = s[v - 1] + 1
                buf[c] -= 1
                sa[buf[c]] = v - 1

    lms_map = [-1] * (n + 1)
    lms = []
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            lms_map[i] = len(lms)
            lms.append(i)
    m = len(lms)
    induce(lms)

    if m:
        sorted_lms = [v for v in sa if lms_map[v] != -1]
        rec = [0] * m
        rec_upper = 0
        rec[lms_map[sorted_lms[0]]] = 0
        for i in range(1, m):
            l = sorted_lms[i - 1]
            r = sorted_lms[i]
            end_l = lms[lms_map[l] + 1] if lms_map[l] + 1 < m else n
            end_r = lms[lms_map[r] + 1] if lms_map[r] + 1 < m else n
            same = True
            if end_l - l != end_r - r:
                same = False
            else:
                while l < end_l:
                    if s[l] != s[r]:
                        break
                    l += 1
                    r += 1
                if l == n or s[l] != s[r]:
                    same = False
            if not same:
                rec_upper += 1
            rec[lms_map[sorted_lms[i]]] = rec_upper
        rec_sa = sa_is(rec, rec_upper)
        for i in range(m):
            sorted_lms[i] = lms[rec_sa[i]]
        induce(sorted_lms)
    return sa


def suffix_array(s: Sequence[int], method: str = "sais") -> list[int]:
    if not s:
        return []
    if method == "naive":
        return sa_naive(s)
    if method == "doubling":
        return sa_doubling(s)
    if method != "sais":
        raise ValueError(f"unknown suffix array method {method!r}")
    dense, upper = _compact(s)
    return sa_is(dense, upper)


def kasai(s: Sequence[int], sa: list[int]) -> list[int]:
    """lcp[k] = lcp of suffixes sa[k-1] and sa[k] (0-based ranks); lcp[0] = 0."""
    n = len(s)
    rank = [0] * n
    for k, p in enumerate(sa):
        rank[p] = k
    lcp = [0] * n
    h = 0
    for i in range(n):
        k = rank[i]
        if k == 0:
            h = 0
            continue
        j = sa[k - 1]
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        lcp[k] = h
        if h:
            h -= 1
    return lcp
