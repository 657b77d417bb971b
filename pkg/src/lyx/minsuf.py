"""Minimal suffix queries in three tiers.

* tier 1 (``minsuf_log``): significant suffixes of v minus its last letter,
  O(log |v|) primitive calls;
* tier 2 (``minsuf_logstar``): repeated three-way decomposition
  v = u v' v'' where v' is a precomputed power-of-two fragment whose end
  is aligned to f(|v|);
* tier 3 (``minsuf``): tier 2 with short fragments answered from tables
  shared by order-isomorphic blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import log2

from .errors import InvalidArguments
from .esa import ESA, LESS
from .lyndon_core import (
    SignificantSuffixes,
    extend_significant,
    max_suf_rev_len,
    min_suffix_log,
)
from .small_rank import SmallSet

PAPER = "paper"
TEST = "test"

# R(v) stores position * _RSHIFT + index so equal positions stay distinct.
_RBITS = 7


@dataclass(frozen=True)
class TierProfile:
    kind: str
    tau: int
    short_cutoff: int

    def f(self, x: int) -> int:
        return f_eval(self, x)

    def law_range(self) -> tuple[int, int]:
        """Powers-of-two range (exponents, inclusive) where f(f(x)) <= log2 x is declared."""
        if self.kind == PAPER:
            # the iterated function only drops below log2 x far beyond 2^63
            return (2, 3)
        return (2, 63)

    def validate(self) -> None:
        if self.tau < 1 or self.tau & (self.tau - 1):
            raise InvalidArguments(f"tau must be a power of two, got {self.tau}")
        if self.short_cutoff < max(self.tau, 2):
            raise InvalidArguments("short_cutoff must be at least max(tau, 2)")
        x = self.short_cutoff + 1
        if f_eval(self, x) >= x:
            raise InvalidArguments("f(x) < x must hold above short_cutoff")
        for b in range(x.bit_length() + 1, 65):
            x = 1 << (b - 1)
            if f_eval(self, x) >= x:
                raise InvalidArguments(f"f(x) < x fails at 2^{b - 1}")


def f_eval(profile: TierProfile, x: int) -> int:
    """Power-of-two shrinking function; defined for x >= 2."""
    if x < 2:
        raise InvalidArguments(f"f is defined for x >= 2, got {x}")
    q = x.bit_length() - 1          # floor(log2 x)
    lq = q.bit_length() - 1         # floor(log2 log2 x)
    if profile.kind == PAPER:
        return 1 << (lq * lq)
    return 1 << lq


def _f_len(profile: TierProfile, x: int) -> int:
    # length-1 fragments are aligned anywhere
    return 1 if x < 2 else f_eval(profile, x)


def paper_profile(n: int) -> TierProfile:
    """f(x) = 2^(floor(loglog x)^2), short cutoff 2^16, tau a power of two below log n / loglog n."""
    ln = log2(max(n, 4))
    t = max(2.0, ln / max(1.0, log2(ln)))
    tau = 1 << (int(t).bit_length() - 1)
    return TierProfile(PAPER, tau, 1 << 16)


def test_profile(tau: int = 4, short_cutoff: int = 8) -> TierProfile:
    """Scaled profile f(x) = 2^floor(loglog x) that reaches every code path on small texts."""
    p = TierProfile(TEST, tau, short_cutoff)
    p.validate()
    return p


test_profile.__test__ = False  # not a pytest test despite the name


def make_profile(kind: str, n: int, tau: int | None = None, short_cutoff: int | None = None) -> TierProfile:
    if kind == PAPER:
        base = paper_profile(n)
    elif kind == TEST:
        base = TierProfile(TEST, 4, 8)
    else:
        raise InvalidArguments(f"unknown profile {kind!r}")
    p = TierProfile(kind, tau if tau is not None else base.tau,
                    short_cutoff if short_cutoff is not None else base.short_cutoff)
    p.validate()
    return p


def decompose(profile: TierProfile, l: int, r: int):
    """Split T[l..r] into u (None when empty), v' and v''.

    v'' = T[r'+1..r] with r' the largest multiple of f(|v|) below r, and v'
    the longest power-of-two suffix of T[l..r'].
    """
    L = r - l + 1
    if L < 2:
        raise InvalidArguments("decomposition needs |v| > f(|v|)")
    F = f_eval(profile, L)
    if L <= F:
        raise InvalidArguments("decomposition needs |v| > f(|v|)")
    r1 = ((r - 1) // F) * F
    assert r1 >= l
    P = 1 << ((r1 - l + 1).bit_length() - 1)
    vl = r1 - P + 1
    u = (l, vl - 1) if vl > l else None
    return u, (vl, r1), (r1 + 1, r)


# ----------------------------------------------------------------------
# per-fragment extenders

class MinSufExtender:
    """Answers MinSuf(v, T[r+1..r']) for a fixed v = T[start..end] and any r' > end."""

    __slots__ = ("start", "end", "asc", "R")

    def __init__(self, start: int, end: int, asc: tuple, R: SmallSet):
        self.start = start
        self.end = end
        self.asc = asc
        self.R = R

    @property
    def lam(self) -> SignificantSuffixes:
        return SignificantSuffixes(self.start, self.end, self.asc)

    def suffix_len(self, r2: int) -> int:
        return self.asc[self.R.rank(r2 << _RBITS)]

    def query(self, r2: int) -> int:
        """Start of MinSuf(v, T[end+1..r2]) in T."""
        if r2 <= self.end:
            raise InvalidArguments("r' must exceed the end of v")
        return self.end - self.asc[self.R.rank(r2 << _RBITS)] + 1

    def positions(self) -> list[int]:
        return [x >> _RBITS for x in self.R.elements]


def _r_set(e: ESA, asc, r: int, cache: dict | None = None) -> SmallSet:
    n = e.n
    vals = []
    if r < n:
        tail = ((r + 1, n),)
        li = e.lcp_infinite
        for j in range(len(asc) - 1):
            xl = asc[j + 1] - asc[j]
            hit = cache.get(xl) if cache is not None else None
            if hit is None:
                h, order = li((r - xl + 1, r), tail)
                hit = r + h if order == LESS else 0
                if cache is not None:
                    cache[xl] = hit
            if hit:
                vals.append((hit << _RBITS) | j)
    return SmallSet(vals)


def build_extender(e: ESA, l: int, r: int, asc=None) -> MinSufExtender:
    if asc is None:
        from .lyndon_core import significant_lengths
        asc = significant_lengths(e, l, r)
    asc = tuple(asc)
    return MinSufExtender(l, r, asc, _r_set(e, asc, r))


class DistinguishedTable:
    """Extenders for every fragment of length 2^q ending at a multiple of f(2^q).

    ``ext[q][r // F_q]`` holds the extender of T[r - 2^q + 1..r].
    """

    def __init__(self, e: ESA, profile: TierProfile):
        self.profile = profile
        n = e.n
        self.n = n
        qmax = n.bit_length() - 1
        self.F = [_f_len(profile, 1 << q) for q in range(qmax + 1)]
        self.ext: list[list] = [[None] * (n // F + 1) for F in self.F]
        if n <= profile.short_cutoff:
            # every query is answered without decomposition
            self.qmax = -1
            return
        self.qmax = qmax
        F = self.F
        for r in range(1, n + 1):
            cache: dict = {}
            asc = [0, 1]
            self.ext[0][r // F[0]] = MinSufExtender(r, r, (0, 1), _r_set(e, asc, r, cache))
            q = 1
            while q <= qmax and r % F[q] == 0 and (1 << q) <= r:
                half = 1 << (q - 1)
                asc = list(asc)
                extend_significant(e, asc, r - 2 * half + 1, r - half, r)
                t = tuple(asc)
                self.ext[q][r // F[q]] = MinSufExtender(r - 2 * half + 1, r, t, _r_set(e, t, r, cache))
                q += 1

    def get(self, length: int, end: int) -> MinSufExtender:
        q = length.bit_length() - 1
        return self.ext[q][end // self.F[q]]

    def items(self):
        for q, row in enumerate(self.ext):
            for x in row:
                if x is not None:
                    yield (1 << q, x.end), x

    def __len__(self) -> int:
        return sum(1 for _ in self.items())

    def stored_entries(self) -> int:
        return sum(len(x.asc) + len(x.R) for _, x in self.items())


def is_distinguished(profile: TierProfile, length: int, end: int) -> bool:
    if length < 1 or length & (length - 1) or end < length:
        return False
    return end % _f_len(profile, length) == 0


# ----------------------------------------------------------------------
# order-isomorphism identifiers and block tables

def oid(w, m: int | None = None) -> int:
    """Identifier equal for exactly the order-isomorphic strings of a given length.

    Encodes |w| followed by each letter's rank among the distinct letters of
    w, using ceil(log2(m+1)) bits per field.
    """
    w = tuple(w)
    if m is None:
        m = len(w)
    if not 1 <= len(w) <= m:
        raise InvalidArguments(f"oid needs 1 <= |w| <= {m}, got {len(w)}")
    letters = SmallSet(w)
    bits = m.bit_length()
    val = len(w)
    for c in w:
        val = (val << bits) | letters.rank(c)
    return val


def oid_ranks(w) -> tuple:
    letters = SmallSet(w)
    return tuple(letters.rank(c) for c in w)


class BlockTable:
    """Minimal-suffix answers for all fragments inside blocks T[1+i*tau .. min(n, (i+2)*tau)]."""

    def __init__(self, e: ESA, tau: int):
        self.tau = tau
        m = 2 * tau
        self.m = m
        n = e.n
        sym = e.text.symbols
        tables: dict[int, list] = {}
        self.block_table: list[list] = []
        self.block_oid: list[int] = []
        i = 0
        while 1 + i * tau <= n:
            bs = 1 + i * tau
            be = min(n, (i + 2) * tau)
            key = oid(sym[bs - 1:be], m)
            tbl = tables.get(key)
            if tbl is None:
                size = be - bs + 1
                tbl = [-1] * (m * m)
                for a in range(size):
                    for b in range(a, size):
                        tbl[a * m + b] = min_suffix_log(e, bs + a, bs + b) - bs
                tables[key] = tbl
            self.block_table.append(tbl)
            self.block_oid.append(key)
            i += 1
        self.tables = tables

    def query(self, l: int, r: int) -> int:
        tau = self.tau
        i = (l - 1) // tau
        bs = 1 + i * tau
        return bs + self.block_table[i][(l - bs) * self.m + (r - bs)]

    def distinct(self) -> int:
        return len(self.tables)

    def nbytes(self) -> int:
        return 8 * (len(self.tables) * self.m * self.m + len(self.block_table))


# ----------------------------------------------------------------------
# the query engine

class MinSufIndex:
    def __init__(self, e: ESA, profile: TierProfile, *, dist: DistinguishedTable | None = None,
                 blocks: BlockTable | None = None):
        profile.validate()
        self.e = e
        self.profile = profile
        self.dist = dist if dist is not None else DistinguishedTable(e, profile)
        self.blocks = blocks if blocks is not None else BlockTable(e, profile.tau)
        self.last_depth = 0

    def minsuf_log(self, l: int, r: int) -> int:
        return min_suffix_log(self.e, l, r)

    def _decomposed(self, l: int, r: int, use_table: bool) -> int:
        e = self.e
        p = self.profile
        tau = p.tau
        cutoff = p.short_cutoff
        kind_paper = p.kind == PAPER
        F_row = self.dist.F
        ext = self.dist.ext
        cands = []
        depth = 0
        while True:
            L = r - l + 1
            if use_table and L <= tau:
                cands.append(self.blocks.query(l, r))
                break
            if L <= cutoff:
                cands.append(min_suffix_log(e, l, r))
                break
            depth += 1
            q = L.bit_length() - 1
            lq = q.bit_length() - 1
            F = 1 << (lq * lq if kind_paper else lq)
            r1 = ((r - 1) // F) * F
            qq = (r1 - l + 1).bit_length() - 1
            vl = r1 - (1 << qq) + 1
            x = ext[qq][r1 // F_row[qq]]
            cands.append(r1 - x.asc[x.R.rank(r << _RBITS)] + 1)
            if vl > l:
                cands.append(vl - max_suf_rev_len(e, l, vl - 1, r1))
            l = r1 + 1
        self.last_depth = depth
        best = cands[0]
        cmp = e.compare_suffixes_to
        for a in cands[1:]:
            if a != best and cmp(a, best, r) == LESS:
                best = a
        return best

    def minsuf_logstar(self, l: int, r: int) -> int:
        return self._decomposed(l, r, False)

    def minsuf(self, l: int, r: int) -> int:
        return self._decomposed(l, r, True)
