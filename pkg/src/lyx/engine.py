"""One object bundling a text with every query structure built over it.

Only the enhanced suffix array is built eagerly.  The fragment tiers, the
k-fragment machinery, the fingerprint tables and the complement engine (used
for maximal rotations) are built on first use, each exactly once even under
concurrent first callers.
"""
from __future__ import annotations

import random
import threading

from .errors import InvalidArguments, InvalidRange
from .esa import ESA
from .genquery import GenIndex
from .lyndon_core import SignificantSuffixes, significant_suffixes
from .minsuf import BlockTable, DistinguishedTable, MinSufIndex, TierProfile, paper_profile
from .text_model import SENTINEL, Text, text_from_symbols

FP_MODULUS = (1 << 61) - 1


class PrefixHash:
    """Polynomial prefix hashes of letters+1 modulo 2^61-1 with a seeded base."""

    def __init__(self, symbols, seed: int):
        M = FP_MODULUS
        self.base = base = random.Random(seed).randrange(1 << 20, M - 1)
        n = len(symbols)
        h = [0] * (n + 1)
        pw = [1] * (n + 1)
        acc = 0
        p = 1
        for i, c in enumerate(symbols, 1):
            acc = (acc * base + c + 1) % M
            p = p * base % M
            h[i] = acc
            pw[i] = p
        self.h = h
        self.pw = pw

    def segment(self, l: int, r: int) -> int:
        return (self.h[r] - self.h[l - 1] * self.pw[r - l + 1]) % FP_MODULUS

    def combine(self, pieces) -> int:
        M = FP_MODULUS
        acc = 0
        for l, r in pieces:
            acc = (acc * self.pw[r - l + 1] + self.segment(l, r)) % M
        return acc


class Engine:
    def __init__(self, text: Text, profile: TierProfile | None = None, *, seed: int = 0,
                 rmq: str = "sparse", esa: ESA | None = None,
                 dist: DistinguishedTable | None = None, blocks: BlockTable | None = None):
        self.text = text
        self.n = text.n
        self.esa = esa if esa is not None else ESA(text, rmq=rmq)
        self.profile = profile if profile is not None else paper_profile(text.n)
        self.profile.validate()
        self.seed = seed
        self.rmq = rmq
        self._dist = dist
        self._blocks = blocks
        self._lock = threading.Lock()
        self._ms: MinSufIndex | None = None
        self._gen: GenIndex | None = None
        self._hash: PrefixHash | None = None
        self._complement: Engine | None = None
        self.gen_calls = 0

    # ------------------------------------------------------------------
    # lazily built parts
    @property
    def minsuf_index(self) -> MinSufIndex:
        if self._ms is None:
            with self._lock:
                if self._ms is None:
                    self._ms = MinSufIndex(self.esa, self.profile, dist=self._dist, blocks=self._blocks)
        return self._ms

    @property
    def gen_index(self) -> GenIndex:
        if self._gen is None:
            with self._lock:
                if self._gen is None:
                    self._gen = GenIndex(self.esa, self.profile)
        return self._gen

    @property
    def hasher(self) -> PrefixHash:
        if self._hash is None:
            with self._lock:
                if self._hash is None:
                    self._hash = PrefixHash(self.text.symbols, self.seed)
        return self._hash

    def complement(self) -> "Engine":
        """Engine over the text with every letter c replaced by sigma-1-c."""
        if self._complement is None:
            with self._lock:
                if self._complement is None:
                    s = self.text.sigma - 1
                    t = text_from_symbols([s - c for c in self.text.symbols], self.text.sigma,
                                          self.text.mode)
                    self._complement = Engine(t, self.profile, seed=self.seed, rmq=self.rmq)
        return self._complement

    def prepare(self) -> "Engine":
        """Build the fragment tiers now (what an index file stores)."""
        self.minsuf_index
        return self

    # ------------------------------------------------------------------
    # argument checks
    def check_fragment(self, l: int, r: int) -> None:
        if not 1 <= l <= r <= self.n:
            raise InvalidRange(f"[{l}, {r}] is not a non-empty fragment of [1, {self.n}]")

    def check_kfragment(self, v, allow_sentinel: bool = False) -> tuple:
        v = tuple(tuple(p) for p in v)
        if not v:
            raise InvalidArguments("a k-fragment needs at least one piece")
        for i, p in enumerate(v):
            if p == SENTINEL:
                if not allow_sentinel or i != len(v) - 1:
                    raise InvalidArguments("the sentinel may only be the last piece")
                continue
            if len(p) != 2:
                raise InvalidArguments(f"piece {p!r} is not a pair")
            self.check_fragment(*p)
        return v

    # ------------------------------------------------------------------
    # queries
    def minsuf(self, l: int, r: int) -> int:
        """Start of the minimal suffix of T[l..r] (constant-time tier)."""
        self.check_fragment(l, r)
        return self.minsuf_index.minsuf(l, r)

    def minsuf_logstar(self, l: int, r: int) -> int:
        self.check_fragment(l, r)
        return self.minsuf_index.minsuf_logstar(l, r)

    def minsuf_log(self, l: int, r: int) -> int:
        self.check_fragment(l, r)
        return self.minsuf_index.minsuf_log(l, r)

    def significant(self, l: int, r: int) -> SignificantSuffixes:
        self.check_fragment(l, r)
        return significant_suffixes(self.esa, (l, r))

    def aux_minsuf(self, v, w):
        """(|s|, s·w as a k-fragment) for MinSuf(v, w)."""
        self.check_fragment(*v)
        w = self.check_kfragment(w, allow_sentinel=True)
        return self.gen_index.aux_minsuf_checked(v, w)

    def gen_minsuf(self, v) -> int:
        """Length of the minimal suffix of the k-fragment v."""
        v = self.check_kfragment(v)
        self.gen_calls += 1
        return self.gen_index.gen_minsuf(v)


def build_engine(symbols_or_text, profile: TierProfile | None = None, *, seed: int = 0,
                 rmq: str = "sparse") -> Engine:
    t = symbols_or_text
    if not isinstance(t, Text):
        if isinstance(t, (bytes, bytearray)):
            t = text_from_symbols(list(t), 256)
        elif isinstance(t, str):
            t = text_from_symbols(list(t.encode()), 256)
        else:
            t = text_from_symbols(list(t))
    return Engine(t, profile, seed=seed, rmq=rmq)
