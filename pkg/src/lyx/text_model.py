"""Texts, fragments and k-fragments.

Positions are 1-based and inclusive everywhere.  A fragment is a pair
``(start, end)``; a k-fragment is a tuple of such pairs.  The special piece
``SENTINEL == (0, 0)`` stands for the letter ``$`` that is larger than every
letter of the alphabet.  It may only appear as the last piece of a k-fragment.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInput, InvalidRange

BYTES = "bytes"
TOKENS = "tokens"

MAX_TOKEN = (1 << 32) - 1

SENTINEL = (0, 0)


class Fragment(NamedTuple):
    start: int
    end: int

    def __len__(self) -> int:  # type: ignore[override]
        return self.end - self.start + 1


@dataclass(frozen=True)
class Text:
    symbols: tuple
    sigma: int
    mode: str = BYTES

    @property
    def n(self) -> int:
        return len(self.symbols)

    def at(self, i: int) -> int:
        return self.symbols[i - 1]

    def slice(self, l: int, r: int) -> tuple:
        return self.symbols[l - 1:r]

    def __len__(self) -> int:
        return len(self.symbols)


def _radix_sort(values: list[int]) -> list[int]:
    # LSD radix sort over 16-bit digits; values fit in 32 bits.
    out = values
    for shift in (0, 16):
        buckets: list[list[int]] = [[] for _ in range(1 << 16)]
        for v in out:
            buckets[(v >> shift) & 0xFFFF].append(v)
        out = [v for b in buckets if b for v in b]
    return out


def load_text(raw, mode: str = BYTES) -> Text:
    """Build a Text from raw bytes (byte mode) or a list of integers (token mode)."""
    if mode == BYTES:
        if isinstance(raw, str):
            raw = raw.encode("utf-8")
        data = tuple(bytes(raw))
        if not data:
            raise InvalidInput("empty input")
        return Text(data, 256, BYTES)
    if mode != TOKENS:
        raise InvalidInput(f"unknown mode {mode!r}")
    tokens = list(raw)
    if not tokens:
        raise InvalidInput("empty input")
    for v in tokens:
        if not isinstance(v, int) or v < 0 or v > MAX_TOKEN:
            raise InvalidInput(f"token {v!r} does not fit in 32 bits")
    distinct = _radix_sort(list(set(tokens)))
    rank = {v: i for i, v in enumerate(distinct)}
    return Text(tuple(rank[v] for v in tokens), len(distinct), TOKENS)


def text_from_symbols(symbols: Sequence[int], sigma: int | None = None, mode: str = BYTES) -> Text:
    """Wrap an already-ranked symbol sequence (used by tests and block indexes)."""
    symbols = tuple(symbols)
    if not symbols:
        raise InvalidInput("empty input")
    if sigma is None:
        sigma = max(symbols) + 1
    if min(symbols) < 0 or max(symbols) >= sigma:
        raise InvalidInput("symbol outside [0, sigma)")
    return Text(symbols, sigma, mode)


def parse_token_file(data: str) -> list[int]:
    try:
        return [int(tok) for tok in data.split()]
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def fragment(t: Text, l: int, r: int) -> Fragment:
    if not (1 <= l <= r <= t.n):
        raise InvalidRange(f"fragment [{l}, {r}] outside [1, {t.n}]")
    return Fragment(l, r)


def check_kfragment(t: Text, w: Iterable) -> tuple:
    pieces = tuple(tuple(p) for p in w)
    if not pieces:
        raise InvalidRange("k-fragment needs at least one piece")
    for i, (l, r) in enumerate(pieces):
        if (l, r) == SENTINEL:
            if i != len(pieces) - 1:
                raise InvalidRange("sentinel must be the last piece")
        elif not (1 <= l <= r <= t.n):
            raise InvalidRange(f"piece [{l}, {r}] outside [1, {t.n}]")
    return pieces


def kf_length(w) -> int:
    return sum(r - l + 1 for l, r in w)


def subfragment(w, l: int, r: int) -> tuple:
    """Pieces of ``w[l..r]`` (offsets 1-based within the concatenation)."""
    total = kf_length(w)
    if not (1 <= l <= r <= total):
        raise InvalidRange(f"offsets [{l}, {r}] outside [1, {total}]")
    out = []
    off = 0
    for a, b in w:
        size = b - a + 1
        lo = max(l, off + 1)
        hi = min(r, off + size)
        if lo <= hi:
            if (a, b) == SENTINEL:
                out.append(SENTINEL)
            else:
                out.append((a + lo - off - 1, a + hi - off - 1))
        off += size
        if off >= r:
            break
    return tuple(out)


def suffix_kfragment(w, length: int) -> tuple:
    """The suffix of ``w`` of the given length (possibly empty)."""
    if length == 0:
        return ()
    total = kf_length(w)
    return subfragment(w, total - length + 1, total)


def extract(t: Text, w) -> tuple:
    """Materialize a k-fragment; the sentinel becomes the integer ``sigma``."""
    out: list[int] = []
    s = t.symbols
    for l, r in w:
        if (l, r) == SENTINEL:
            out.append(t.sigma)
        else:
            out.extend(s[l - 1:r])
    return tuple(out)
