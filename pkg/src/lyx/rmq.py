"""Range minimum / maximum over a static integer array.

Indices passed to ``query`` address the array directly (callers keep a dummy
at index 0 so that 1-based ranges need no translation).
"""
from __future__ import annotations

import numpy as np

# Above this size sparse-table levels are stored as numpy arrays.
NUMPY_THRESHOLD = 1 << 16


class SparseTable:
    """O(n log n) space, O(1) query."""

    def __init__(self, values, use_max: bool = False):
        self.use_max = use_max
        n = len(values)
        self.n = n
        self._np = n > NUMPY_THRESHOLD
        if self._np:
            cur = np.asarray(values, dtype=np.int64)
            f = np.maximum if use_max else np.minimum
            levels = [cur]
            step = 1
            while 2 * step <= n:
                cur = f(cur[:-step], cur[step:])
                levels.append(cur)
                step *= 2
        else:
            cur = list(values)
            f = max if use_max else min
            levels = [cur]
            step = 1
            while 2 * step <= n:
                cur = list(map(f, cur[:-step], cur[step:]))
                levels.append(cur)
                step *= 2
        self.levels = levels

    def query(self, i: int, j: int) -> int:
        """Min (or max) of values[i..j], inclusive."""
        k = (j - i + 1).bit_length() - 1
        lv = self.levels[k]
        a = lv[i]
        b = lv[j - (1 << k) + 1]
        if self.use_max:
            m = a if a >= b else b
        else:
            m = a if a <= b else b
        return int(m) if self._np else m

    def nbytes(self) -> int:
        if self._np:
            return sum(lv.nbytes for lv in self.levels)
        return sum(8 * len(lv) for lv in self.levels)


class BlockRMQ:
    """Linear-space variant: block summaries plus a sparse table over blocks.

    Queries inside one block scan at most ``block`` entries with a C-level
    ``min``/``max`` over a slice.
    """

    def __init__(self, values, use_max: bool = False):
        self.use_max = use_max
        n = len(values)
        self.n = n
        b = max(4, n.bit_length())
        self.block = b
        self.values = np.asarray(values, dtype=np.int64)
        v = self.values
        pad = (-n) % b
        fill = np.iinfo(np.int64).min if use_max else np.iinfo(np.int64).max
        padded = np.concatenate([v, np.full(pad, fill, dtype=np.int64)]).reshape(-1, b)
        if use_max:
            self.prefix = np.maximum.accumulate(padded, axis=1).ravel()
            self.suffix = np.maximum.accumulate(padded[:, ::-1], axis=1)[:, ::-1].ravel()
            summary = padded.max(axis=1)
        else:
            self.prefix = np.minimum.accumulate(padded, axis=1).ravel()
            self.suffix = np.minimum.accumulate(padded[:, ::-1], axis=1)[:, ::-1].ravel()
            summary = padded.min(axis=1)
        self.summary = SparseTable(summary.tolist(), use_max)
        self._list = v.tolist()

    def query(self, i: int, j: int) -> int:
        b = self.block
        bi = i // b
        bj = j // b
        if bi == bj:
            seg = self._list[i:j + 1]
            return max(seg) if self.use_max else min(seg)
        a = int(self.suffix[i])
        c = int(self.prefix[j])
        if bi + 1 <= bj - 1:
            m = self.summary.query(bi + 1, bj - 1)
            if self.use_max:
                return max(a, c, m)
            return min(a, c, m)
        return max(a, c) if self.use_max else min(a, c)

    def nbytes(self) -> int:
        return self.values.nbytes + self.prefix.nbytes + self.suffix.nbytes + self.summary.nbytes()


def make_rmq(values, use_max: bool = False, mode: str = "sparse"):
    if mode == "sparse":
        return SparseTable(values, use_max)
    if mode == "linear":
        return BlockRMQ(values, use_max)
    raise ValueError(f"unknown rmq mode {mode!r}")
