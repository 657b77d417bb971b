"""Enhanced suffix array: SA, ISA, LCP and range structures over T and its reversal.

All positions are 1-based.  The counted primitives are ``lce``, ``lce_rev``,
``rmin`` and ``rmax``; each performs a fixed number of table and RMQ lookups.
Everything else (fragment comparison, lcp of infinite powers, k-fragment
comparison) is composed from them.
"""
from __future__ import annotations

from .errors import InvalidRange
from .rmq import make_rmq
from .suffix_array import kasai, suffix_array
from .text_model import SENTINEL, Text

LESS, EQUAL, GREATER = -1, 0, 1

# RMQ / table lookups performed by one call of each primitive (upper bounds).
PROBES_PER_CALL = {"lce": 3, "lce_rev": 3, "rmin": 2, "rmax": 2}


def _auto_method(n: int) -> str:
    return "naive" if n < 40 else "sais"


class _Side:
    """SA, ISA and LCP of one direction, 1-based with a dummy slot 0."""

    __slots__ = ("sa", "isa", "lcp")

    def __init__(self, sa, isa, lcp):
        self.sa = sa
        self.isa = isa
        self.lcp = lcp

    @classmethod
    def build(cls, symbols, method: str) -> "_Side":
        n = len(symbols)
        sa0 = suffix_array(symbols, method)
        lcp0 = kasai(symbols, sa0)
        sa = [0] * (n + 1)
        isa = [0] * (n + 1)
        for k, p in enumerate(sa0, 1):
            sa[k] = p + 1
            isa[p + 1] = k
        lcp = [0] + lcp0
        return cls(sa, isa, lcp)


class ESA:
    def __init__(self, text: Text, *, rmq: str = "sparse", sa_method: str = "auto",
                 _forward: _Side | None = None, _reverse: _Side | None = None):
        self.text = text
        n = text.n
        self.n = n
        self.rmq_mode = rmq
        sym = text.symbols
        method = _auto_method(n) if sa_method == "auto" else sa_method
        fw = _forward or _Side.build(sym, method)
        rv = _reverse or _Side.build(sym[::-1], method)
        self._fw = fw
        self._rv = rv
        self.sa = fw.sa
        self.isa = fw.isa
        self.lcp_table = fw.lcp
        # t[i] is the letter at position i; t[0] and t[n+1] are out-of-alphabet guards.
        self.t = (-1,) + sym + (-2,)
        self._lcp_q = make_rmq(fw.lcp, mode=rmq).query
        self._rlcp_q = make_rmq(rv.lcp, mode=rmq).query
        self._isa_min_q = make_rmq(fw.isa, mode=rmq).query
        self._isa_max_q = make_rmq(fw.isa, use_max=True, mode=rmq).query
        self.calls = 0

    # ------------------------------------------------------------------
    # counted primitives
    def lce(self, i: int, j: int) -> int:
        """lcp of the suffixes T[i..n] and T[j..n]; i, j in [1, n+1]."""
        self.calls += 1
        if i == j:
            return self.n - i + 1
        n = self.n
        if i > n or j > n:
            return 0
        isa = self.isa
        a = isa[i]
        b = isa[j]
        if a > b:
            a, b = b, a
        return self._lcp_q(a + 1, b)

    def lce_rev(self, i: int, j: int) -> int:
        """Longest common suffix of T[1..i] and T[1..j]; i, j in [0, n]."""
        self.calls += 1
        if i == j:
            return i
        if i <= 0 or j <= 0:
            return 0
        n1 = self.n + 1
        isa = self._rv.isa
        a = isa[n1 - i]
        b = isa[n1 - j]
        if a > b:
            a, b = b, a
        return self._rlcp_q(a + 1, b)

    def rmin(self, i: int, j: int) -> int:
        """Position k in [i, j] with the lexicographically smallest T[k..n]."""
        self.calls += 1
        return self.sa[self._isa_min_q(i, j)]

    def rmax(self, i: int, j: int) -> int:
        self.calls += 1
        return self.sa[self._isa_max_q(i, j)]

    # ------------------------------------------------------------------
    # fragment-level operations
    def _check(self, l: int, r: int) -> None:
        if not (1 <= l <= r <= self.n):
            raise InvalidRange(f"[{l}, {r}] outside [1, {self.n}]")

    def range_min_suffix(self, i: int, j: int) -> int:
        self._check(i, j)
        return self.rmin(i, j)

    def range_max_suffix(self, i: int, j: int) -> int:
        self._check(i, j)
        return self.rmax(i, j)

    def lcp(self, x, y) -> int:
        a, b = x
        c, d = y
        m = min(b - a + 1, d - c + 1)
        h = self.lce(a, c)
        return h if h < m else m

    def lcs(self, x, y) -> int:
        a, b = x
        c, d = y
        m = min(b - a + 1, d - c + 1)
        h = self.lce_rev(b, d)
        return h if h < m else m

    def compare_fragments(self, x, y) -> int:
        a, b = x
        c, d = y
        lx = b - a + 1
        ly = d - c + 1
        m = lx if lx < ly else ly
        h = self.lce(a, c)
        if h >= m:
            return (lx > ly) - (lx < ly)
        t = self.t
        return LESS if t[a + h] < t[c + h] else GREATER

    def compare_suffixes_to(self, a: int, b: int, r: int) -> int:
        """Compare T[a..r] with T[b..r]."""
        if a == b:
            return EQUAL
        h = self.lce(a, b)
        la = r - a + 1
        lb = r - b + 1
        m = la if la < lb else lb
        if h >= m:
            return LESS if la < lb else GREATER
        t = self.t
        return LESS if t[a + h] < t[b + h] else GREATER

    def compare_suffixes_to_dollar(self, a: int, b: int, r: int) -> int:
        """Compare T[a..r]$ with T[b..r]$ (the shorter one is larger if it is a prefix)."""
        if a == b:
            return EQUAL
        h = self.lce(a, b)
        la = r - a + 1
        lb = r - b + 1
        m = la if la < lb else lb
        if h >= m:
            return GREATER if la < lb else LESS
        t = self.t
        return LESS if t[a + h] < t[b + h] else GREATER

    def lcp_infinite(self, x, y) -> tuple[int, int]:
        """(lcp(x^inf, y), order of x^inf versus y) for a fragment x and a k-fragment y.

        ``y`` may also be a single fragment ``(l, r)``.
        """
        if y and not isinstance(y[0], tuple):
            y = (y,)
        a, b = x
        L = b - a + 1
        t = self.t
        total = 0
        phase = 0
        for c, d in y:
            if c == 0:
                # $ is larger than every letter of x
                return total, LESS
            q = c
            while q <= d:
                rem = d - q + 1
                if phase:
                    rx = L - phase
                    m = rx if rx < rem else rem
                    h = self.lce(a + phase, q)
                    if h < m:
                        return total + h, (LESS if t[a + phase + h] < t[q + h] else GREATER)
                    total += m
                    q += m
                    phase = 0 if m == rx else phase + m
                    continue
                m = L if L < rem else rem
                h = self.lce(a, q)
                if h < m:
                    return total + h, (LESS if t[a + h] < t[q + h] else GREATER)
                if rem <= L:
                    total += rem
                    phase = rem % L
                    break
                # T[q..d] starts with x; its x-periodic prefix has length L + lce(q, q+L)
                run = L + self.lce(q, q + L)
                if run < rem:
                    return total + run, (LESS if t[a + run % L] < t[q + run] else GREATER)
                total += rem
                phase = rem % L
                break
        return total, GREATER

    def compare_kfragments(self, x, y) -> int:
        return self.compare_lcp_kfragments(x, y)[0]

    def lcp_kfragments(self, x, y) -> int:
        return self.compare_lcp_kfragments(x, y)[1]

    def compare_lcp_kfragments(self, x, y) -> tuple[int, int]:
        """(order, lcp) of two k-fragments; the sentinel piece is the largest letter."""
        t = self.t
        nx = len(x)
        ny = len(y)
        i = j = 0
        px = py = -1
        ex = ey = 0
        total = 0
        while True:
            if px < 0:
                if i == nx:
                    if j == ny and py < 0:
                        return EQUAL, total
                    return LESS, total
                px, ex = x[i]
                i += 1
            if py < 0:
                if j == ny:
                    return GREATER, total
                py, ey = y[j]
                j += 1
            if px == 0 or py == 0:
                if px == 0 and py == 0:
                    total += 1
                    px = py = -1
                    continue
                return (GREATER if px == 0 else LESS), total
            rx = ex - px + 1
            ry = ey - py + 1
            m = rx if rx < ry else ry
            h = self.lce(px, py)
            if h < m:
                return (LESS if t[px + h] < t[py + h] else GREATER), total + h
            total += m
            if rx == m:
                px = -1
            else:
                px += m
            if ry == m:
                py = -1
            else:
                py += m

    def lcs_kfragments(self, x, y) -> int:
        """Longest common suffix of two sentinel-free k-fragments."""
        i = len(x) - 1
        j = len(y) - 1
        if i < 0 or j < 0:
            return 0
        ax, bx = x[i]
        ay, by = y[j]
        total = 0
        while True:
            rx = bx - ax + 1
            ry = by - ay + 1
            m = rx if rx < ry else ry
            h = self.lce_rev(bx, by)
            if h < m:
                return total + h
            total += m
            if rx == m:
                i -= 1
                if i < 0:
                    return total
                ax, bx = x[i]
            else:
                bx -= m
            if ry == m:
                j -= 1
                if j < 0:
                    return total
                ay, by = y[j]
            else:
                by -= m

    def compare_with_sentinel(self, x, y, side: str = "left") -> int:
        """Compare x$ with y (side="left") or x with y$ (side="right")."""
        x = tuple(x)
        y = tuple(y)
        if side == "left":
            return self.compare_kfragments(x + (SENTINEL,), y)
        if side == "right":
            return self.compare_kfragments(x, y + (SENTINEL,))
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def nbytes(self) -> int:
        return 8 * 6 * (self.n + 1)


def build_esa(text: Text, rmq: str = "sparse", sa_method: str = "auto") -> ESA:
    return ESA(text, rmq=rmq, sa_method=sa_method)
