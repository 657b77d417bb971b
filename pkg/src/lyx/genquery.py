"""Minimal suffix of v·w for a fragment v and a k-fragment w, and of k-fragments.

``aux_minsuf`` follows the same three-way decomposition as the fragment tiers,
with the precomputed piece for power-of-two fragments replaced by a
``GenExtender`` (significant suffixes plus a trie ranker over their power
fragments).  Fragments of length at most tau are answered inside a block of
length 3*tau by rewriting w into the block's own coordinates.
"""
from __future__ import annotations

from functools import cmp_to_key
from math import inf

from .errors import InvalidArguments
from .esa import ESA, LESS
from .lyndon_core import (
    extend_significant,
    max_suf_rev_len,
    minsuf_with_context,
    significant_lengths,
    SignificantSuffixes,
)
from .minsuf import PAPER, TierProfile, _f_len, oid, oid_ranks
from .small_rank import SmallSet
from .text_model import SENTINEL, suffix_kfragment, text_from_symbols


# ----------------------------------------------------------------------
# nearest suffix

class NearestSuffixIndex:
    """Among a fixed set of suffixes, find one with the longest common prefix with a query suffix."""

    __slots__ = ("e", "ranks")

    def __init__(self, e: ESA, positions):
        self.e = e
        isa = e.isa
        n = e.n
        pos = {p for p in positions if 1 <= p <= n}
        self.ranks = SmallSet([isa[p] for p in pos], {isa[p]: p for p in pos})

    def __len__(self) -> int:
        return len(self.ranks)

    def query(self, p: int):
        """(position, lcp) of the best suffix for T[p..], or (None, 0) when empty."""
        rs = self.ranks
        el = rs.elements
        if not el:
            return None, 0
        e = self.e
        if p > e.n:
            return rs.payload[0], 0
        i = rs.succ_index(e.isa[p])
        best = None
        h = -1
        if i > 0:
            best = rs.payload[i - 1]
            h = e.lce(best, p)
        if i < len(el):
            c = rs.payload[i]
            hc = e.lce(c, p)
            if hc > h:
                best, h = c, hc
        return best, h


def build_nearest_suffix(e: ESA, positions) -> NearestSuffixIndex:
    return NearestSuffixIndex(e, positions)


def nearest_suffix(idx: NearestSuffixIndex, p: int):
    return idx.query(p)[0]


# ----------------------------------------------------------------------
# compressed trie ranker over a set of fragments

class FragmentRanker:
    """rank_A(w) = number of distinct values in A smaller than the k-fragment w."""

    def __init__(self, e: ESA, fragments):
        self.e = e
        t = e.t
        frags = sorted({(l, r) for l, r in fragments},
                       key=cmp_to_key(e.compare_fragments))
        uniq = []
        for x in frags:
            if not uniq or e.compare_fragments(uniq[-1], x) != 0:
                uniq.append(x)
        self.values = uniq
        depth = [0]
        rep = [1]
        kids: list[dict] = [{}]
        term = [-1]
        stack = [0]
        for i, (l, r) in enumerate(uniq):
            L = r - l + 1
            h = e.lcp(uniq[i - 1], (l, r)) if i else 0
            last = -1
            while depth[stack[-1]] > h:
                last = stack.pop()
            top = stack[-1]
            if depth[top] < h:
                mid = len(depth)
                depth.append(h)
                rep.append(rep[last])
                kids.append({t[rep[last] + h]: last})
                term.append(-1)
                kids[top][t[rep[last] + depth[top]]] = mid
                stack.append(mid)
                top = mid
            if L == h:
                term[top] = i
            else:
                leaf = len(depth)
                depth.append(L)
                rep.append(l)
                kids.append({})
                term.append(i)
                kids[top][t[l + h]] = leaf
                stack.append(leaf)
        N = len(depth)
        self.depth = depth
        self.rep = rep
        self.term = term
        first = [0] * N
        last_r = [0] * N
        # children sorted by letter give pre-order = sorted order of terminals
        order = []
        todo = [0]
        while todo:
            x = todo.pop()
            order.append(x)
            for c in sorted(kids[x], reverse=True):
                todo.append(kids[x][c])
        for x in reversed(order):
            ch = [kids[x][c] for c in sorted(kids[x])]
            if ch:
                first[x] = term[x] if term[x] >= 0 else first[ch[0]]
                last_r[x] = last_r[ch[-1]]
            else:
                first[x] = last_r[x] = term[x]
        self.first = first
        self.last = last_r
        self.children = [SmallSet(k.keys(), k) for k in kids]
        if N and not uniq:
            self.first[0] = 0
            self.last[0] = -1
        starts = [l for l, _ in uniq]
        self.nsi = [NearestSuffixIndex(e, [starts[j] + depth[x] for j in range(first[x], last_r[x] + 1)])
                    if uniq else NearestSuffixIndex(e, []) for x in range(N)]
        # explicit nodes spelling a prefix of T[l..], per distinct start l
        lce = e.lce
        paths: dict[int, SmallSet] = {}
        for l in set(starts):
            hit = {}
            for x in range(N):
                if depth[x] == 0 or lce(rep[x], l) >= depth[x]:
                    hit[depth[x]] = x
            paths[l] = SmallSet(hit.keys(), hit)
        self.paths = paths

    def __len__(self) -> int:
        return len(self.values)

    def node_count(self) -> int:
        return len(self.depth)

    def stored_words(self) -> int:
        words = 4 * len(self.depth)
        words += sum(len(c) for c in self.children)
        words += sum(len(s) for s in self.nsi)
        words += sum(len(s) for s in self.paths.values())
        return words

    def rank(self, w) -> int:
        if not self.values:
            return 0
        e = self.e
        t = e.t
        lce = e.lce
        depth = self.depth
        rep = self.rep
        children = self.children
        # locus: depth `dep` on the edge into explicit node `ch` (dep == depth[ch] when explicit)
        ch = 0
        dep = 0
        c = None     # letter of w right after the longest matched prefix
        edge = None  # letter of the trie edge at the mismatch point, when implicit
        for a, b in w:
            if a == 0:
                c = inf
                break
            plen = dep + b - a + 1  # |p_i|
            dch = depth[ch]
            if dch > dep:
                room = dch - dep
                h = lce(rep[ch] + dep, a)
                m = b - a + 1
                if h >= m and m <= room:
                    dep += m
                    continue
                if h < room:
                    # mismatch inside the edge (h < m here)
                    c = t[a + h]
                    edge = t[rep[ch] + dep + h]
                    dep += h
                    break
                # the edge label is a proper prefix of the rest of the piece
                a += room
                dep = dch
            # at the explicit node ch with T[a..b] left to match
            while True:
                mu = ch
                pos, g = self.nsi[mu].query(a)
                if pos is None:
                    c = t[a]
                    break
                rest = b - a + 1
                D = depth[mu] + (g if g < rest else rest)
                path = self.paths[pos - depth[mu]]
                k = path.pred_index(D + 1)
                mu = path.payload[k]
                dm = depth[mu]
                if dm >= plen:
                    ch = mu
                    dep = plen
                    break
                off = a + dm - depth[ch]
                c_next = t[off]
                kids = children[mu]
                ki = kids.succ_index(c_next)
                if ki >= len(kids) or kids.elements[ki] != c_next:
                    ch = mu
                    dep = dm
                    c = c_next
                    break
                nxt = kids.payload[ki]
                room = depth[nxt] - dm
                h = lce(rep[nxt] + dm, off)
                left = plen - dm
                if h >= left and left <= room:
                    ch = nxt
                    dep = plen
                    break
                if h < room:
                    # mismatch inside the child edge (h < left here)
                    ch = nxt
                    dep = dm + h
                    c = t[off + h]
                    edge = t[rep[nxt] + dm + h]
                    break
                # fully matched the child edge; keep descending
                ch = nxt
                dep = depth[nxt]
                a = off + room
            if c is not None:
                break
        if c is None:
            return self.first[ch]
        if dep < depth[ch]:
            if edge is None:
                edge = t[rep[ch] + dep]
            return self.first[ch] if c < edge else self.last[ch] + 1
        kids = children[ch]
        ki = kids.succ_index(c) - 1
        if ki >= 0:
            return self.last[kids.payload[ki]] + 1
        return self.first[ch] + (1 if self.term[ch] >= 0 else 0)


def build_fragment_rank(e: ESA, fragments) -> FragmentRanker:
    return FragmentRanker(e, fragments)


def fragment_rank(ranker: FragmentRanker, w) -> int:
    return ranker.rank(tuple(w))


# ----------------------------------------------------------------------
# per-fragment generalized extender

class GenExtender:
    """MinSuf(v, w) for a fixed fragment v and any k-fragment w."""

    __slots__ = ("e", "start", "end", "asc", "ranker")

    def __init__(self, e: ESA, start: int, end: int, asc=None):
        self.e = e
        self.start = start
        self.end = end
        if asc is None:
            asc = significant_lengths(e, start, end)
        self.asc = tuple(asc)
        a = self.asc
        frags = [(end - (a[j + 1] - a[j]) + 1, end) for j in range(len(a) - 1)]
        self.ranker = FragmentRanker(e, frags)
        assert len(self.ranker) == len(frags)

    @property
    def lam(self) -> SignificantSuffixes:
        return SignificantSuffixes(self.start, self.end, self.asc)

    def query_index(self, w) -> int:
        """Index j into ``asc`` with MinSuf(v, w) = (suffix of length asc[j])·w."""
        k = self.ranker.rank(w)
        if k == 0:
            return 0
        asc = self.asc
        end = self.end
        s1 = asc[k]
        x = ((end - s1 + 1, end),) + w
        s0 = asc[k - 1]
        y = ((end - s0 + 1, end),) + w if s0 else w
        return k if self.e.compare_kfragments(x, y) == LESS else k - 1

    def query_len(self, w) -> int:
        return self.asc[self.query_index(w)]

    def stored_words(self) -> int:
        return len(self.asc) + self.ranker.stored_words()


def build_genfus(e: ESA, v) -> GenExtender:
    l, r = v
    return GenExtender(e, l, r)


def genfus_query(ext: GenExtender, w) -> int:
    return ext.query_len(tuple(w))


# ----------------------------------------------------------------------
# block rewriting for short fragments

class _BlockClass:
    """Per order-isomorphism class of T_i$: a small ESA and extenders for its short fragments."""

    __slots__ = ("esa", "ext", "size")

    def __init__(self, ranks: tuple, tau: int):
        top = max(ranks) + 1
        mini = text_from_symbols(ranks + (top,), top + 1)
        self.esa = ESA(mini)
        self.size = len(ranks)
        self.ext = {}
        lim = min(2 * tau, len(ranks))
        for a in range(1, lim + 1):
            for b in range(a, min(lim, a + tau - 1) + 1):
                self.ext[(a, b)] = GenExtender(self.esa, a, b)


class _Block:
    __slots__ = ("start", "cls", "nsi", "letters")

    def __init__(self, start, cls, nsi, letters):
        self.start = start
        self.cls = cls
        self.nsi = nsi
        self.letters = letters


class GenBlockIndex:
    def __init__(self, e: ESA, tau: int):
        self.tau = tau
        n = e.n
        sym = e.text.symbols
        classes: dict[int, _BlockClass] = {}
        blocks = []
        i = 0
        while i * tau + 1 <= n:
            bs = i * tau + 1
            be = min(n, (i + 3) * tau)
            seg = sym[bs - 1:be]
            ranks = oid_ranks(seg)
            key = oid(ranks + (max(ranks) + 1,), 3 * tau + 1)
            cls = classes.get(key)
            if cls is None:
                cls = _BlockClass(ranks, tau)
                classes[key] = cls
            nsi = NearestSuffixIndex(e, range(bs, min(n, (i + 2) * tau) + 1))
            sample = {}
            for off, ch in enumerate(seg, 1):
                sample.setdefault(ch, off)
            blocks.append(_Block(bs, cls, nsi, SmallSet(sample.keys(), sample)))
            i += 1
        self.blocks = blocks
        self.classes = classes

    def distinct(self) -> int:
        return len(self.classes)


def aux_minsuf_short(e: ESA, gbi: GenBlockIndex, l: int, r: int, w) -> int:
    """Length of the suffix part of MinSuf(T[l..r], w) for r - l + 1 <= tau."""
    tau = gbi.tau
    blk = gbi.blocks[(l - 1) // tau]
    bs = blk.start
    cls = blk.cls
    t = e.t
    local = []
    c = None
    shift = bs - 1
    for a, b in w:
        if a == 0:
            local.append((cls.size + 1, cls.size + 1))
            break
        m = b - a + 1
        pos, d = blk.nsi.query(a)
        if d >= m and m <= tau:
            local.append((pos - shift, pos - shift + m - 1))
            continue
        keep = d if d < tau else tau
        if keep:
            local.append((pos - shift, pos - shift + keep - 1))
        c = t[a + keep]
        break
    ext = cls.ext[(l - shift, r - shift)]
    if c is None:
        return ext.query_len(tuple(local))
    lt = blk.letters
    k = lt.succ_index(c)
    p = lt.payload[k] if k < len(lt) else cls.size + 1
    local.append((p, p))
    j = ext.query_index(tuple(local))
    asc = ext.asc
    s = asc[j]
    if j + 1 == len(asc):
        return s
    s2 = asc[j + 1]
    x = ((r - s2 + 1, r),) + w
    y = ((r - s + 1, r),) + w if s else w
    return s2 if e.compare_kfragments(x, y) == LESS else s


# ----------------------------------------------------------------------
# the query engine

class GenDistinguished:
    """GenExtenders for every distinguished fragment (same grid as the fragment tiers)."""

    def __init__(self, e: ESA, profile: TierProfile):
        n = e.n
        qmax = n.bit_length() - 1
        self.F = [_f_len(profile, 1 << q) for q in range(qmax + 1)]
        self.ext: list[list] = [[None] * (n // F + 1) for F in self.F]
        if n <= profile.short_cutoff:
            return
        F = self.F
        for r in range(1, n + 1):
            asc = [0, 1]
            self.ext[0][r // F[0]] = GenExtender(e, r, r, (0, 1))
            q = 1
            while q <= qmax and r % F[q] == 0 and (1 << q) <= r:
                half = 1 << (q - 1)
                asc = list(asc)
                extend_significant(e, asc, r - 2 * half + 1, r - half, r)
                self.ext[q][r // F[q]] = GenExtender(e, r - 2 * half + 1, r, asc)
                q += 1

    def items(self):
        for q, row in enumerate(self.ext):
            for x in row:
                if x is not None:
                    yield (1 << q, x.end), x


class GenIndex:
    def __init__(self, e: ESA, profile: TierProfile):
        profile.validate()
        self.e = e
        self.profile = profile
        self.dist = GenDistinguished(e, profile)
        self.blocks = GenBlockIndex(e, profile.tau)
        self.last_depth = 0

    def _check_pieces(self, w) -> tuple:
        n = self.e.n
        w = tuple(tuple(p) for p in w)
        if not w:
            raise InvalidArguments("w must be non-empty")
        for i, (a, b) in enumerate(w):
            if (a, b) == SENTINEL:
                if i != len(w) - 1:
                    raise InvalidArguments("sentinel must be the last piece")
            elif not 1 <= a <= b <= n:
                raise InvalidArguments(f"piece ({a}, {b}) is not a non-empty fragment")
        return w

    def aux_minsuf(self, l: int, r: int, w) -> int:
        """Length of the suffix s of T[l..r] with s·w = MinSuf(T[l..r], w)."""
        e = self.e
        p = self.profile
        tau = p.tau
        cutoff = p.short_cutoff
        kind_paper = p.kind == PAPER
        F_row = self.dist.F
        ext = self.dist.ext
        cands = []
        depth = 0
        R = r
        while True:
            L = R - l + 1
            if L <= tau:
                cands.append(aux_minsuf_short(e, self.blocks, l, R, w))
                break
            if L <= cutoff:
                lam = SignificantSuffixes(l, R, tuple(significant_lengths(e, l, R)))
                cands.append(minsuf_with_context(e, lam, w))
                break
            depth += 1
            q = L.bit_length() - 1
            lq = q.bit_length() - 1
            F = 1 << (lq * lq if kind_paper else lq)
            r1 = ((R - 1) // F) * F
            qq = (r1 - l + 1).bit_length() - 1
            vl = r1 - (1 << qq) + 1
            g = ext[qq][r1 // F_row[qq]]
            tail = R - r1
            cands.append(g.query_len(((r1 + 1, R),) + w) + tail)
            if vl > l:
                cands.append(max_suf_rev_len(e, l, vl - 1, r1) + (r1 - vl + 1) + tail)
            l = r1 + 1
        self.last_depth = depth
        best = cands[0]
        if len(cands) > 1:
            cmp = e.compare_kfragments
            bw = ((R - best + 1, R),) + w if best else w
            for s in cands[1:]:
                if s == best:
                    continue
                sw = ((R - s + 1, R),) + w if s else w
                if cmp(sw, bw) == LESS:
                    best, bw = s, sw
        return best

    def aux_minsuf_checked(self, v, w):
        """(suffix length, answer as a k-fragment) with argument validation."""
        l, r = v
        if not 1 <= l <= r <= self.e.n:
            raise InvalidArguments("v must be a non-empty fragment")
        w = self._check_pieces(w)
        s = self.aux_minsuf(l, r, w)
        return s, (((r - s + 1, r),) + w if s else w)

    def gen_minsuf(self, v) -> int:
        """Length of the minimal suffix of the k-fragment v."""
        v = tuple(tuple(p) for p in v)
        if not v:
            raise InvalidArguments("v needs at least one piece")
        for a, b in v:
            if not 1 <= a <= b <= self.e.n:
                raise InvalidArguments(f"piece ({a}, {b}) is not a non-empty fragment")
        k = len(v)
        cands = []
        a, b = v[-1]
        if a == b:
            cands.append(1)
        else:
            cands.append(self.aux_minsuf(a, b - 1, ((b, b),)) + 1)
        tail = b - a + 1
        for i in range(k - 2, -1, -1):
            a, b = v[i]
            s = self.aux_minsuf(a, b, v[i + 1:])
            cands.append(s + tail)
            tail += b - a + 1
        best = cands[0]
        cmp = self.e.compare_kfragments
        bw = suffix_kfragment(v, best)
        for g in cands[1:]:
            if g == best:
                continue
            gw = suffix_kfragment(v, g)
            if cmp(gw, bw) == LESS:
                best, bw = g, gw
        return best
