"""Rotation, cyclic-equivalence, fingerprint and Lyndon-factorization queries.

All of them reduce to the k-fragment minimal-suffix machinery:

* the minimal rotation of v is the length-|v| prefix of MinSuf(v, v);
* the last Lyndon factor of v is its minimal suffix;
* maximal rotations are minimal rotations over the complemented alphabet.

Shifts are left rotations and ties (periodic v) resolve to the smallest shift.
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import Engine
from .esa import EQUAL, LESS
from .lyndon_core import LyndonFactorization
from .text_model import kf_length, subfragment, suffix_kfragment


@dataclass(frozen=True)
class RotationAnswer:
    shift: int  # left rotation in [0, |v|)
    canonical_start: int  # 1-based offset in v where the rotation starts

    def __int__(self) -> int:
        return self.shift


@dataclass(frozen=True)
class CyclicFingerprint:
    value: int
    length: int

    def hex(self) -> str:
        return f"{self.value:016x}"


def _as_kfragment(v) -> tuple:
    v = tuple(v)
    if len(v) == 2 and isinstance(v[0], int):
        return (v,)
    return tuple(tuple(p) for p in v)


def rotate(v, shift: int) -> tuple:
    """k-fragment of v rotated left by ``shift`` (at most k+1 pieces)."""
    L = kf_length(v)
    if shift == 0:
        return tuple(v)
    return subfragment(v, shift + 1, L) + subfragment(v, 1, shift)


def _minsuf_of_square_len(engine: Engine, v: tuple) -> int:
    """Length g of the suffix s of v with s·v = MinSuf(v, v)."""
    gi = engine.gen_index
    cmp = engine.esa.compare_kfragments
    best = None
    best_w = None
    tail = 0
    for i in range(len(v) - 1, -1, -1):
        a, b = v[i]
        g = gi.aux_minsuf(a, b, v[i + 1:] + v) + tail
        tail += b - a + 1
        gw = suffix_kfragment(v, g) + v if g else v
        if best is None or (g != best and cmp(gw, best_w) == LESS):
            best, best_w = g, gw
    return best


def _canonical_shift(engine: Engine, v: tuple) -> int:
    L = kf_length(v)
    shift = (L - _minsuf_of_square_len(engine, v)) % L
    # the minimal rotation is z^e with z Lyndon; its minimal suffix is z, the period
    period = engine.gen_index.gen_minsuf(rotate(v, shift))
    return shift % period


def min_rotation(engine: Engine, v) -> RotationAnswer:
    v = engine.check_kfragment(_as_kfragment(v))
    s = _canonical_shift(engine, v)
    return RotationAnswer(s, s + 1)


def max_rotation(engine: Engine, v) -> RotationAnswer:
    v = engine.check_kfragment(_as_kfragment(v))
    s = _canonical_shift(engine.complement(), v)
    return RotationAnswer(s, s + 1)


def canonical_rotation(engine: Engine, v) -> tuple:
    """The lexicographically minimal rotation of v as a k-fragment."""
    v = engine.check_kfragment(_as_kfragment(v))
    return rotate(v, _canonical_shift(engine, v))


def cyclic_equal(engine: Engine, a, b) -> bool:
    a = engine.check_kfragment(_as_kfragment(a))
    b = engine.check_kfragment(_as_kfragment(b))
    if kf_length(a) != kf_length(b):
        return False
    ra = rotate(a, _canonical_shift(engine, a))
    rb = rotate(b, _canonical_shift(engine, b))
    return engine.esa.compare_kfragments(ra, rb) == EQUAL


def cyclic_fingerprint(engine: Engine, v) -> CyclicFingerprint:
    v = engine.check_kfragment(_as_kfragment(v))
    rho = rotate(v, _canonical_shift(engine, v))
    return CyclicFingerprint(engine.hasher.combine(rho), kf_length(v))


def lyndon_factorize_fragment(engine: Engine, v) -> LyndonFactorization:
    """Lyndon factorization of v; words are k-fragments, listed left to right."""
    v = engine.check_kfragment(_as_kfragment(v))
    esa = engine.esa
    out = []
    cur = v
    L = kf_length(cur)
    while L:
        g = engine.gen_minsuf(cur)
        word = suffix_kfragment(cur, g)
        exp = 1
        if L > g:
            # z^q is a suffix of cur iff cur and cur minus its last |z| letters share a suffix of length (q-1)|z|
            shared = esa.lcs_kfragments(cur, subfragment(cur, 1, L - g))
            exp = 1 + shared // g
        out.append((word, exp))
        L -= exp * g
        cur = subfragment(cur, 1, L) if L else ()
    out.reverse()
    return LyndonFactorization(tuple(out))
