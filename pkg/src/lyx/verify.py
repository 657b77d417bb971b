"""Oracle-equivalence sweeps used by ``lyx verify``.

Each suite compares engine answers with the brute-force functions in
``oracle`` on materialized strings and returns a ``SuiteResult``.  The first
failure reported is the one on the shortest input, so a broken build prints a
small counterexample.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .applications import (
    cyclic_equal,
    cyclic_fingerprint,
    lyndon_factorize_fragment,
    max_rotation,
    min_rotation,
    rotate,
)
from .engine import Engine
from .lyndon_core import duval_factorize
from .oracle import (
    OracleReport,
    booth_min_rotation,
    naive_cyclic_equal,
    naive_minsuf,
    naive_significant,
)
from .text_model import extract, text_from_symbols

SUITES = ("minsuf", "significant", "gen_minsuf", "rotation", "lyndon", "fingerprint")

# Faults that can be injected to check that the harness notices broken answers.
FAULTS = ("minsuf-whole", "rotation-zero")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, size: int, report: OracleReport) -> None:
        self.checked += 1
        if not report.match:
            self.failures.append((size, report))

    def first_failure(self):
        if not self.failures:
            return None
        return min(self.failures, key=lambda f: (f[0], str(f[1].query)))[1]

    def merge(self, other: "SuiteResult") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)


def _fragments(n: int, limit: int | None, rng: random.Random):
    total = n * (n + 1) // 2
    if limit is None or total <= limit:
        for l in range(1, n + 1):
            for r in range(l, n + 1):
                yield l, r
        return
    for _ in range(limit):
        l = rng.randint(1, n)
        yield l, rng.randint(l, n)


def _kfragments(n: int, count: int, rng: random.Random, kmax: int = 4, maxlen: int = 16):
    for _ in range(count):
        pieces = []
        for _ in range(rng.randint(1, kmax)):
            a = rng.randint(1, n)
            b = rng.randint(a, min(n, a + rng.randint(0, maxlen - 1)))
            pieces.append((a, b))
        yield tuple(pieces)


class _Checker:
    def __init__(self, engine: Engine, fault: str | None = None):
        self.e = engine
        self.t = engine.text
        self.fault = fault

    def minsuf(self, l, r):
        if self.fault == "minsuf-whole":
            return l
        return self.e.minsuf(l, r)

    def min_rotation(self, v):
        if self.fault == "rotation-zero":
            return 0
        return min_rotation(self.e, v).shift

    def run(self, suite: str, fragments, kfragments) -> SuiteResult:
        res = SuiteResult(suite)
        e = self.e
        t = self.t
        if suite == "minsuf":
            for l, r in fragments:
                want = l - 1 + naive_minsuf(t.slice(l, r))
                got = (self.minsuf(l, r), e.minsuf_logstar(l, r), e.minsuf_log(l, r))
                res.add(r - l + 1, OracleReport(("MINSUF", l, r), got, (want,) * 3))
        elif suite == "significant":
            for l, r in fragments:
                got = e.significant(l, r).suffix_lengths
                want = naive_significant(t.slice(l, r))
                res.add(r - l + 1, OracleReport(("SIG", l, r), got, want))
        elif suite == "gen_minsuf":
            for v in kfragments:
                s = extract(t, v)
                want = len(s) - naive_minsuf(s) + 1
                res.add(len(s), OracleReport(("GMINSUF",) + v, e.gen_minsuf(v), want))
        elif suite == "rotation":
            sigma = t.sigma
            for v in itertools.chain(((f,) for f in fragments), kfragments):
                s = extract(t, v)
                comp = tuple(sigma - 1 - c for c in s)
                got = (self.min_rotation(v), max_rotation(e, v).shift)
                want = (booth_min_rotation(s), booth_min_rotation(comp))
                res.add(len(s), OracleReport(("ROT",) + v, got, want))
        elif suite == "lyndon":
            for v in itertools.chain(((f,) for f in fragments), kfragments):
                s = extract(t, v)
                lf = lyndon_factorize_fragment(e, v)
                got = [(extract(t, w), p) for w, p in lf.factors]
                want = list(duval_factorize(s).factors)
                res.add(len(s), OracleReport(("LYNDON",) + v, got, want))
        elif suite == "fingerprint":
            frags = list(fragments)
            rng = random.Random(len(frags))
            for a in frags:
                if rng.random() < 0.5:
                    # one of a's own rotations
                    bv = rotate((a,), rng.randrange(a[1] - a[0] + 1))
                else:
                    bv = (frags[rng.randrange(len(frags))],)
                sa = t.slice(*a)
                sb = extract(t, bv)
                eq = cyclic_equal(e, (a,), bv)
                fa = cyclic_fingerprint(e, (a,))
                fb = cyclic_fingerprint(e, bv)
                want = naive_cyclic_equal(sa, sb)
                res.add(len(sa), OracleReport(("CYCEQ", a, bv), (eq, fa == fb), (want, want)))
        else:
            raise ValueError(f"unknown suite {suite!r}")
        return res


def verify_engine(engine: Engine, suites=SUITES, *, fragment_limit: int | None = 20000,
                  kfragment_count: int = 2000, seed: int = 0, fault: str | None = None):
    rng = random.Random(seed)
    n = engine.n
    frags = list(_fragments(n, fragment_limit, rng))
    kfr = list(_kfragments(n, kfragment_count, rng))
    ch = _Checker(engine, fault)
    return [ch.run(s, frags, kfr) for s in suites]


def random_text(n: int, sigma: int, seed: int):
    rng = random.Random(seed)
    return text_from_symbols([rng.randrange(sigma) for _ in range(n)], sigma)


def verify_exhaustive(n: int, sigma: int, profile, suites=("minsuf", "significant", "rotation", "lyndon"),
                      fault: str | None = None):
    """Every text of length n over sigma letters, every fragment."""
    out = {s: SuiteResult(s) for s in suites}
    for word in itertools.product(range(sigma), repeat=n):
        eng = Engine(text_from_symbols(word, sigma), profile)
        frags = [(l, r) for l in range(1, n + 1) for r in range(l, n + 1)]
        ch = _Checker(eng, fault)
        for s in suites:
            out[s].merge(ch.run(s, frags, []))
    return list(out.values())
