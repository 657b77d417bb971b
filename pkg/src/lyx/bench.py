"""Instrumented workloads: primitive-call maxima per tier and build-time scaling.

The per-query call count of the constant-time tier depends on local text
content, so a purely random workload only approaches the worst case.  Bench
texts therefore start with a fixed binary prefix in which the 8-letter tails
that maximize the short-fragment cost are planted at 8-aligned ends, and the
workload sweeps every start for those ends.  Every bench text of any length
contains the same prefix, so the same worst case is reachable for every n.
"""
from __future__ import annotations

import gc
import math
import random
import statistics
import time
from dataclasses import dataclass

from .engine import Engine
from .minsuf import TierProfile, test_profile
from .text_model import Text, text_from_symbols

PREFIX_LEN = 1024
_PLANT = ((1, 0, 0, 0, 0, 0, 0, 0), (1, 1, 1, 1, 1, 1, 1, 0), (1, 1, 1, 1, 1, 1, 1, 1))
PLANTED_ENDS = tuple(range(384, PREFIX_LEN + 1, 64))
TIERS = ("minsuf", "minsuf_logstar", "minsuf_log")


def bench_text(n: int, seed: int = 0) -> Text:
    """Random binary text of length n sharing a planted prefix with every other n."""
    rng = random.Random(0x5EED)
    sym = [rng.randrange(2) for _ in range(PREFIX_LEN)]
    for i, r in enumerate(PLANTED_ENDS):
        sym[r - 8:r] = _PLANT[i % len(_PLANT)]
    rng = random.Random(seed)
    sym = sym[:n] + [rng.randrange(2) for _ in range(max(0, n - PREFIX_LEN))]
    return text_from_symbols(sym, 2)


def bench_queries(n: int, count: int, seed: int = 0) -> list[tuple[int, int]]:
    """Start sweeps at the planted ends plus log-uniform random fragments."""
    out = []
    for r in PLANTED_ENDS:
        if r <= n:
            out.extend((l, r) for l in range(1, r + 1))
    rng = random.Random(seed)
    k = math.log2(n)
    for _ in range(count):
        L = min(n, int(2 ** rng.uniform(0, k)))
        l = rng.randint(1, n - L + 1)
        out.append((l, l + L - 1))
    return out


@dataclass
class TierStats:
    tier: str
    queries: int
    ns_per_query: float
    max_calls: int


def tier_stats(engine: Engine, queries, tiers=TIERS) -> list[TierStats]:
    ms = engine.minsuf_index
    esa = engine.esa
    out = []
    for name in tiers:
        fn = getattr(ms, name)
        worst = 0
        start = time.perf_counter_ns()
        for l, r in queries:
            c = esa.calls
            fn(l, r)
            d = esa.calls - c
            if d > worst:
                worst = d
        elapsed = time.perf_counter_ns() - start
        out.append(TierStats(name, len(queries), elapsed / max(1, len(queries)), worst))
    return out


def build_seconds(n: int, profile: TierProfile | None = None, repeats: int = 1, seed: int = 0) -> list[float]:
    """Wall time of a full build (suffix arrays plus fragment tiers), one entry per repeat."""
    profile = profile or test_profile()
    text = bench_text(n, seed)
    times = []
    for _ in range(repeats):
        gc.collect()
        t0 = time.perf_counter()
        Engine(text, profile).prepare()
        times.append(time.perf_counter() - t0)
    gc.collect()
    return times


def doubling_ratios(sizes, profile: TierProfile | None = None, repeats: int = 5, seed: int = 0):
    """[(n, median seconds, median(n) / median(previous n))] for consecutive sizes."""
    rows = []
    prev = None
    for n in sizes:
        med = statistics.median(build_seconds(n, profile, repeats, seed))
        rows.append((n, med, med / prev if prev else float("nan")))
        prev = med
    return rows
