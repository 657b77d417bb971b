"""Command line: build an index, answer query batches, run oracle sweeps, benchmark.

All positions are 1-based and inclusive: ``l r`` denotes T[l..r].
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .applications import (
    cyclic_equal,
    cyclic_fingerprint,
    lyndon_factorize_fragment,
    max_rotation,
    min_rotation,
)
from .bench import bench_queries, bench_text, doubling_ratios, tier_stats
from .engine import Engine
from .errors import LyxError
from .minsuf import make_profile
from .serialize import INDEX_MAGIC, index_from_bytes, save_index
from .text_model import BYTES, TOKENS, load_text, parse_token_file
from .verify import FAULTS, SUITES, random_text, verify_engine, verify_exhaustive

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_IO = 2

VERBS = {
    # verb: fixed number of integer arguments, or None for GMINSUF
    "MINSUF": 2, "GMINSUF": None, "MINROT": 2, "MAXROT": 2,
    "CYCEQ": 4, "FP": 2, "LYNDON": 2, "SIG": 2,
}


class QueryError(Exception):
    pass


def _read_text(path: str, mode: str):
    with open(path, "rb") as f:
        raw = f.read()
    if mode == TOKENS:
        return load_text(parse_token_file(raw.decode("utf-8")), TOKENS)
    return load_text(raw, BYTES)


def _profile_from_args(args, n: int):
    return make_profile(args.profile, n, args.tau, args.short_cutoff)


def open_engine(path: str, args) -> Engine:
    """Load an index file, or build an engine from a text file."""
    with open(path, "rb") as f:
        head = f.read(len(INDEX_MAGIC))
        if head == INDEX_MAGIC:
            return index_from_bytes(head + f.read())
    text = _read_text(path, args.mode)
    return Engine(text, _profile_from_args(args, text.n), seed=args.seed)


# ----------------------------------------------------------------------
# query lines

def parse_query(line: str, n: int):
    parts = line.split()
    if not parts:
        raise QueryError("empty line")
    verb = parts[0].upper()
    if verb not in VERBS:
        raise QueryError(f"unknown verb {parts[0]}")
    try:
        nums = [int(x) for x in parts[1:]]
    except ValueError:
        raise QueryError("arguments must be integers") from None
    arity = VERBS[verb]
    if arity is None:
        if not nums:
            raise QueryError("GMINSUF needs k followed by k pairs")
        k = nums[0]
        if k < 1 or len(nums) != 1 + 2 * k:
            raise QueryError(f"GMINSUF with k={k} needs {2 * k} positions")
        nums = nums[1:]
    elif len(nums) != arity:
        raise QueryError(f"{verb} takes {arity} arguments, got {len(nums)}")
    pairs = [(nums[i], nums[i + 1]) for i in range(0, len(nums), 2)]
    for l, r in pairs:
        if not 1 <= l <= r <= n:
            raise QueryError(f"[{l}, {r}] is not a fragment of [1, {n}]")
    return verb, pairs


def answer(engine: Engine, verb: str, pairs) -> str:
    if verb == "MINSUF":
        l, r = pairs[0]
        s = engine.minsuf(l, r)
        return f"{s} {r - s + 1}"
    if verb == "GMINSUF":
        return str(engine.gen_minsuf(tuple(pairs)))
    if verb == "MINROT":
        return str(min_rotation(engine, (pairs[0],)).shift)
    if verb == "MAXROT":
        return str(max_rotation(engine, (pairs[0],)).shift)
    if verb == "CYCEQ":
        return "1" if cyclic_equal(engine, (pairs[0],), (pairs[1],)) else "0"
    if verb == "FP":
        fp = cyclic_fingerprint(engine, (pairs[0],))
        return f"{fp.hex()} {fp.length}"
    if verb == "LYNDON":
        return " ".join(f"{a}^{b}" for a, b in lyndon_factorize_fragment(engine, (pairs[0],)).shape())
    if verb == "SIG":
        return " ".join(map(str, engine.significant(*pairs[0]).suffix_lengths))
    raise QueryError(f"unknown verb {verb}")


def answer_line(engine: Engine, line: str) -> str:
    try:
        verb, pairs = parse_query(line, engine.n)
        return answer(engine, verb, pairs)
    except (QueryError, LyxError) as exc:
        return f"ERR {exc}"


def run_queries(engine: Engine, lines, threads: int = 1) -> list[str]:
    lines = [ln for ln in (x.strip() for x in lines) if ln and not ln.startswith("#")]
    if threads <= 1:
        return [answer_line(engine, ln) for ln in lines]
    # build the lazily constructed parts once before fanning out
    engine.prepare()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda ln: answer_line(engine, ln), lines))


# ----------------------------------------------------------------------
# subcommands

def cmd_index(args) -> int:
    t0 = time.perf_counter()
    text = _read_text(args.text, args.mode)
    engine = Engine(text, _profile_from_args(args, text.n), seed=args.seed).prepare()
    size = save_index(engine, args.output)
    ms = (time.perf_counter() - t0) * 1000
    p = engine.profile
    print(f"n={text.n} sigma={text.sigma} mode={text.mode} profile={p.kind} tau={p.tau} "
          f"short_cutoff={p.short_cutoff} seed={engine.seed} bytes={size} build_ms={ms:.1f}")
    return EXIT_OK


def cmd_query(args) -> int:
    engine = open_engine(args.index, args)
    if args.queries and args.queries != "-":
        with open(args.queries, encoding="utf-8") as f:
            lines = f.readlines()
    else:
        lines = sys.stdin.readlines()
    for out in run_queries(engine, lines, args.threads):
        print(out)
    return EXIT_OK


def _report(results) -> int:
    status = EXIT_OK
    for res in results:
        flag = "PASS" if res.passed else "FAIL"
        print(f"{res.name}: {flag} checked={res.checked} failures={len(res.failures)}")
        if not res.passed:
            status = EXIT_MISMATCH
            print(f"  first failing case: {res.first_failure()}")
    return status


def cmd_verify(args) -> int:
    suites = args.suites.split(",") if args.suites else list(SUITES)
    if args.exhaustive:
        n, sigma = args.exhaustive
        profile = _profile_from_args(args, n)
        ex_suites = [s for s in suites if s not in ("gen_minsuf", "fingerprint")]
        return _report(verify_exhaustive(n, sigma, profile, ex_suites, fault=args.inject_fault))
    if args.random:
        n, sigma, seed = args.random
        text = random_text(n, sigma, seed)
        engine = Engine(text, _profile_from_args(args, n), seed=args.seed)
    elif args.text:
        engine = open_engine(args.text, args)
    else:
        print("verify needs a text path, --random or --exhaustive", file=sys.stderr)
        return EXIT_IO
    results = verify_engine(engine, suites, fragment_limit=args.limit, seed=args.seed,
                            fault=args.inject_fault)
    return _report(results)


def cmd_bench(args) -> int:
    w = csv.writer(sys.stdout)
    w.writerow(["kind", "n", "tier", "queries", "ns_per_query", "max_calls", "build_s", "build_ratio"])
    sizes = [1 << int(k) for k in args.sizes.split(",")] if args.sizes else []
    engines = []
    if args.index:
        engines.append(open_engine(args.index, args))
    for n in sizes:
        engines.append(Engine(bench_text(n, args.seed), _profile_from_args(args, n)))
    for engine in engines:
        t0 = time.perf_counter()
        engine.prepare()
        build = time.perf_counter() - t0
        queries = bench_queries(engine.n, args.queries, args.seed)
        for st in tier_stats(engine, queries):
            w.writerow(["query", engine.n, st.tier, st.queries, f"{st.ns_per_query:.0f}", st.max_calls,
                        f"{build:.3f}", ""])
    if args.build_sizes:
        bsizes = [1 << int(k) for k in args.build_sizes.split(",")]
        profile = make_profile(args.profile, bsizes[0], args.tau, args.short_cutoff)
        for n, med, ratio in doubling_ratios(bsizes, profile, args.repeats, args.seed):
            w.writerow(["build", n, "all", 0, "", "", f"{med:.3f}",
                        "" if math.isnan(ratio) else f"{ratio:.3f}"])
    return EXIT_OK


# ----------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, default_profile: str = "paper") -> None:
    p.add_argument("--mode", choices=(BYTES, TOKENS), default=BYTES,
                   help="bytes: one letter per byte; tokens: whitespace-separated integers")
    p.add_argument("--profile", choices=("paper", "test"), default=default_profile)
    p.add_argument("--tau", type=int, default=None, help="block length (power of two)")
    p.add_argument("--short-cutoff", type=int, default=None,
                   help="fragments up to this length are answered without decomposition")
    p.add_argument("--seed", type=int, default=0, help="fingerprint base seed")
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lyx", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="build and save an index")
    p.add_argument("text")
    p.add_argument("-o", "--output", required=True)
    _common(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("query", help="answer query lines from a file or stdin")
    p.add_argument("index", help="index file, or a text file to index on the fly")
    p.add_argument("queries", nargs="?", default="-")
    _common(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("verify", help="compare answers with brute-force oracles")
    p.add_argument("text", nargs="?")
    p.add_argument("--random", nargs=3, type=int, metavar=("N", "SIGMA", "SEED"))
    p.add_argument("--exhaustive", nargs=2, type=int, metavar=("N", "SIGMA"))
    p.add_argument("--suites", default=None, help="comma-separated subset of " + ",".join(SUITES))
    p.add_argument("--limit", type=int, default=20000, help="fragments checked per suite")
    p.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    _common(p, "test")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="instrumented benchmark, CSV on stdout")
    p.add_argument("index", nargs="?")
    p.add_argument("--sizes", default="10,12,14,16", help="comma-separated log2 n for query rows")
    p.add_argument("--queries", type=int, default=20000)
    p.add_argument("--build-sizes", default="", help="comma-separated log2 n for build-time rows")
    p.add_argument("--repeats", type=int, default=5)
    _common(p, "test")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"lyx: {exc}", file=sys.stderr)
        return EXIT_IO
    except LyxError as exc:
        print(f"lyx: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
