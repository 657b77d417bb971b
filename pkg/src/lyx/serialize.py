"""Binary files for suffix arrays and whole indexes.

ESA file::

    b"LYXESA1" u8 version | u64 n | u64 sigma | u8 mode
    u32[n] symbols | forward sa, isa, lcp | reverse sa, isa, lcp   (u32[n+1] each)

Index file::

    b"LYXIDX1" u8 version | u32 header length | JSON header
    u64 length | ESA file bytes
    distinguished extenders: u64 count, then u8 q[], u32 end[], u8 |asc|[], u8 |R|[],
        u32 asc values, u64 R values
    block tables: u64 blocks, u64 tables, u32 m, u32 table id per block, i32 cells

All integers are little-endian.  RMQ structures, the k-fragment machinery and
the fingerprint tables are rebuilt on load.
"""
from __future__ import annotations

import io
import json
import struct

import numpy as np

from .engine import Engine
from .errors import InvalidInput
from .esa import ESA, _Side
from .minsuf import BlockTable, DistinguishedTable, MinSufExtender, TierProfile, _f_len
from .small_rank import SmallSet
from .text_model import BYTES, TOKENS, Text

ESA_MAGIC = b"LYXESA1"
INDEX_MAGIC = b"LYXIDX1"
VERSION = 1
_MODES = {BYTES: 0, TOKENS: 1}
_MODE_NAMES = {v: k for k, v in _MODES.items()}


def _write_array(out, values, dtype: str) -> None:
    out.write(np.asarray(values, dtype=dtype).tobytes())


def _read_array(buf: io.BytesIO, count: int, dtype: str) -> list:
    width = np.dtype(dtype).itemsize
    raw = buf.read(count * width)
    if len(raw) != count * width:
        raise InvalidInput("truncated file")
    return np.frombuffer(raw, dtype=dtype).tolist()


def _read_struct(buf: io.BytesIO, fmt: str):
    size = struct.calcsize(fmt)
    raw = buf.read(size)
    if len(raw) != size:
        raise InvalidInput("truncated file")
    return struct.unpack(fmt, raw)


# ----------------------------------------------------------------------
# ESA

def esa_to_bytes(e: ESA) -> bytes:
    n = e.n
    if n >= 1 << 32:
        raise InvalidInput("text too long for 32-bit positions")
    out = io.BytesIO()
    out.write(ESA_MAGIC)
    out.write(struct.pack("<BQQB", VERSION, n, e.text.sigma, _MODES[e.text.mode]))
    _write_array(out, e.text.symbols, "<u4")
    for side in (e._fw, e._rv):
        _write_array(out, side.sa, "<u4")
        _write_array(out, side.isa, "<u4")
        _write_array(out, side.lcp, "<u4")
    return out.getvalue()


def esa_from_buffer(buf: io.BytesIO, rmq: str = "sparse") -> ESA:
    if buf.read(len(ESA_MAGIC)) != ESA_MAGIC:
        raise InvalidInput("not an ESA file (bad magic)")
    version, n, sigma, mode = _read_struct(buf, "<BQQB")
    if version != VERSION:
        raise InvalidInput(f"unsupported ESA version {version}")
    if mode not in _MODE_NAMES:
        raise InvalidInput(f"unknown mode code {mode}")
    symbols = tuple(_read_array(buf, n, "<u4"))
    sides = []
    for _ in range(2):
        sa = _read_array(buf, n + 1, "<u4")
        isa = _read_array(buf, n + 1, "<u4")
        lcp = _read_array(buf, n + 1, "<u4")
        sides.append(_Side(sa, isa, lcp))
    text = Text(symbols, sigma, _MODE_NAMES[mode])
    return ESA(text, rmq=rmq, _forward=sides[0], _reverse=sides[1])


def esa_from_bytes(data: bytes, rmq: str = "sparse") -> ESA:
    return esa_from_buffer(io.BytesIO(data), rmq)


def save_esa(e: ESA, path) -> None:
    with open(path, "wb") as f:
        f.write(esa_to_bytes(e))


def load_esa(path, rmq: str = "sparse") -> ESA:
    with open(path, "rb") as f:
        return esa_from_bytes(f.read(), rmq)


# ----------------------------------------------------------------------
# whole index

def _dist_section(out, dist: DistinguishedTable) -> None:
    qs, ends, alen, rlen, ascv, rv = [], [], [], [], [], []
    for q, row in enumerate(dist.ext):
        for x in row:
            if x is None:
                continue
            qs.append(q)
            ends.append(x.end)
            alen.append(len(x.asc))
            rlen.append(len(x.R))
            ascv.extend(x.asc)
            rv.extend(x.R.elements)
    out.write(struct.pack("<QQQ", len(qs), len(ascv), len(rv)))
    _write_array(out, qs, "<u1")
    _write_array(out, ends, "<u4")
    _write_array(out, alen, "<u1")
    _write_array(out, rlen, "<u1")
    _write_array(out, ascv, "<u4")
    _write_array(out, rv, "<u8")


def _read_dist(buf, profile: TierProfile, n: int) -> DistinguishedTable:
    count, na, nr = _read_struct(buf, "<QQQ")
    qs = _read_array(buf, count, "<u1")
    ends = _read_array(buf, count, "<u4")
    alen = _read_array(buf, count, "<u1")
    rlen = _read_array(buf, count, "<u1")
    ascv = _read_array(buf, na, "<u4")
    rv = _read_array(buf, nr, "<u8")
    d = DistinguishedTable.__new__(DistinguishedTable)
    d.profile = profile
    d.n = n
    qmax = n.bit_length() - 1
    d.F = [_f_len(profile, 1 << q) for q in range(qmax + 1)]
    d.ext = [[None] * (n // F + 1) for F in d.F]
    d.qmax = -1 if n <= profile.short_cutoff else qmax
    ia = ir = 0
    for q, end, la, lr in zip(qs, ends, alen, rlen):
        asc = tuple(ascv[ia:ia + la])
        R = SmallSet(rv[ir:ir + lr])
        ia += la
        ir += lr
        d.ext[q][end // d.F[q]] = MinSufExtender(end - (1 << q) + 1, end, asc, R)
    return d


def _blocks_section(out, blocks: BlockTable) -> None:
    ids: dict[int, int] = {}
    cells: list = []
    per_block = []
    for tbl in blocks.block_table:
        k = ids.get(id(tbl))
        if k is None:
            k = ids[id(tbl)] = len(ids)
            cells.extend(tbl)
        per_block.append(k)
    out.write(struct.pack("<QQI", len(per_block), len(ids), blocks.m))
    _write_array(out, per_block, "<u4")
    _write_array(out, cells, "<i4")


def _read_blocks(buf, tau: int) -> BlockTable:
    nblocks, ntables, m = _read_struct(buf, "<QQI")
    if m != 2 * tau:
        raise InvalidInput("block size does not match tau")
    per_block = _read_array(buf, nblocks, "<u4")
    cells = _read_array(buf, ntables * m * m, "<i4")
    tables = [cells[i * m * m:(i + 1) * m * m] for i in range(ntables)]
    b = BlockTable.__new__(BlockTable)
    b.tau = tau
    b.m = m
    b.block_table = [tables[k] for k in per_block]
    b.block_oid = list(per_block)
    b.tables = dict(enumerate(tables))
    return b


def index_to_bytes(engine: Engine) -> bytes:
    ms = engine.minsuf_index
    p = engine.profile
    header = json.dumps({
        "profile": {"kind": p.kind, "tau": p.tau, "short_cutoff": p.short_cutoff},
        "seed": engine.seed,
        "rmq": engine.rmq,
    }, sort_keys=True).encode()
    out = io.BytesIO()
    out.write(INDEX_MAGIC)
    out.write(struct.pack("<BI", VERSION, len(header)))
    out.write(header)
    blob = esa_to_bytes(engine.esa)
    out.write(struct.pack("<Q", len(blob)))
    out.write(blob)
    _dist_section(out, ms.dist)
    _blocks_section(out, ms.blocks)
    return out.getvalue()


def index_from_bytes(data: bytes) -> Engine:
    buf = io.BytesIO(data)
    if buf.read(len(INDEX_MAGIC)) != INDEX_MAGIC:
        raise InvalidInput("not an index file (bad magic)")
    version, hlen = _read_struct(buf, "<BI")
    if version != VERSION:
        raise InvalidInput(f"unsupported index version {version}")
    try:
        header = json.loads(buf.read(hlen).decode())
        pr = header["profile"]
        profile = TierProfile(pr["kind"], int(pr["tau"]), int(pr["short_cutoff"]))
        seed = int(header["seed"])
        rmq = header.get("rmq", "sparse")
    except (ValueError, KeyError, TypeError) as exc:
        raise InvalidInput(f"bad index header: {exc}") from None
    (blen,) = _read_struct(buf, "<Q")
    e = esa_from_bytes(buf.read(blen), rmq)
    dist = _read_dist(buf, profile, e.n)
    blocks = _read_blocks(buf, profile.tau)
    return Engine(e.text, profile, seed=seed, rmq=rmq, esa=e, dist=dist, blocks=blocks)


def save_index(engine: Engine, path) -> int:
    data = index_to_bytes(engine)
    with open(path, "wb") as f:
        f.write(data)
    return len(data)


def load_index(path) -> Engine:
    with open(path, "rb") as f:
        return index_from_bytes(f.read())
