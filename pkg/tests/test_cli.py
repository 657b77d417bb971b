import csv
import io

import pytest

from lyx.cli import answer_line, main, run_queries
from lyx.engine import Engine
from lyx.minsuf import paper_profile
from lyx.serialize import INDEX_MAGIC
from lyx.text_model import load_text

BANANA_QUERIES = """\
MINSUF 1 6
MINROT 1 6
MAXROT 1 6
LYNDON 1 6
SIG 1 6
GMINSUF 2 1 3 4 6
CYCEQ 2 3 3 4
FP 1 6
# comment lines are skipped
MINSUF 0 3
BOGUS 1 2
MINSUF 1 x
GMINSUF 2 1 2
"""


@pytest.fixture
def banana(tmp_path):
    p = tmp_path / "banana.txt"
    p.write_bytes(b"banana")
    return p


def _run(capsys, argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_index_writes_magic_and_reports_stats(tmp_path, banana, capsys):
    out = tmp_path / "b.lyx"
    code, text, _ = _run(capsys, ["index", banana, "-o", out])
    assert code == 0
    assert out.read_bytes().startswith(INDEX_MAGIC)
    for key in ("n=6", "sigma=", "bytes=", "build_ms="):
        assert key in text


def test_token_mode_reports_distinct_token_count(tmp_path, capsys):
    p = tmp_path / "tok.txt"
    p.write_text("10 20 10 7\n7 99 10\n")
    code, text, _ = _run(capsys, ["index", p, "-o", tmp_path / "t.lyx", "--mode", "tokens"])
    assert code == 0 and "n=7" in text and "sigma=4" in text


def test_unreadable_path_exits_two(tmp_path, capsys):
    code, _, err = _run(capsys, ["index", tmp_path / "missing.txt", "-o", tmp_path / "o.lyx"])
    assert code == 2 and err
    code, _, err = _run(capsys, ["query", tmp_path / "missing.lyx", "-"])
    assert code == 2 and err


def test_query_answers_on_banana(tmp_path, banana, capsys):
    q = tmp_path / "q.txt"
    q.write_text(BANANA_QUERIES)
    code, text, _ = _run(capsys, ["query", banana, q])
    lines = text.splitlines()
    assert code == 0
    assert lines[:7] == ["6 1", "5", "2", "1^1 2^2 1^1", "5 1 0", "1", "1"]
    assert len(lines[7].split()[0]) == 16 and lines[7].split()[1] == "6"
    assert len(lines) == 12
    assert all(ln.startswith("ERR ") for ln in lines[8:])


def test_index_then_query_matches_in_memory(tmp_path, banana, capsys):
    body = "".join(f"MINSUF {l} {r}\nLYNDON {l} {r}\nFP {l} {r}\nMAXROT {l} {r}\n"
                   for l in range(1, 7) for r in range(l, 7))
    q = tmp_path / "q.txt"
    q.write_text(body)
    idx = tmp_path / "b.lyx"
    _run(capsys, ["index", banana, "-o", idx])
    _, from_index, _ = _run(capsys, ["query", idx, q])
    _, from_text, _ = _run(capsys, ["query", banana, q])
    _, threaded, _ = _run(capsys, ["query", idx, q, "--threads", "4"])
    assert from_index == from_text == threaded
    eng = Engine(load_text(b"banana"), paper_profile(6))
    assert from_index.splitlines() == run_queries(eng, body.splitlines())


def test_lines_are_answered_independently():
    eng = Engine(load_text(b"abracadabra"), paper_profile(11))
    lines = [f"MINSUF {l} {r}" for l in range(1, 12) for r in range(l, 12)]
    forward = run_queries(eng, lines)
    backward = run_queries(eng, lines[::-1])
    assert forward == backward[::-1]
    assert answer_line(eng, "MINSUF 5 99").startswith("ERR")


def test_verify_random_passes(capsys):
    code, text, _ = _run(capsys, ["verify", "--random", 256, 4, 42])
    assert code == 0
    assert text.count("PASS") == 6 and "FAIL" not in text


def test_verify_reports_injected_fault(capsys):
    code, text, _ = _run(capsys, ["verify", "--random", 40, 2, 1, "--suites", "minsuf,rotation",
                                  "--inject-fault", "minsuf-whole"])
    assert code == 1
    assert "minsuf: FAIL" in text and "rotation: PASS" in text
    assert "first failing case" in text and "MINSUF" in text
    code, text, _ = _run(capsys, ["verify", "--random", 40, 2, 1, "--suites", "rotation",
                                  "--inject-fault", "rotation-zero"])
    assert code == 1 and "rotation: FAIL" in text


def test_verify_text_file(banana, capsys):
    code, text, _ = _run(capsys, ["verify", banana])
    assert code == 0 and "FAIL" not in text


def test_verify_exhaustive_binary_length_12(capsys):
    code, text, _ = _run(capsys, ["verify", "--exhaustive", 12, 2])
    assert code == 0
    assert "FAIL" not in text and text.count("PASS") == 4


def test_bench_csv(capsys):
    code, text, _ = _run(capsys, ["bench", "--sizes", "10,11", "--queries", 500,
                                  "--build-sizes", "9,10", "--repeats", 1])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    query = [r for r in rows if r["kind"] == "query"]
    build = [r for r in rows if r["kind"] == "build"]
    assert {r["tier"] for r in query} == {"minsuf", "minsuf_logstar", "minsuf_log"}
    assert {int(r["n"]) for r in query} == {1024, 2048}
    assert all(int(r["max_calls"]) > 0 for r in query)
    tier3 = {int(r["max_calls"]) for r in query if r["tier"] == "minsuf"}
    assert len(tier3) == 1
    assert [int(r["n"]) for r in build] == [512, 1024]
    assert build[0]["build_ratio"] == "" and float(build[1]["build_ratio"]) > 0
