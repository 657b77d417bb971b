import random

from hypothesis import HealthCheck, settings

from lyx.engine import Engine
from lyx.esa import ESA
from lyx.minsuf import test_profile
from lyx.text_model import load_text, text_from_symbols

settings.register_profile(
    "lyx", deadline=None, max_examples=150,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("lyx")


def text_of(s):
    """Text from a str/bytes (byte mode) or from a sequence of small ints."""
    if isinstance(s, (str, bytes)):
        return load_text(s)
    return text_from_symbols(list(s))


def esa_of(s):
    return ESA(text_of(s))


def engine_of(s, profile=None, seed=0):
    return Engine(text_of(s), profile or test_profile(), seed=seed)


def random_symbols(rng: random.Random, n: int, sigma: int):
    return [rng.randrange(sigma) for _ in range(n)]


def random_kfragment(rng: random.Random, n: int, kmax: int, maxlen: int):
    out = []
    for _ in range(rng.randint(1, kmax)):
        a = rng.randint(1, n)
        out.append((a, rng.randint(a, min(n, a + maxlen - 1))))
    return tuple(out)


def materialize(t, w):
    """Letters of a k-fragment; the sentinel becomes +infinity."""
    out = []
    for a, b in w:
        if (a, b) == (0, 0):
            out.append(float("inf"))
        else:
            out.extend(t.symbols[a - 1:b])
    return tuple(out)


# one summary line per acceptance criterion, printed at the end of the run
CRITERIA_LINES: list[str] = []


def report_criterion(number: int, ok: bool, detail: str, soft: bool = False) -> None:
    flag = "PASS" if ok else ("WARN" if soft else "FAIL")
    line = f"criterion {number:2d}: {flag}  {detail}"
    CRITERIA_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES):
            terminalreporter.write_line(line)
