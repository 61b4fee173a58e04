import sys
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

# exact arithmetic on large germs has heavy-tailed timings; no per-example deadline
settings.register_profile("yano", deadline=None)
settings.load_profile("yano")

_ACCEPTANCE = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        _ACCEPTANCE.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)


@st.composite
def newton_pairs_lists(draw, max_g=3, max_n=48):
    """Valid Newton pair lists with ``prod p_k <= max_n``."""
    g = draw(st.integers(1, max_g))
    pairs = []
    n = 1
    for k in range(g):
        budget = max_n // n
        if budget < 2:
            break
        p = draw(st.integers(2, min(budget, 8)))
        lo = p + 1 if k == 0 else 1
        q = draw(st.integers(lo, lo + 20).filter(lambda v, p=p: gcd(p, v) == 1))
        pairs.append((p, q))
        n *= p
    return tuple(pairs)


def fractions(lo=-5, hi=5, max_den=12):
    return st.builds(
        lambda a, b: Fraction(a, b), st.integers(lo * max_den, hi * max_den), st.integers(1, max_den)
    )
