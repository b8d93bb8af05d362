import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from transmarkov.braid import BraidWord  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def braids(draw, min_strands=1, max_strands=6, max_len=20):
    n = draw(st.integers(min_strands, max_strands))
    if n == 1:
        return BraidWord(1, ())
    letters = draw(st.lists(
        st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
        max_size=max_len))
    return BraidWord(n, tuple(letters))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
