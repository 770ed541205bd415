import pytest
from hypothesis import settings, strategies as st

from majd.tableau import StandardTableau, enumerate_syt, partitions

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

SHAPES_UP_TO_7 = [shape for n in range(1, 8) for shape in partitions(n)]


@st.composite
def tableaux(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    shape = draw(st.sampled_from(list(partitions(n))))
    return draw(st.sampled_from(enumerate_syt(shape)))


@pytest.fixture
def S():
    """The (3,3,3) tableau of the worked HS inversion example."""
    return StandardTableau.parse("1,2,5/3,6,7/4,8,9")


@pytest.fixture
def ref333():
    """The (3,3,3) tableau whose maj_4 weighted pairs match the reference list."""
    return StandardTableau.parse("1,2,4/3,5,7/6,8,9")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
