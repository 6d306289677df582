import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pasp.generators import paper_fixture, random_pasp, random_profile

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def thm4():
    return paper_fixture("thm4")


@pytest.fixture
def thm5():
    return paper_fixture("thm5")


@pytest.fixture
def sec3():
    return paper_fixture("example-sec3")


@pytest.fixture
def intro():
    return paper_fixture("intro")


def shapes(max_parties=4, max_size=3, max_voters=8, min_parties=1):
    return st.tuples(
        st.integers(0, 2**32 - 1),
        st.lists(st.integers(1, max_size), min_size=min_parties, max_size=max_parties),
        st.integers(0, max_voters),
    )


def pasp_elections(**kw):
    """Random PASP elections (without the generator's axis)."""
    return shapes(**kw).map(lambda t: random_pasp(*t)[0])


def any_elections(**kw):
    return shapes(**kw).map(lambda t: random_profile(*t))
