import pytest
from hypothesis import settings, strategies as st

from monres.corpus import generate_corpus
from monres.ideal import MonIdeal, minimalize

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus():
    return [d.ideal for d in generate_corpus(2, 4)]


def I(*gens):
    return MonIdeal.from_gens(gens)


@st.composite
def artinian_ideals(draw, n=None, max_exp=4, max_extra=5):
    """Artinian ideals: pure powers of every variable plus a few random monomials."""
    if n is None:
        n = draw(st.integers(2, 3))
    gens = []
    for i in range(n):
        e = [0] * n
        e[i] = draw(st.integers(1, max_exp))
        gens.append(tuple(e))
    extra = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), max_size=max_extra))
    gens += [e for e in extra if any(e)]
    return minimalize(gens, n)
