import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from doodlekit import load_kishino
from doodlekit.gauss import SignedGaussCode, fresh_labels

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def codes(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    labels = list(itertools.islice(fresh_labels(), n))
    word = draw(st.permutations(labels * 2))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedGaussCode(word, dict(zip(labels, signs)))


@pytest.fixture(scope="session")
def kishino():
    return load_kishino()


KISHINO_LABELS = ("a1", "a2", "a3", "a4")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
