import numpy as np
import pytest
from hypothesis import strategies as st

angles = st.floats(min_value=0.0, max_value=2 * np.pi, allow_nan=False)
alphas = st.floats(min_value=0.0, max_value=np.pi, allow_nan=False)


def random_state(rng, dim):
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return z / np.linalg.norm(z)


@st.composite
def qubit_states(draw):
    a = draw(alphas)
    b = draw(angles)
    g = draw(angles)
    return np.exp(1j * g) * np.array([np.cos(a / 2), np.exp(1j * b) * np.sin(a / 2)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
