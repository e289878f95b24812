from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twoside.exactmath import Poly, RatFunc

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example, HealthCheck.data_too_large]
)
settings.load_profile("default")

small_ints = st.integers(min_value=-5, max_value=5)
fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


@st.composite
def polys(draw, max_degree=4, nonzero=False):
    cs = draw(st.lists(fractions, min_size=0, max_size=max_degree + 1))
    p = Poly(cs)
    if nonzero and not p:
        p = Poly([draw(st.integers(1, 5))])
    return p


@st.composite
def ratfuncs(draw, max_degree=2, nonzero=False):
    num = draw(polys(max_degree, nonzero=nonzero))
    den = draw(polys(max_degree, nonzero=True))
    return RatFunc(num, den)


def t_power(k):
    return RatFunc.t() ** k


@pytest.fixture(autouse=True)
def _clean_degree_env(monkeypatch):
    # the CLI's --max-degree writes to the environment
    monkeypatch.delenv("TWOSIDE_MAX_DEGREE", raising=False)
    yield


# one line per acceptance criterion, shown at the end of the run
acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
