from fractions import Fraction

from hypothesis import settings, strategies as st

from iterant.iterants import Iterant
from iterant.scalars import Cyclotomic

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fraction = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def cyclotomics(order=12):
    deg = len(Cyclotomic.one(order).coeffs)
    return st.lists(small_fraction, min_size=deg, max_size=deg).map(lambda c: Cyclotomic(order, c))


def iterants(G, order=12):
    vec = st.lists(cyclotomics(order), min_size=G.degree, max_size=G.degree)
    return st.dictionaries(st.integers(0, G.order - 1), vec, max_size=G.order).map(
        lambda terms: Iterant(G, terms)
    )


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
