from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from g2sub.algebra import DIM, AlgElement
from g2sub.scalars import FieldElement

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def field_elements(draw, max_terms=3):
    masks = draw(st.lists(st.integers(0, 7), max_size=max_terms, unique=True))
    return FieldElement({m: draw(small_fractions) for m in masks})


@st.composite
def nonzero_field_elements(draw):
    x = draw(field_elements())
    return x if x else FieldElement(Fraction(draw(st.integers(1, 5))))


@st.composite
def rational_elements(draw, max_support=4):
    """Sparse algebra elements with rational coordinates."""
    idx = draw(st.lists(st.integers(0, DIM - 1), min_size=1, max_size=max_support, unique=True))
    coords = [0] * DIM
    for i in idx:
        coords[i] = draw(st.integers(-3, 3))
    return AlgElement(coords)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
