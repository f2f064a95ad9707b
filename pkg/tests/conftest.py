import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from kequal.oracle import partitions
from kequal.series import CycleIndexSeries, LaurentCoeff, from_partition

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def report():
    """Record one acceptance line; printed in the terminal summary."""

    def record(name: str, passed: bool, detail: str = ""):
        _ACCEPTANCE.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))


def monomials_up_to(trunc, min_card=0):
    return [from_partition(mu) for n in range(min_card, trunc + 1) for mu in partitions(n)]


small_ints = st.integers(-2, 2).filter(bool)


@st.composite
def laurent_coeffs(draw, max_terms=2, refined=False):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        e = (draw(st.integers(-1, 2)),
             draw(st.integers(-1, 1)) if refined else 0,
             draw(st.integers(0, 1)) if refined else 0)
        terms[e] = Fraction(draw(small_ints), draw(st.sampled_from([1, 1, 2, 3])))
    return LaurentCoeff(terms)


@st.composite
def series(draw, trunc=4, min_card=0, max_terms=5, refined=False, constant=None):
    pool = monomials_up_to(trunc, max(min_card, 1 if constant is not None else 0))
    chosen = draw(st.lists(st.sampled_from(pool), max_size=max_terms, unique=True))
    terms = {m: draw(laurent_coeffs(refined=refined)) for m in chosen}
    if constant is not None:
        terms[()] = constant
    return CycleIndexSeries(terms, trunc)


def random_series(rng: random.Random, trunc, min_card=0, max_terms=4, constant=None, refined=False):
    """Plain-``random`` twin of the ``series`` strategy, for fixed-count acceptance runs."""
    pool = monomials_up_to(trunc, max(min_card, 1 if constant is not None else 0))
    terms = {}
    for m in rng.sample(pool, min(len(pool), rng.randint(1, max_terms))):
        e = (rng.randint(-1, 2), rng.randint(-1, 1) if refined else 0, rng.randint(0, 1) if refined else 0)
        terms[m] = LaurentCoeff({e: rng.choice([-2, -1, 1, 2])})
    if constant is not None:
        terms[()] = constant
    return CycleIndexSeries(terms, trunc)
