import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from unigf.polyring import MPoly

ROOT = Path(__file__).resolve().parent.parent
BFILES = ROOT / "data" / "bfiles"

small_ints = st.integers(min_value=-6, max_value=6)
exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 5)


@st.composite
def polys(draw, max_terms=4):
    terms = draw(st.dictionaries(exponents, small_ints, max_size=max_terms))
    return MPoly(terms)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@pytest.fixture
def bfile_dir():
    return BFILES


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance") or sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
