from fractions import Fraction as F

import sys
import hypothesis
import pytest

from mrep.representations import ExponentMatrix, MRep, ZRep, identity, lower_tri

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("ci")

PARALLELOGRAM = [(F(-2), F(-1)), (F(0), F(-1)), (F(0), F(1)), (F(2), F(1))]
HOUSE = [(0, 0), (0, 2), (2, 2), (2, 0), (1, 3)]
TRIANGLE = [(0, 0), (2, 0), (1, 2)]
SQUARE2 = [(0, 0), (0, 2), (2, 2), (2, 0)]


def p1_zrep():
    return ZRep((0, 0), [(1, 0), (-1, -1)], ExponentMatrix.single(identity(2)))


P2_EXPONENTS = [[1, 0, 0, 1, 0], [0, 1, 0, 0, 1], [0, 0, 1, 1, 1]]


def p2_zrep(link=F(1, 2)):
    """Five-generator form of the parallelogram; ``link`` is the x
    component of the generator carrying only the last factor."""
    h = F(1, 2)
    gens = [(-h, -h), (-h, -h), (link, 0), (-h, -h), (h, h)]
    return ZRep((0, 0), gens, ExponentMatrix.from_dense(P2_EXPONENTS))


def triangle_chain():
    return MRep((1, 2), [(-2, 0), (1, -2)], ExponentMatrix.single(lower_tri(2)))


@pytest.fixture
def triangle():
    return triangle_chain()


@pytest.fixture
def parallelogram():
    return p1_zrep()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number][1])
