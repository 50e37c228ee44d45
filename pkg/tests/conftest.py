from fractions import Fraction as F

import pytest
from hypothesis import settings

from rpqdeform import Params, Scheme

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SAMPLE_POINTS = [Params(2, F(1, 2)), Params(3, 2), Params(2, F(1, 3)),
                 Params(F(5, 2), F(3, 2)), Params(7, F(1, 5))]

BUILTINS = [Scheme.js(), Scheme.cj(), Scheme.quesne(), Scheme.hk(1, 2)]


def point_id(par):
    return f"p={par.p},q={par.q}"


@pytest.fixture(params=BUILTINS, ids=lambda s: s.name)
def builtin(request):
    return request.param


@pytest.fixture(params=SAMPLE_POINTS, ids=point_id)
def point(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
