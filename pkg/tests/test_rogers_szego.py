from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpqdeform.deformations import Params, Scheme, binomial
from rpqdeform.errors import MissingPhiTriple
from rpqdeform.exactnum import X, Y, RationalFunction2
from rpqdeform.qcalculus import ZPoly
from rpqdeform.rogers_szego import (
    RsFamily,
    check_nilpotency,
    check_q_limit,
    check_recurrence,
    rs_difference_check,
    rs_direct,
    rs_recurrence,
)

from .conftest import BUILTINS
from .strategies import params


def test_direct_examples():
    par = Params(2, F(1, 2))
    assert rs_direct(Scheme.js(), par, 0) == ZPoly.one()
    assert rs_direct(Scheme.js(), par, 1) == ZPoly([1, 1])
    assert rs_direct(Scheme.js(), Params(1, 2), 2) == ZPoly([1, 3, 1])
    assert rs_direct(Scheme.js(), par, 2) == ZPoly([1, F(5, 2), 1])


def test_recurrence_examples():
    par = Params(2, F(1, 2))
    assert rs_recurrence(Scheme.js(), par, 1) == ZPoly([1, 1])
    assert rs_recurrence(Scheme.js(), par, 2) == ZPoly([1, F(5, 2), 1])
    assert check_recurrence(Scheme.quesne(), Params(2, 3), 12).ok


def test_recurrence_needs_phi():
    with pytest.raises(MissingPhiTriple):
        rs_recurrence(Scheme.custom(RationalFunction2(X - Y)), Params(2, 1), 3)


def test_difference_examples():
    assert rs_difference_check(Scheme.js(), Params(2, F(1, 2)), 12).ok
    assert rs_difference_check(Scheme.hk(1, 2), Params(2, F(1, 3)), 8).ok


@given(params, st.sampled_from(BUILTINS + [Scheme.hk(0, 0), Scheme.hk(-1, 3)]))
def test_recurrence_at_random_points(par, s):
    assert check_recurrence(s, par, 7).ok
    assert rs_difference_check(s, par, 7).ok


@given(params, st.sampled_from(BUILTINS), st.integers(0, 9))
def test_family_shape(par, s, n):
    h = rs_direct(s, par, n)
    assert h.degree == n
    assert h.coeff(0) == h.coeff(n) == 1
    for k in range(n + 1):
        assert h.coeff(k) == h.coeff(n - k) == binomial(s, par, n, k)


@pytest.mark.parametrize("q", [F(1, 2), F(3), F(2, 7)])
def test_q_limit(q):
    assert check_q_limit(q, 12).ok


def test_nilpotency():
    assert check_nilpotency(Scheme.js(), Params(2, F(1, 2)), 8).ok
    assert check_nilpotency(Scheme.hk(1, 2), Params(2, F(1, 3)), 8).ok


def test_perturbed_family_is_caught_and_isolated():
    s, par = Scheme.js(), Params(2, F(1, 2))
    fam = RsFamily(s, par)
    bad = fam.perturbed(4, 2, F(1, 100))
    assert not check_recurrence(s, par, 6, bad).ok
    assert not rs_difference_check(s, par, 6, bad).ok
    assert check_recurrence(s, par, 6, fam).ok
