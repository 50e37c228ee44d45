from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from rpqdeform.deformations import Params, Scheme, number
from rpqdeform.errors import SingularParameters, ZeroPhi
from rpqdeform.exactnum import X, Y, RationalFunction2
from rpqdeform.qcalculus import (
    OperatorKind,
    OperatorSpec,
    ZPoly,
    phi_operator,
    pq_derivative,
    rpq_derivative,
    scale,
)

from .conftest import BUILTINS
from .strategies import nonzero_fractions, params, small_fractions, zpolys

P2Q_HALF = Params(2, F(1, 2))


def test_zpoly_basics():
    f = ZPoly([1, 0, 3])
    assert f.degree == 2 and f.coeffs() == {0: 1, 2: 3}
    assert ZPoly().degree == float("-inf")
    assert ZPoly({1: 0}).is_zero()
    assert f(2) == 13
    with pytest.raises(ValueError):
        ZPoly({-1: 1})


@given(zpolys)
def test_zpoly_json_round_trip(f):
    assert ZPoly.from_json(f.to_json()) == f


def test_zpoly_json_is_ascending():
    assert ZPoly({3: F(1, 2), 0: 1}).to_json() == [[0, "1"], [3, "1/2"]]


def test_scale_examples():
    f = ZPoly([1, 1])
    assert scale(f, 2) == ZPoly([1, 2])
    assert scale(f, 1) == f


@given(zpolys, nonzero_fractions)
def test_scale_inverse(f, c):
    assert scale(scale(f, c), 1 / c) == f


@given(zpolys, params)
def test_p_and_q_commute(f, par):
    assert scale(scale(f, par.p), par.q) == scale(scale(f, par.q), par.p)


def test_pq_derivative_examples():
    p, q = P2Q_HALF.p, P2Q_HALF.q
    assert pq_derivative(ZPoly.monomial(2), P2Q_HALF) == ZPoly.monomial(1, p + q)
    assert pq_derivative(ZPoly.monomial(0, 7), P2Q_HALF).is_zero()
    assert pq_derivative(ZPoly.monomial(3), P2Q_HALF) == ZPoly.monomial(2, F(21, 4))
    assert (p ** 3 - q ** 3) / (p - q) == F(21, 4)


def test_rpq_derivative_examples():
    for s in BUILTINS:
        assert rpq_derivative(ZPoly.one(), s, P2Q_HALF).is_zero()
    assert rpq_derivative(ZPoly.monomial(2), Scheme.quesne(), Params(2, 3)) == ZPoly.monomial(1, F(14, 9))


@given(zpolys, params)
def test_js_derivative_is_the_pq_derivative(f, par):
    assert rpq_derivative(f, Scheme.js(), par) == pq_derivative(f, par)


@given(zpolys, params, st.sampled_from(BUILTINS + [Scheme.hk(-1, 3)]))
def test_factorized_forms_agree(f, par, s):
    assume(par.p != par.q)
    try:
        s.R(par)
    except SingularParameters:
        assume(False)
    eigen = rpq_derivative(f, s, par)
    assert rpq_derivative(f, s, par, form="left") == eigen
    assert rpq_derivative(f, s, par, form="right") == eigen


@given(zpolys, zpolys, small_fractions, params, st.sampled_from(BUILTINS))
def test_linearity(f, g, c, par, s):
    combo = f + c * g
    assert rpq_derivative(combo, s, par) == rpq_derivative(f, s, par) + c * rpq_derivative(g, s, par)
    assert pq_derivative(combo, par) == pq_derivative(f, par) + c * pq_derivative(g, par)
    assert scale(combo, par.p) == scale(f, par.p) + c * scale(g, par.p)


@given(zpolys, params, st.sampled_from(BUILTINS))
def test_derivative_lowers_degree(f, par, s):
    assume(f.degree >= 1)
    lead = number(s, par, f.degree)
    assume(lead != 0)
    assert rpq_derivative(f, s, par).degree == f.degree - 1


def test_phi_operator_examples():
    assert phi_operator(ZPoly.monomial(2), RationalFunction2(X), P2Q_HALF) == ZPoly.monomial(2, 4)
    phi = RationalFunction2(X ** -1 * Y ** 0)
    par = Params(2, 3)
    for k in range(5):
        assert phi_operator(ZPoly.monomial(k), phi, par) == ZPoly.monomial(k, F(1, 2) ** k)
    assert phi_operator(ZPoly.one(), RationalFunction2(X), par) == ZPoly.one()


def test_phi_operator_rejects_zero():
    with pytest.raises(ZeroPhi):
        phi_operator(ZPoly([1, 1]), RationalFunction2(X - Y), Params(2, 2))


def test_operator_spec():
    f = ZPoly([1, 2, 3])
    par = Params(3, F(1, 2))
    assert OperatorSpec(OperatorKind.SCALE_P).apply(f, par) == scale(f, 3)
    assert OperatorSpec(OperatorKind.SCALE_INV_Q).apply(f, par) == scale(f, 2)
    assert OperatorSpec(OperatorKind.NUMBER).apply(f, par) == ZPoly([0, 2, 6])
    assert OperatorSpec(OperatorKind.PQ_DERIVATIVE).apply(f, par) == pq_derivative(f, par)
    assert (OperatorSpec(OperatorKind.RPQ_DERIVATIVE).apply(f, par, Scheme.cj())
            == rpq_derivative(f, Scheme.cj(), par))
    assert OperatorSpec(OperatorKind.PHI, RationalFunction2(Y)).apply(f, par) == scale(f, par.q)
    with pytest.raises(ValueError):
        OperatorSpec(OperatorKind.PHI)
