from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from rpqdeform.deformations import (
    Kind,
    Params,
    Scheme,
    binomial,
    domain_violations,
    dump_scheme_document,
    factorial,
    gaussian_binomial,
    load_scheme_document,
    number,
    quesne_bridge_scalar,
    shifted_factorial,
    verify_binomial_identities,
    verify_number_identities,
    verify_reductions,
    verify_theorem_premises,
)
from rpqdeform.errors import (
    MissingPhiTriple,
    NegativeArgument,
    OutOfRange,
    SchemeError,
    SingularParameters,
    UnsupportedScheme,
)
from rpqdeform.exactnum import X, Y, RationalFunction2, evaluate

from .conftest import BUILTINS
from .strategies import params

ALL_BUILTINS = BUILTINS + [Scheme.hk(0, 0), Scheme.hk(-1, 3)]


def heine(q, n):
    return sum((q ** k for k in range(n)), F(0))


# -- oracle examples ---------------------------------------------------------

def test_js_number_examples():
    assert number(Scheme.js(), Params(2, 1), 3) == 7
    assert number(Scheme.js(), Params(1, F(1, 2)), 3) == F(7, 4)


def test_quesne_number_example():
    p, q = F(2), F(3)
    expected = (p ** 2 - q ** -2) / (q - 1 / p)
    assert expected == p * (p * q + 1) / q ** 2 == F(14, 9)
    assert number(Scheme.quesne(), Params(p, q), 2) == F(14, 9)


def test_cj_r_evaluation_example():
    par = Params(2, F(1, 3))
    r = Scheme.cj().R(par)
    assert evaluate(r, par.p ** 3, par.q ** 3) == F(19, 36)
    assert number(Scheme.cj(), par, 3) == F(19, 36)


def test_factorial_examples():
    assert factorial(Scheme.js(), Params(2, 1), 3) == 21
    assert factorial(Scheme.js(), Params(1, F(1, 2)), 2) == F(3, 2)


def test_binomial_examples():
    q = F(2)
    assert binomial(Scheme.js(), Params(1, q), 4, 2) == (1 + q ** 2) * (1 + q + q ** 2) == 35
    assert binomial(Scheme.js(), Params(2, F(1, 2)), 2, 1) == F(5, 2)


def test_shifted_factorial_examples():
    par = Params(2, 3)
    assert shifted_factorial(2, 1, par, 2) == 1
    assert shifted_factorial(F(5), F(2), par, 1) == 3
    assert shifted_factorial(1, 1, Params(2, 2), 3) == 0
    assert shifted_factorial(7, 1, par, 0) == 1
    with pytest.raises(NegativeArgument):
        shifted_factorial(1, 1, par, -1)


def test_gaussian_binomial_matches_product_formula():
    x = F(3)
    for n in range(6):
        for k in range(n + 1):
            num = den = F(1)
            for i in range(k):
                num *= 1 - x ** (n - i)
                den *= 1 - x ** (i + 1)
            assert gaussian_binomial(x, n, k) == num / den


def test_js_equal_parameters_uses_sum_form():
    # (p^n - q^n)/(p - q) is 0/0 here; the limit is n p^(n-1)
    assert number(Scheme.js(), Params(3, 3), 4) == 4 * 27


def test_negative_js_numbers():
    par = Params(2, F(1, 3))
    for m in range(1, 6):
        expected = (par.p ** -m - par.q ** -m) / (par.p - par.q)
        assert number(Scheme.js(), par, -m) == expected


def test_quesne_numbers_at_pq_one():
    # R's denominator q - 1/p vanishes, the removable singularity is filled in
    par = Params(2, F(1, 2))
    for n in range(6):
        expected = F(2) / F(1, 2) * sum((F(2) ** (n - 1 - k) * F(2) ** k for k in range(n)), F(0))
        assert number(Scheme.quesne(), par, n) == expected
    with pytest.raises(SingularParameters):
        Scheme.quesne().R(par)


# -- errors ------------------------------------------------------------------

def test_errors():
    par = Params(2, F(1, 2))
    with pytest.raises(NegativeArgument):
        factorial(Scheme.js(), par, -1)
    with pytest.raises(OutOfRange):
        binomial(Scheme.js(), par, 3, 4)
    with pytest.raises(OutOfRange):
        binomial(Scheme.js(), par, 3, -1)
    with pytest.raises(ValueError):
        Params(0, 1)
    with pytest.raises(ValueError):
        Params(1, "-1/2")


def test_scheme_construction_checks():
    with pytest.raises(SchemeError):
        Scheme.hk(1, 1, RationalFunction2(X + Y))
    with pytest.raises(SchemeError):
        Scheme.custom(RationalFunction2(X + Y))
    with pytest.raises(SchemeError):
        Scheme.custom(RationalFunction2(X - Y), [RationalFunction2(X)])
    with pytest.raises(MissingPhiTriple):
        Scheme.custom(RationalFunction2(X - Y)).phi_triple()


def test_custom_scheme_has_no_identity_suite():
    s = Scheme.custom(RationalFunction2(X - Y))
    par = Params(2, F(1, 2))
    assert number(s, par, 3) == F(8) - F(1, 8)
    with pytest.raises(UnsupportedScheme):
        verify_number_identities(s, par, 3)
    with pytest.raises(UnsupportedScheme):
        verify_binomial_identities(s, par, 3)


def test_kind_parse():
    assert Kind.parse("quesne") is Kind.QUESNE
    assert Kind.parse("HK") is Kind.HK
    assert Kind.parse("custom") is Kind.CUSTOM
    with pytest.raises(ValueError):
        Kind.parse("nope")


@pytest.mark.parametrize("s", ALL_BUILTINS + [
    Scheme.hk(1, 2, RationalFunction2(X * Y)),
    Scheme.custom(RationalFunction2(X - Y, 2), [RationalFunction2(X)] * 2 + [RationalFunction2(X - Y)]),
], ids=str)
def test_scheme_document_round_trip(s):
    par = Params(F(5, 2), F(1, 3))
    s2, par2 = load_scheme_document(dump_scheme_document(s, par))
    assert s2 == s and par2 == par
    assert hash(s2) == hash(s)


def test_scheme_document_example_layout():
    doc = {"kind": "HK", "mu": 1, "nu": 2, "h": {"num": [[0, 0, "1"]], "den": [[0, 0, "1"]]},
           "p": "2/1", "q": "1/3"}
    s, par = load_scheme_document(doc)
    assert s == Scheme.hk(1, 2) and par == Params(2, F(1, 3))
    with pytest.raises(SchemeError):
        load_scheme_document({"kind": "CustomR"})


def test_domain_violations():
    assert domain_violations(Scheme.js(), Params(2, F(1, 2))) == []
    assert domain_violations(Scheme.quesne(), Params(2, 3))
    assert any("pq" in msg for msg in domain_violations(Scheme.hk(1, 2), Params(3, 2)))


# -- properties --------------------------------------------------------------

@given(params, st.sampled_from(ALL_BUILTINS))
def test_zero_number_and_unit_factorial(par, s):
    assert number(s, par, 0) == 0
    assert factorial(s, par, 0) == 1


@given(params, st.sampled_from(ALL_BUILTINS), st.integers(0, 7), st.data())
def test_binomial_symmetry(par, s, n, data):
    k = data.draw(st.integers(0, n))
    try:
        assert binomial(s, par, n, k) == binomial(s, par, n, n - k)
    except SingularParameters:
        assume(False)


@given(params, st.integers(-6, 10))
def test_cj_is_js_with_inverted_p(par, n):
    assert number(Scheme.cj(), par, n) == number(Scheme.js(), Params(1 / par.p, par.q), n)


@given(params, st.integers(0, 10))
def test_quesne_bridge(par, n):
    c = quesne_bridge_scalar(par.p, par.q)
    assert number(Scheme.js(), Params(par.p, 1 / par.q), n) == c * number(Scheme.quesne(), par, n)


@given(params, st.integers(-6, 10))
def test_trivial_hk_is_quesne(par, n):
    assert number(Scheme.hk(0, 0), par, n) == number(Scheme.quesne(), par, n)


@given(st.builds(F, st.integers(1, 9), st.integers(1, 6)), st.integers(0, 10))
def test_js_at_unit_p_is_heine(q, n):
    assert number(Scheme.js(), Params(1, q), n) == heine(q, n)


@given(params, st.sampled_from(ALL_BUILTINS), st.integers(1, 8))
def test_numbers_agree_with_r_where_defined(par, s, n):
    try:
        r = s.R(par)
        value = evaluate(r, par.p ** n, par.q ** n)
    except (SingularParameters, ZeroDivisionError):
        assume(False)
    assert number(s, par, n) == value


@given(params, st.sampled_from(ALL_BUILTINS))
def test_number_identities_hold_at_random_points(par, s):
    assert verify_number_identities(s, par, 5).ok


@given(params, st.sampled_from(ALL_BUILTINS))
def test_binomial_identities_hold_at_random_points(par, s):
    try:
        rep = verify_binomial_identities(s, par, 5)
    except SingularParameters:
        assume(False)
    assert rep.ok


@given(params)
def test_reductions_at_random_points(par):
    assert verify_reductions(par, 6).ok


# -- identity suites -----------------------------------------------------------

def test_number_suite_examples():
    for s, par in [(Scheme.js(), Params(2, F(1, 2))), (Scheme.quesne(), Params(2, 3))]:
        rep = verify_number_identities(s, par, 8)
        assert rep.ok and rep.checked > 100


def test_binomial_suite_examples():
    assert verify_binomial_identities(Scheme.js(), Params(3, 2), 8).ok
    assert verify_binomial_identities(Scheme.hk(1, 2), Params(2, F(1, 3)), 6).ok


def test_premise_examples():
    assert verify_theorem_premises(Scheme.js(), Params(2, F(1, 2)), 10).ok
    assert verify_theorem_premises(Scheme.quesne(), Params(2, 3), 10).ok
    rep = verify_theorem_premises(Scheme.js(), Params(2, 2), 4)
    assert [f.identity for f in rep.failures] == ["phi3(p,q) != 0"]


def test_hk_premises_hold_with_equal_phi1_phi2():
    for par in [Params(2, F(1, 3)), Params(3, 2), Params(F(5, 2), F(3, 2))]:
        for mu, nu in [(1, 2), (0, 0), (-1, 3), (2, -1)]:
            assert verify_theorem_premises(Scheme.hk(mu, nu), par, 8).ok


def test_hk_phi2_with_shifted_exponents_breaks_the_premise():
    """phi2 = x^-mu y^(nu-1) does not satisfy the binomial premise; phi2 = phi1 does."""
    par = Params(2, F(1, 3))
    hk = Scheme.hk(1, 2)
    phi1, _, phi3 = hk.phi_triple()
    shifted_phi2 = RationalFunction2(X ** -1 * Y)
    broken = Scheme.custom(hk.R(par), [phi1, shifted_phi2, phi3])
    fixed = Scheme.custom(hk.R(par), [phi1, phi1, phi3])
    for n in range(8):
        assert number(broken, par, n) == number(hk, par, n)
    assert not verify_theorem_premises(broken, par, 6).ok
    assert verify_theorem_premises(fixed, par, 6).ok


def _corrupt(s, par, at, delta=1):
    return lambda n: number(s, par, n) + (delta if n == at else 0)


@pytest.mark.parametrize("s", BUILTINS, ids=str)
@pytest.mark.parametrize("at", [1, 2, 5])
def test_number_mutation_is_detected(s, at):
    par = Params(2, F(1, 3))
    assert not verify_number_identities(s, par, 8, numbers=_corrupt(s, par, at)).ok
    assert not verify_binomial_identities(s, par, 8, numbers=_corrupt(s, par, at)).ok


def test_failure_records_are_serializable():
    par = Params(2, F(1, 3))
    rep = verify_number_identities(Scheme.js(), par, 3, numbers=_corrupt(Scheme.js(), par, 2))
    data = rep.to_json()
    assert data["checked"] == rep.checked
    assert all(isinstance(f["lhs"], str) and "identity" in f for f in data["failures"])
