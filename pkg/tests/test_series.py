import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from menage_kit.series import (
    TruncatedSeries,
    X,
    binomial_power,
    catalan_number,
    catalan_series,
    eta,
    factorial_series,
    menage_U,
    menage_U_piecewise,
    menage_V,
    verify_appendix,
    verify_eta,
    verify_lemma3,
    verify_theorem1_ordinary,
    verify_theorem1_straight,
)

S = TruncatedSeries
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def series(order):
    return st.lists(fracs, min_size=order + 1, max_size=order + 1).map(S)


def test_catalan_series_examples():
    assert catalan_series(0).coeffs == (1,)
    assert catalan_series(5).coeffs == (1, 1, 2, 5, 14, 42)


def test_catalan_recurrence():
    c = catalan_series(20)
    for k in range(20):
        assert c[k + 1] == sum(c[j] * c[k - j] for j in range(k + 1))
    assert [catalan_number(k) for k in range(12)] == [oracles.catalan(k) for k in range(12)]


def test_factorial_series():
    assert factorial_series(0).coeffs == (1,)
    assert factorial_series(4).coeffs == (1, 1, 2, 6, 24)
    assert factorial_series(20)[20] == 2432902008176640000


def test_basic_ops():
    assert (S([1, 1], 2) * S([1, 1], 2)).coeffs == (1, 2, 1)
    one_plus_x = S([1, 1])
    assert (one_plus_x + 1).coeffs == (2, 1)
    assert (1 - one_plus_x).coeffs == (0, -1)
    assert (one_plus_x.scalar(Fraction(1, 2))).coeffs == (Fraction(1, 2), Fraction(1, 2))
    assert (S([1, 1], 3) ** 3).coeffs == (1, 3, 3, 1)
    assert X(3).shift(2).coeffs == (0, 0, 0, 1)


def test_mismatched_orders_truncate():
    a, b = S([1, 2, 3]), S([1, 1])
    assert (a + b).order == 1
    assert (a * b).coeffs == (1, 3)


def test_derivative():
    assert catalan_series(4).derivative().coeffs == (1, 4, 15, 56)
    assert S([7]).derivative().coeffs == (0,)


def test_reciprocal():
    c = catalan_series(10)
    assert 1 / (1 - X(10) * c) == c
    geo = (1 - X(5)).reciprocal()
    assert geo.coeffs == (1,) * 6
    with pytest.raises(ZeroDivisionError):
        X(3).reciprocal()


def test_negative_power():
    assert (S([1, 1], 4) ** -1).coeffs == (1, -1, 1, -1, 1)


def test_compose():
    # (1+x) o (x + x^2) = 1 + x + x^2
    assert S([1, 1], 3).compose(S([0, 1, 1], 3)).coeffs == (1, 1, 1, 0)
    with pytest.raises(ValueError):
        X(3).compose(S([1, 1], 3))


def test_binomial_power():
    assert binomial_power(1, 3, 4).coeffs == (1, 3, 3, 1, 0)
    assert binomial_power(1, -1, 3).coeffs == (1, -1, 1, -1)
    assert binomial_power(2, -2, 2).coeffs == (1, -4, 12)


def test_format_and_json():
    s = S([1, -2, Fraction(1, 3)])
    assert s.format() == "1 - 2*x + 1/3*x^2 [truncated]"
    assert S.from_json(s.to_json()) == s
    assert s.to_json() == '["1", "-2", "1/3"]'


def test_order_errors():
    with pytest.raises(ValueError):
        S([1], -1)
    with pytest.raises(ValueError):
        catalan_series(-1)
    with pytest.raises(ValueError):
        S([1, 2]).truncate(3)


@given(series(6), series(6), series(6))
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(series(6), series(6))
def test_mul_matches_naive_product(a, b):
    assert list((a * b).coeffs) == oracles.series_coeffs_product([a.coeffs, b.coeffs], 6)


@given(series(6))
def test_reciprocal_inverts(a):
    if a[0] == 0:
        return
    assert a * a.reciprocal() == S.constant(1, 6)


@given(series(5), series(5))
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_menage_values():
    assert [menage_V(n) for n in range(9)] == [1, 0, 0, 1, 3, 16, 96, 675, 5413]
    assert [menage_U(n) for n in range(9)] == [1, 0, 0, 1, 2, 13, 80, 579, 4738]
    assert all(menage_U(n) == menage_U_piecewise(n) for n in range(20))


@pytest.mark.parametrize("n", range(9))
def test_menage_closed_forms_vs_brute_force(n):
    assert menage_V(n) == oracles.count(n, oracles.straight)
    assert menage_U(n) == oracles.count(n, oracles.ordinary)


@pytest.mark.parametrize("order", [0, 1, 5, 12, 15])
def test_factorial_identities_pass(order):
    assert verify_theorem1_straight(order)
    assert verify_theorem1_ordinary(order)


def test_factorial_identity_mutations_are_caught():
    bad_v = verify_theorem1_straight(12, lambda n: menage_V(n) + (n == 4))
    assert not bad_v and bad_v.mismatch == 4
    assert "coefficient 4" in bad_v.line()
    bad_u = verify_theorem1_ordinary(12, lambda n: menage_U(n) + (n == 5))
    assert not bad_u and bad_u.mismatch == 5


@pytest.mark.parametrize("order", [1, 10, 15])
def test_catalan_functional_equations(order):
    assert verify_lemma3(order)


def test_functional_equations_reject_mutated_c():
    c = catalan_series(11)
    bumped = S(list(c.coeffs[:3]) + [c[3] + 1] + list(c.coeffs[4:]))
    assert not verify_lemma3(10, bumped)


def test_eta():
    assert eta(0) == 1
    assert eta(2) == 15 == catalan_series(3).derivative()[2]
    for order in (0, 10, 15):
        assert verify_eta(order)


@pytest.mark.parametrize("order", [0, 12, 15])
def test_closed_form_series_identities(order):
    report = verify_appendix(order)
    assert report, report.line()
    assert len(report.parts) == 5


def test_substitution_gives_catalan():
    z = X(12) * catalan_series(12) ** 2
    assert S([1, 1], 12).compose(z) == catalan_series(12)


def test_exact_big_integers():
    assert isinstance(menage_V(30), int) and menage_U(30) > 0
    assert factorial_series(25)[25] == math.factorial(25)
