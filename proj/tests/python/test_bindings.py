"""Smoke tests for the catalan_exact extension module."""

import math
from fractions import Fraction

import pytest

import catalan_exact as ce


def catalan_oracle(n):
    return math.comb(2 * n, n) // (n + 1)


def test_closed_form_matches_comb_oracle():
    assert [ce.closed_form(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert ce.closed_form(9) == 4862
    for n in (0, 1, 17, 100, 321):
        assert ce.closed_form(n) == catalan_oracle(n)


def test_all_methods_agree():
    expected = [catalan_oracle(n) for n in range(65)]
    for method in ("closed", "segner", "touchard", "product"):
        assert ce.catalan_table(method, 64) == expected
    assert ce.cross_validate(64)["all_agree"] is True
    with pytest.raises(ValueError):
        ce.catalan_table("newton", 4)


def test_even_binomial_sum():
    for n in range(1, 40):
        assert ce.even_binomial_sum(n) == 2 ** (n - 1)
        assert ce.even_binomial_sum(n) == sum(
            math.comb(n, 2 * k) for k in range(n // 2 + 1)
        )
    with pytest.raises(ValueError):
        ce.even_binomial_sum(0)


def test_capacity_is_an_error():
    with pytest.raises(ValueError):
        ce.catalan_table("segner", 2_000_000)


def test_series_constructions():
    prefix = ce.fixed_point_series(4)
    assert prefix == [Fraction(v) for v in (1, 1, 2, 5, 14)]
    assert all(isinstance(c, Fraction) for c in prefix)
    assert ce.sqrt_formula_series(16) == ce.fixed_point_series(16)

    residual = ce.functional_equation_residual(64)
    assert residual["is_zero"] is True
    assert residual["first_failing_index"] is None
    assert residual["max_abs_coeff"] == Fraction(0)

    assert ce.verify_touchard_derivation(32, 16)["is_zero"] is True
    with pytest.raises(ValueError):
        ce.verify_touchard_derivation(32, 10)


def test_bounds_reports():
    assert ce.verify_upper_bound_induction(1, 200)["holds"] is True
    assert ce.verify_upper_bound_induction("1/100", 10)["first_violation"] == 0
    assert ce.minimal_inductive_constant() == Fraction(1)
    assert ce.verify_segner_upper_bound(100)["holds"] is True
    assert ce.verify_segner_upper_bound(100)["displayed_step_valid_up_to"] == 3
    assert ce.verify_lower_central_binomial(100)["holds"] is True
    assert ce.verify_lower_touchard(100)["holds"] is True


def test_radius_estimators():
    assert ce.ratio_test(4) == Fraction(3)
    assert ce.ratio_test(1000) == Fraction(2 * 2001, 1002)
    assert abs(ce.root_test(10) - 16796 ** 0.1) < 1e-9

    est = ce.radius_estimate(1000)
    assert est["touchard_only_bracket"] == (Fraction(1, 4), Fraction(1, 2))
    assert est["radius_point_estimate"] == Fraction(1002, 4002)
    assert 0.995 <= ce.asymptotic_ratio(1000) < 1.0


def test_singularity():
    a, b, c = [0, -1], [1], [-1]
    located = ce.locate_singularity(a, b, c)
    assert located["found_rational"] is True
    assert located["z_star"] == Fraction(1, 4)
    assert located["w_star"] == Fraction(2)

    assert ce.discriminant(a, b, c) == [Fraction(1), Fraction(-4)]
    assert ce.evaluate_curve(a, b, c, 0, 1) == Fraction(0)
    assert ce.regular_point_check(a, b, c, 0, 1) is True
    assert ce.regular_point_check(a, b, c, "1/4", 2) is False

    assert ce.locate_singularity([0, -1], [1], [-2])["z_star"] == Fraction(1, 8)
    assert ce.rational_roots([1, -5, 6]) == [Fraction(1, 3), Fraction(1, 2)]

    with pytest.raises(ValueError):
        ce.locate_singularity([0], [1], [-1])  # identically zero a(z)


def test_fractions_go_in_as_well_as_out():
    est = ce.verify_upper_bound_induction(Fraction(1, 2), 10)
    assert est["constant_A"] == Fraction(1, 2)
    assert est["holds"] is False  # C_0 = 1 > 1/2


def test_version():
    assert isinstance(ce.__version__, str) and ce.__version__
