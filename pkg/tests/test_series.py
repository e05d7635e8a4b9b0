import math
from fractions import Fraction

import pytest

from flatperm.closed_forms import avoiders, numbers
from flatperm.recurrences import PatternId, distribution_table
from flatperm.series import (DEFAULT_ORDER, MAX_ORDER, PowerSeries,
                             exp_series, expand_egf_12_3_avoid,
                             expand_egf_21_3_avoid, expand_G_r_31_2,
                             sqrt_series)


def test_arithmetic_basics():
    s = PowerSeries.from_coeffs([0, 1, 2, 3], 8)
    assert s.integrate().derive().agrees_with(s)
    geometric = PowerSeries.from_coeffs([1] * 10)
    assert (PowerSeries.from_coeffs([1, -1], 10) * geometric).coeffs \
        == (1,) + (0,) * 9
    assert PowerSeries.one(4).integrate().coeffs == (0, 1, 0, 0, 0)
    assert (PowerSeries.x(5) ** 2).coeffs == (0, 0, 1, 0, 0)


def test_order_semantics():
    a = PowerSeries.from_coeffs([1, 2, 3], 3)
    b = PowerSeries.from_coeffs([1, 1], 6)
    assert (a + b).order == 3
    assert (a * b).order == 3
    assert a.truncate(2).coeffs == (1, 2)
    assert a.agrees_with(PowerSeries.from_coeffs([1, 2, 3, 99], 4))
    with pytest.raises(IndexError):
        a.coefficient(3)


def test_exact_div():
    num = PowerSeries.from_coeffs([1], 8)
    den = PowerSeries.from_coeffs([1, -1], 8)
    assert num.exact_div(den).coeffs == (1,) * 8
    with pytest.raises(ValueError):
        num.exact_div(PowerSeries.x(8))


def test_exp_series():
    e = exp_series(PowerSeries.x(6))
    assert e.coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6),
                        Fraction(1, 24), Fraction(1, 120))
    with pytest.raises(ValueError):
        exp_series(PowerSeries.one(4))


def test_sqrt_series():
    s = PowerSeries.from_coeffs([1, -4], 8)
    root = sqrt_series(s)
    assert root.coeffs[:6] == (1, -2, -2, -4, -10, -28)
    assert (root * root).agrees_with(s)
    with pytest.raises(ValueError):
        sqrt_series(PowerSeries.from_coeffs([2], 4))


def test_g31_2_r0():
    g0 = expand_G_r_31_2(0, 8)
    assert g0.coefficient(1) == 0       # x - x cancellation
    assert g0.coefficient(3) == 6
    assert g0.coefficient(4) == 20
    for n in range(3, 8):
        assert g0.coefficient(n) == avoiders("31-2", n) \
            == math.comb(2 * n - 2, n - 1)
    with pytest.raises(ValueError):
        expand_G_r_31_2(4, 8)
    with pytest.raises(ValueError):
        expand_G_r_31_2(0, 3)


def test_g31_2_r0_length2_documented_discrepancy():
    # the closed form yields 0 at x^2 even though both length-2
    # permutations avoid; reliability starts at x^3
    g0 = expand_G_r_31_2(0, 8)
    assert g0.coefficient(2) == 0
    assert distribution_table(PatternId.P31_2, 2).g(2).constant_term() == 2


def test_g31_2_higher_r_match_table_coefficients():
    table = distribution_table(PatternId.P31_2, 12)
    for r in range(4):
        expansion = expand_G_r_31_2(r, 13)
        for n in range(3, 13):
            assert expansion.coefficient(n) == table.g(n).coefficient(r), (r, n)


def test_egf_21_3():
    egf = expand_egf_21_3_avoid(13)
    assert egf.coefficient(0) == 2      # the length-2 count
    assert [int(egf.coefficient(i)) for i in range(3)] == [2, 6, 10]
    for m in range(13):
        assert egf.coefficient(m) * math.factorial(m) == avoiders("21-3", m + 2)


def test_egf_12_3():
    egf = expand_egf_12_3_avoid(13)
    assert egf.coefficient(0) == 2
    for m in range(13):
        assert egf.coefficient(m) * math.factorial(m) == avoiders("12-3", m + 2)


def test_bell_egf_cross_checks():
    order = 12
    ex = exp_series(PowerSeries.x(order))
    bell_egf = exp_series(ex - 1)
    cbell_egf = exp_series(1 - ex)
    for m in range(order):
        assert bell_egf.coefficient(m) * math.factorial(m) == numbers.bell(m)
        assert cbell_egf.coefficient(m) * math.factorial(m) \
            == numbers.complementary_bell(m)


def test_order_caps():
    assert DEFAULT_ORDER == 24
    with pytest.raises(ValueError):
        expand_G_r_31_2(1, MAX_ORDER + 1)
    with pytest.raises(ValueError):
        expand_egf_21_3_avoid(MAX_ORDER + 1)
