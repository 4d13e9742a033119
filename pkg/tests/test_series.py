from fractions import Fraction as F
from math import factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tanhlah.errors import DomainError
from tanhlah.series import (
    Family,
    PowerSeries,
    arctanh_series,
    bernoulli,
    family_egf,
    ps_compose,
    ps_exp,
    ps_log,
    ps_mul,
    ps_pow_int,
    ps_reciprocal,
    tangent_number,
    tanh_number,
    tanh_series,
    u_coth_u,
)

u_sym = sympy.symbols("u")


def sympy_coeffs(expr, order):
    poly = sympy.series(expr, u_sym, 0, order + 1).removeO()
    return [F(str(poly.coeff(u_sym, n))) for n in range(order + 1)]


def U(order):
    return PowerSeries.variable(order)


def test_mul_identity():
    assert ps_mul(PowerSeries([1, 1], 3), PowerSeries([1], 3)) == PowerSeries([1, 1], 3)


def test_mul_u_squared():
    assert ps_mul(U(4), U(4)) == PowerSeries([0, 0, 1], 4)


def test_mul_arctanh_squared():
    a = PowerSeries([0, 1, 0, F(1, 3), 0, F(1, 5)], 6)
    assert ps_mul(a, a).coeffs == (0, 0, 1, 0, F(2, 3), 0, F(23, 45))


def test_mixed_orders_truncate_to_minimum():
    a = PowerSeries([1, 2, 3, 4], 3)
    b = PowerSeries([1, 1], 1)
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_compose_identity_outer():
    f = PowerSeries([0, 3, F(-1, 2), 7], 3)
    assert ps_compose(U(3), f) == f


def test_compose_square():
    assert ps_compose(PowerSeries([0, 0, 1], 3), PowerSeries([0, 1, 1], 3)) == PowerSeries([0, 0, 1, 2], 3)


def test_compose_lah_upper_with_stirling_gives_tanh():
    v = (ps_exp(PowerSeries([0, 2], 5)) - 1) / 2
    outer = U(5) / (1 + U(5))
    assert ps_compose(outer, v).coeffs == (0, 1, 0, F(-1, 3), 0, F(2, 15))


def test_compose_rejects_constant_term():
    with pytest.raises(DomainError):
        ps_compose(U(3), PowerSeries([1, 1], 3))


def test_exp_of_zero():
    assert ps_exp(PowerSeries([0], 5)) == PowerSeries([1], 5)


def test_log_mercator():
    assert ps_log(PowerSeries([1, 1], 3)).coeffs == (0, 1, F(-1, 2), F(1, 3))


def test_half_log_ratio_is_arctanh():
    ratio = PowerSeries([1, 1], 5) / PowerSeries([1, -1], 5)
    assert (ps_log(ratio) / 2).coeffs == (0, 1, 0, F(1, 3), 0, F(1, 5))


def test_exp_log_domain_errors():
    with pytest.raises(DomainError):
        ps_exp(PowerSeries([1, 1], 3))
    with pytest.raises(DomainError):
        ps_log(PowerSeries([2, 1], 3))


def test_pow_zero_and_small():
    a = PowerSeries([0, 1, 0, F(1, 3)], 4)
    assert ps_pow_int(a, 0) == PowerSeries([1], 4)
    assert ps_pow_int(a, 2).coeffs == (0, 0, 1, 0, F(2, 3))


def test_tanh_squared():
    t = tanh_series(6)
    assert ps_pow_int(t, 2).coeffs == (0, 0, 1, 0, F(-2, 3), 0, F(17, 45))


@pytest.mark.parametrize("n, value", [(0, 1), (1, F(-1, 2)), (2, F(1, 6)), (3, 0), (4, F(-1, 30)),
                                      (6, F(1, 42)), (8, F(-1, 30)), (10, F(5, 66)), (12, F(-691, 2730))])
def test_bernoulli(n, value):
    assert bernoulli(n) == value


def test_bernoulli_matches_sympy():
    # sympy uses B_1 = +1/2; even indices agree
    for n in range(0, 31, 2):
        assert bernoulli(n) == F(str(sympy.bernoulli(n)))


def test_tangent_numbers():
    assert [tangent_number(n) for n in (1, 3, 5, 7, 9)] == [1, 2, 16, 272, 7936]
    assert tanh_number(7) == -272


@pytest.mark.parametrize("j", range(10))
def test_tanh_numbers_through_bernoulli(j):
    b = bernoulli(2 * j + 2)
    closed = F(4 ** (j + 1) * (4 ** (j + 1) - 1), 2 * j + 2) * b
    assert tanh_number(2 * j + 1) == closed


def test_arctanh_column_one_factorials():
    vals = family_egf(Family.ARCTANH, 1, 25).egf_values()
    for n in range(1, 26):
        assert vals[n] == (factorial(n - 1) if n % 2 else 0)


@pytest.mark.parametrize("expr, build", [
    (sympy.tanh(u_sym), tanh_series),
    (sympy.atanh(u_sym), arctanh_series),
    (u_sym * sympy.coth(u_sym), u_coth_u),
    (sympy.tan(u_sym), lambda N: PowerSeries([F(c, factorial(n)) for n, c in
                                              enumerate(tangent_number(k) for k in range(N + 1))], N)),
])
def test_elementary_series_against_sympy(expr, build):
    assert list(build(14).coeffs) == sympy_coeffs(expr, 14)


def test_family_egf_examples():
    assert family_egf("arctanh", 1, 5).coeffs == (0, 1, 0, F(1, 3), 0, F(1, 5))
    assert family_egf("tanh", 1, 5).coeffs == (0, 1, 0, F(-1, 3), 0, F(2, 15))
    assert family_egf("lah", 0, 4) == PowerSeries([1], 4)


@pytest.mark.parametrize("family, expr", [
    ("s1", sympy.log(1 + 2 * u_sym) / 2),
    ("s2", (sympy.exp(2 * u_sym) - 1) / 2),
    ("lah", u_sym / (1 - u_sym)),
    ("lah-upper", u_sym / (1 + u_sym)),
])
def test_family_base_series_against_sympy(family, expr):
    for m in (1, 3):
        assert list(family_egf(family, m, 10).coeffs) == sympy_coeffs(expr**m / factorial(m), 10)


def test_reciprocal():
    a = PowerSeries([2, 1, F(1, 3)], 6)
    assert a * ps_reciprocal(a) == PowerSeries([1], 6)
    with pytest.raises(DomainError):
        ps_reciprocal(PowerSeries([0, 1], 3))


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)
ORDER = 6


def series(const=None):
    coeffs = st.lists(small_rationals, min_size=ORDER + 1, max_size=ORDER + 1)
    if const is None:
        return coeffs.map(lambda c: PowerSeries(c, ORDER))
    return coeffs.map(lambda c: PowerSeries([const] + c[1:], ORDER))


@settings(max_examples=40, deadline=None)
@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(series(const=0))
def test_log_exp_roundtrip(a):
    assert ps_log(ps_exp(a)) == a


@settings(max_examples=40, deadline=None)
@given(series(const=1))
def test_exp_log_roundtrip(a):
    assert ps_exp(ps_log(a)) == a


@settings(max_examples=40, deadline=None)
@given(series(const=0), series(const=0), series())
def test_composition_is_associative(f, g, h):
    assert ps_compose(ps_compose(h, g), f) == ps_compose(h, ps_compose(g, f))
