from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dunkl_sym.scalar import (NotReal, field_order, from_json, get_field, parse_rat, root_of_unity,
                              sign_of_real, sin_cos)

rats = st.fractions(min_value=-5, max_value=5, max_denominator=9)
orders = st.sampled_from([4, 8, 12, 16, 20, 24])


def _elem(F, coeffs):
    return F.from_coeffs(coeffs[: F.degree])


@pytest.mark.parametrize("m,n", [(2, 4), (3, 12), (4, 8), (5, 20), (6, 12), (8, 16)])
def test_field_order(m, n):
    assert field_order(m) == n


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8])
def test_zeta_has_order_2m(m):
    z = root_of_unity(m, 1)
    assert z ** (2 * m) == z.field.one
    assert z ** m == -z.field.one


@pytest.mark.parametrize("m", [3, 4, 5])
def test_pythagoras(m):
    for j in range(2 * m):
        s, c = sin_cos(m, j)
        assert s * s + c * c == s.field.one


@given(orders, st.lists(rats, min_size=8, max_size=8), st.lists(rats, min_size=8, max_size=8))
def test_field_axioms(n, a, b):
    F = get_field(n)
    x, y = _elem(F, a), _elem(F, b)
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if not y.is_zero():
        assert (x / y) * y == x
        assert y * y.inverse() == F.one


@given(orders, st.lists(rats, min_size=8, max_size=8))
def test_conj_and_json(n, a):
    F = get_field(n)
    x = _elem(F, a)
    assert x.conj().conj() == x
    assert from_json(x.to_json()) == x
    assert (x * x.conj()).conj() == x * x.conj()
    assert abs((x * x.conj()).to_complex() - abs(x.to_complex()) ** 2) < 1e-9


@given(orders, st.lists(rats, min_size=8, max_size=8))
def test_sign_of_real_matches_float(n, a):
    F = get_field(n)
    x = _elem(F, a)
    r = x + x.conj()
    val = r.to_complex().real
    if abs(val) > 1e-9:
        assert sign_of_real(r) == (1 if val > 0 else -1)


def test_sign_of_real_rejects_complex():
    with pytest.raises(NotReal):
        sign_of_real(get_field(4).i)


def test_sign_of_tiny_real():
    # 2cos(pi/6) - sqrt(3) = 0 exactly, and cos(pi/12)-cos(pi/12 + tiny) is not representable
    s, c = sin_cos(6, 1)
    assert sign_of_real(c * 2 * (c * 2) - 3) == 0
    assert sign_of_real(c - Fraction(866025, 1000000)) == 1


@pytest.mark.parametrize("text,value", [("1/3", Fraction(1, 3)), ("-2", Fraction(-2)), (" 4/6 ", Fraction(2, 3))])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e-3", "1/3.0"])
def test_parse_rat_rejects_floats(text):
    with pytest.raises(ValueError):
        parse_rat(text)
