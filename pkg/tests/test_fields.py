from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfpar.errors import DivisionByZero, IncompatibleCyclotomicOrder
from hopfpar.fields import (CyclotomicField, RationalField,
                            cyclotomic_polynomial, euler_phi)


def test_rational_addition():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_zeta2_squares_to_one():
    F = CyclotomicField(2)
    assert F.zeta() * F.zeta() == F.one


def test_inverse_of_zeta4_by_extended_euclid_oracle():
    # oracle: invert t mod Phi_4 = t^2 + 1 by hand-run extended Euclid:
    # t * (-t) = -t^2 = 1 mod (t^2+1), so inv(zeta) = -zeta = zeta^3
    F = CyclotomicField(4)
    z = F.zeta()
    assert z.inv() == -z
    assert z.inv() == F.zeta(3)
    assert tuple(z.inv().coeffs) == (Fraction(0), Fraction(-1))


def test_cyclotomic_inverse_against_sympy():
    sympy = pytest.importorskip("sympy")
    t = sympy.Symbol("t")
    for n in (4, 5, 8, 12):
        F = CyclotomicField(n)
        phi = sympy.Poly(sympy.cyclotomic_poly(n, t), t, domain="QQ")
        x = F.zeta() + F.from_int(2)
        inv = F.inv(x)
        x_poly = sympy.Poly(list(reversed([sympy.Rational(c) for c in x.coeffs])),
                            t, domain="QQ")
        got = sympy.Poly(list(reversed([sympy.Rational(c) for c in inv.coeffs])),
                         t, domain="QQ")
        want = sympy.invert(x_poly, phi)
        assert (got - want).rem(phi) == 0


def test_inverse_of_zero_raises():
    F = CyclotomicField(4)
    with pytest.raises(ZeroDivisionError):
        F.zero.inv()
    with pytest.raises(DivisionByZero):
        F.inv(F.zero)
    QQ = RationalField()
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


def test_mixed_cyclotomic_orders_rejected():
    a = CyclotomicField(4).zeta()
    b = CyclotomicField(3).zeta()
    with pytest.raises(IncompatibleCyclotomicOrder):
        a + b
    with pytest.raises(IncompatibleCyclotomicOrder):
        a * b


def test_primitive_root_orders():
    for n in (2, 3, 4, 5, 6, 8, 12):
        F = CyclotomicField(n)
        z = F.zeta()
        assert z ** n == F.one
        for k in range(1, n):
            assert z ** k != F.one


def test_reduction_degree_bound():
    for n in (4, 5, 12):
        F = CyclotomicField(n)
        x = F.one
        for _ in range(3 * n):
            x = x * F.zeta()
            assert len(x.coeffs) == euler_phi(n)


def test_cyclotomic_polynomial_values():
    assert [int(c) for c in cyclotomic_polynomial(1)] == [-1, 1]
    assert [int(c) for c in cyclotomic_polynomial(4)] == [1, 0, 1]
    assert [int(c) for c in cyclotomic_polynomial(12)] == [1, 0, -1, 0, 1]


def test_scalar_json_roundtrip():
    F = CyclotomicField(4)
    x = F.zeta() * Fraction(3, 7) - F.from_int(2)
    as_json = F.to_json(x)
    assert as_json["n"] == 4
    assert F.from_json(as_json) == x
    QQ = RationalField()
    q = Fraction(-5, 3)
    assert QQ.from_json(QQ.to_json(q)) == q


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(small_fractions, small_fractions)
def test_rational_add_cancel(a, b):
    assert (a + b) - b == a


@given(st.lists(small_fractions, min_size=2, max_size=2),
       st.lists(small_fractions, min_size=2, max_size=2))
def test_cyclotomic_field_axioms(ca, cb):
    F = CyclotomicField(4)
    from hopfpar.fields import CycElt
    a = CycElt(4, tuple(ca))
    b = CycElt(4, tuple(cb))
    assert (a + b) - b == a
    assert a * b == b * a
    if a:
        assert a * a.inv() == F.one


@given(st.integers(min_value=0, max_value=11), st.integers(min_value=0, max_value=11))
def test_zeta_power_arithmetic(i, j):
    F = CyclotomicField(12)
    assert F.zeta(i) * F.zeta(j) == F.zeta((i + j) % 12)


def test_parse_forms():
    F = CyclotomicField(4)
    assert F.parse("1/2") == F.embed(Fraction(1, 2))
    assert F.parse("-i") == -F.zeta()
    assert F.parse("zeta^2 + 1") == F.zero
    QQ = RationalField()
    assert QQ.parse("-7/2") == Fraction(-7, 2)
