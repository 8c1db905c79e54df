from fractions import Fraction

import pytest
import sympy

from supercong.exact import (INF, ModulusMismatch, NotPIntegral, PrimePowerModulus, Residue, as_rational,
                             congruent, padic_valuation, reduce_mod)


@pytest.mark.parametrize("x,p,v", [(Fraction(25, 12), 5, 2), (Fraction(9135, 1024), 3, 2), (Fraction(1, 75), 5, -2),
                                   (-50, 5, 2)])
def test_valuation_examples(x, p, v):
    assert padic_valuation(x, p) == v
    # sympy's multiplicity as an independent oracle
    fx = sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sympy.Integer(x)
    assert sympy.multiplicity(p, abs(fx.p)) - sympy.multiplicity(p, fx.q) == v


def test_valuation_of_zero_is_infinite():
    assert padic_valuation(0, 7) == INF


def test_reduce_examples():
    m = PrimePowerModulus(3, 3)
    r = reduce_mod(Fraction(9135, 1024), m)
    assert r.value == 9
    assert (r.value * 1024 - 9135) % 27 == 0
    assert reduce_mod(0, PrimePowerModulus(5, 2)).value == 0


def test_reduce_rejects_non_integral():
    with pytest.raises(NotPIntegral):
        reduce_mod(Fraction(1, 3), PrimePowerModulus(3, 1))


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)


@pytest.mark.parametrize("x,y,m,expect", [
    (Fraction(45, 8), Fraction(45, 8) + 3 * 125, (5, 3), True),
    (Fraction(25, 12), 0, (5, 2), True),
    (Fraction(1, 2), 1, (3, 1), False),
    (Fraction(1, 5), Fraction(26, 5), (5, 1), True),   # non-integral sides, difference 5
])
def test_congruent_examples(x, y, m, expect):
    assert congruent(x, y, PrimePowerModulus(*m)) is expect


def test_modulus_validation():
    for p, r in [(2, 1), (9, 2), (5, 0)]:
        with pytest.raises(ValueError):
            PrimePowerModulus(p, r)
    assert str(PrimePowerModulus(7, 3)) == "7^3"


def test_residue_arithmetic_and_lowering():
    m = PrimePowerModulus(5, 3)
    a, b = Residue(100, m), Residue(77, m)
    assert (a + b).value == 52
    assert (a - b).value == 23
    assert (a * b).value == 7700 % 125
    assert (-a).value == 25
    assert a.lower(2).value == 0 and str(a.lower(1).modulus) == "5^1"
    with pytest.raises(ModulusMismatch):
        a + Residue(1, PrimePowerModulus(5, 2))
    with pytest.raises(ValueError):
        a.lower(4)
    with pytest.raises(ValueError):
        Residue(125, m)
