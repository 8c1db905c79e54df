from fractions import Fraction

import pytest
import sympy

from supercong import wz
from supercong.wz import WzPair

A, B = WzPair.A, WzPair.B


def test_pair_parsing():
    assert WzPair.parse("A") is A and WzPair.parse("PairB") is B and WzPair.parse(B) is B
    with pytest.raises(ValueError):
        WzPair.parse("C")


def test_alpha_at_one_zero():
    assert wz.certificate_poly(A, 1, 0) == 2304


def test_alpha_on_k_zero_factors():
    for n in range(6):
        assert wz.alpha(n, 0) == (172 * n * n + 75 * n + 9) * (2 * n + 1) ** 2


def test_f_vanishes_on_row_zero():
    assert all(wz.evaluate_term(A, "F", 0, k) == 0 for k in range(10))


def test_g_vanishes_below_diagonal():
    assert wz.evaluate_term(A, "G", 2, 3) == 0


def test_g_one_zero():
    # independent factorial evaluation through sympy
    # (-1)^(n+k) alpha (2n+2k)!(2n-2k)!(4n)!(3n)! / (2^(12n+8) (n+k)!^2 (2n-k+1)! (n-k)!^2 n!^3 (2n+k+1)!) at n=1, k=0
    f = sympy.factorial
    expect = -2304 * f(2) * f(2) * f(4) * f(3) / (sympy.Integer(2) ** 20 * f(3) * f(3))
    got = wz.evaluate_term(A, "G", 1, 0)
    assert got == Fraction(-9, 256)
    assert sympy.Rational(got.numerator, got.denominator) == expect
    assert got == wz.g0_closed(1)


@pytest.mark.parametrize("pair,n,k", [(A, 3, 1), (A, 5, 5), (B, 4, 2)])
def test_residual_examples(pair, n, k):
    assert wz.wz_residual(pair, n, k) == 0


@pytest.mark.parametrize("pair,m,N", [(A, 3, 7), (A, 5, 5), (B, 4, 9)])
def test_telescope_examples(pair, m, N):
    assert wz.check_telescope(pair, m, N) == 0


def test_telescope_domain():
    with pytest.raises(ValueError):
        wz.check_telescope(B, 1, 3)
    with pytest.raises(ValueError):
        wz.check_telescope(A, 3, 0)


def test_pair_b_pole_guard():
    with pytest.raises(wz.PoleAtArgument):
        wz.evaluate_term(B, "F", 1, 0)
    with pytest.raises(wz.PoleAtArgument):
        wz.evaluate_term(B, "G", 0, 1)
    assert not wz.in_grid_domain(B, 1, 0) and wz.in_grid_domain(B, 1, 1)


def test_pole_accounting():
    excess = wz.FactorialRatioTerm(0, 0, 0, num_fact=((1, 0, -2),), den_fact=((0, 0, 1),))
    balanced = wz.FactorialRatioTerm(0, 0, 0, num_fact=((1, 0, -2),), den_fact=((1, 0, -3),))
    with pytest.raises(wz.Undefined):
        wz._eval(excess, 0, 0)
    with pytest.raises(wz.BalancedPole):
        wz._eval(balanced, 0, 0)


def test_unknown_which():
    with pytest.raises(ValueError):
        wz.evaluate_term(A, "H", 1, 1)


@pytest.mark.parametrize("n", [0, 1, 10])
def test_g_closed_form(n):
    assert wz.g_closed_form_residual(n) == 0


@pytest.mark.parametrize("n", [2, 3, 25])
def test_gb_difference(n):
    assert wz.gb_difference_residual(n) == 0


def test_gb_difference_domain():
    with pytest.raises(ValueError):
        wz.gb_difference_residual(1)


@pytest.mark.parametrize("family,n", [("quartic", 0), ("cubic", 1), ("quartic", 7)])
def test_summand_identity(family, n):
    assert wz.summand_identity_residual(family, n) == 0


def test_cubic_summand_value():
    assert wz.g_cubic(1) == Fraction(21, 8)


def test_misread_beta_breaks_the_equation():
    bad = [(n, k) for n in range(2, 8) for k in range(0, 6)
           if wz.wz_residual(B, n, k, poly=wz.beta_misread) != 0]
    assert bad


def test_repair_recovers_adopted_certificate():
    sol = wz.repair_certificate()
    assert sol == {m: Fraction(v) for m, v in wz.beta_coefficients().items()}
    # a different, larger point set gives the same answer
    pts = [(n, k) for n in range(3, 7) for k in range(1, 5)]
    assert wz.repair_certificate(pts) == sol


def test_repair_needs_enough_points():
    with pytest.raises(ValueError):
        wz.repair_certificate([(2, 0), (3, 0)])
    with pytest.raises(ValueError):
        wz.repair_certificate([(1, 0)] * 12)
