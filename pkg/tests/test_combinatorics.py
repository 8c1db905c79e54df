from fractions import Fraction

import pytest
import sympy

from supercong.combinatorics import (HarmonicKind, NegativeArgument, NotCoprime, PrimeContext, binomial, factorial,
                                     fermat_quotient, harmonic, pochhammer)


def test_factorial_examples():
    assert [factorial(n) for n in (0, 5, 12)] == [1, 120, 479001600]
    with pytest.raises(NegativeArgument):
        factorial(-1)


def test_binomial_examples():
    assert binomial(4, 2) == 6 and binomial(6, 3) == 20 and binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    # upper negation for negative n, checked against sympy
    assert binomial(-3, 4) == sympy.binomial(-3, 4)


def test_pochhammer_examples():
    assert pochhammer(Fraction(1, 2), 0) == 1
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(1, 6) == 720
    assert pochhammer(Fraction(1, 3), 5) == sympy.rf(sympy.Rational(1, 3), 5)


def test_harmonic_examples():
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(3, HarmonicKind.alternating()) == Fraction(-5, 6)
    assert harmonic(3, HarmonicKind.pair()) == 1
    assert harmonic(0) == 0
    assert harmonic(20, HarmonicKind.plain(2)) == sympy.harmonic(20, 2)


def test_harmonic_kind_validation():
    with pytest.raises(ValueError):
        HarmonicKind(1, signed=True, double=True)
    with pytest.raises(ValueError):
        HarmonicKind(0)


def test_fermat_quotient_examples():
    assert [fermat_quotient(2, p) for p in (3, 7, 5)] == [1, 9, 3]
    with pytest.raises(NotCoprime):
        fermat_quotient(10, 5)


def test_prime_context_matches_plain_functions():
    c = PrimeContext(13)
    assert c.h == 6 and c.q == fermat_quotient(2, 13)
    for n in range(0, 60):
        assert c.fact(n) == factorial(n)
        for k in range(-1, n + 2):
            assert c.C(n, k) == binomial(n, k)
    for n in range(0, 30):
        assert c.H(n) == harmonic(n)
        assert c.H(n, 3) == harmonic(n, HarmonicKind.plain(3))
        assert c.Hs(n, 2) == harmonic(n, HarmonicKind.alternating(2))
        assert c.H11(n) == harmonic(n, HarmonicKind.pair())
    assert c.Hrange(4, 9) == harmonic(9) - harmonic(3)
    assert c.Hrange(9, 4) == 0
    with pytest.raises(ValueError):
        PrimeContext(8)


@pytest.mark.parametrize("n", [0, 1, 17, 200])
def test_pair_identity(n):
    h1, h2 = harmonic(n), harmonic(n, HarmonicKind.plain(2))
    assert harmonic(n, HarmonicKind.pair()) == (h1 * h1 - h2) / 2


def test_pochhammer_factorial_relations():
    for n in range(0, 201, 20):
        assert pochhammer(1, n) == factorial(n)
        assert pochhammer(Fraction(1, 2), n) == Fraction(factorial(2 * n), 4**n * factorial(n))


def test_pascal():
    for n in range(1, 101):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_alternating_two_orders():
    for n in range(0, 501, 50):
        back = sum((Fraction((-1) ** k, k) for k in range(n, 0, -1)), Fraction(0))
        assert harmonic(n, HarmonicKind.alternating()) == back


def test_fermat_log_property():
    for p in sympy.primerange(3, 98):
        for a in range(1, 51):
            for b in range(1, 51):
                if a % p and b % p:
                    assert (fermat_quotient(a * b, p) - fermat_quotient(a, p) - fermat_quotient(b, p)) % p == 0
