from fractions import Fraction

import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from supercong import theorems, wz
from supercong.combinatorics import HarmonicKind, binomial, fermat_quotient, harmonic, pochhammer
from supercong.exact import PrimePowerModulus, congruent, padic_valuation, reduce_mod
from supercong.suite.registry import manifest, run_check

PRIMES = list(sympy.primerange(3, 200))
primes = st.sampled_from(PRIMES)
nonzero = st.integers(-10**6, 10**6).filter(bool)
rationals = st.builds(Fraction, st.integers(-10**9, 10**9), nonzero)


def p_integral(p):
    return st.builds(Fraction, st.integers(-10**9, 10**9), nonzero.filter(lambda d: d % p))


@given(rationals, rationals, primes)
def test_valuation_is_additive_and_ultrametric(x, y, p):
    assume(x and y)
    assert padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p)
    if x + y:
        assert padic_valuation(x + y, p) >= min(padic_valuation(x, p), padic_valuation(y, p))


@given(st.data(), primes, st.integers(1, 6))
def test_reduction_is_a_ring_map(data, p, r):
    x, y = data.draw(p_integral(p)), data.draw(p_integral(p))
    m = PrimePowerModulus(p, r)
    assert reduce_mod(x + y, m) == reduce_mod(x, m) + reduce_mod(y, m)
    assert reduce_mod(x * y, m) == reduce_mod(x, m) * reduce_mod(y, m)
    assert reduce_mod(-x, m) == -reduce_mod(x, m)


@given(st.data(), primes, st.integers(1, 6))
def test_two_routes_agree(data, p, r):
    x, y = data.draw(p_integral(p)), data.draw(p_integral(p))
    m = PrimePowerModulus(p, r)
    assert (reduce_mod(x, m) == reduce_mod(y, m)) == congruent(x, y, m)


@given(rationals, rationals, primes, st.integers(2, 6))
def test_congruence_ladder_and_symmetry(x, y, p, r):
    hi, lo = PrimePowerModulus(p, r), PrimePowerModulus(p, r - 1)
    assert congruent(x, y, hi) == congruent(y, x, hi)
    if congruent(x, y, hi):
        assert congruent(x, y, lo)


@given(st.data(), primes, st.integers(2, 6))
def test_residue_lowering_commutes_with_reduction(data, p, r):
    x = data.draw(p_integral(p))
    s = data.draw(st.integers(1, r))
    assert reduce_mod(x, PrimePowerModulus(p, r)).lower(s) == reduce_mod(x, PrimePowerModulus(p, s))


@given(st.integers(0, 120), st.integers(0, 120))
def test_binomial_symmetry_and_pascal(n, k):
    assume(k <= n)
    assert binomial(n, k) == binomial(n, n - k)
    if n:
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(0, 60), st.integers(0, 60), st.integers(0, 60))
def test_vandermonde(a, b, k):
    assert binomial(a + b, k) == sum(binomial(a, j) * binomial(b, k - j) for j in range(k + 1))


@given(st.integers(0, 200))
def test_harmonic_pair_identity(n):
    h1, h2 = harmonic(n), harmonic(n, HarmonicKind.plain(2))
    assert harmonic(n, HarmonicKind.pair()) == (h1 * h1 - h2) / 2


@given(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12)), st.integers(0, 30), st.integers(0, 30))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@given(st.integers(1, 50), st.integers(1, 50), st.sampled_from(PRIMES[:24]))
def test_fermat_quotient_log(a, b, p):
    assume(a % p and b % p)
    assert (fermat_quotient(a * b, p) - fermat_quotient(a, p) - fermat_quotient(b, p)) % p == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A", "B"]), st.integers(0, 80), st.integers(0, 80))
def test_wz_equation_anywhere_in_domain(pair, n, k):
    assume(wz.in_grid_domain(pair, n, k))
    assert wz.wz_residual(pair, n, k) == 0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A", "B"]), st.integers(1, 40), st.integers(1, 40))
def test_telescope_anywhere(pair, m, N):
    assume(m >= max(1, wz.telescope_start(pair)))
    assert wz.check_telescope(pair, m, N) == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(theorems.THEOREM_IDS), primes)
def test_fast_route_equals_oracle(id, p):
    assert theorems.verify(id, p).lhs == theorems.verify(id, p, route="oracle").lhs


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([d.id for d in manifest()]), st.sampled_from([p for p in PRIMES if 5 <= p < 110]))
def test_random_manifest_check_passes(id, p):
    assert run_check(id, p).passed
