from fractions import Fraction

import pytest
import sympy

from supercong import theorems
from supercong.exact import PrimePowerModulus, reduce_mod
from supercong.suite.registry import DomainError, UnknownCheck

IDS = theorems.THEOREM_IDS


def _sympy_sum(id, p):
    """Independent summation with sympy binomials and rising factorials."""
    b, rf, R = sympy.binomial, sympy.rf, sympy.Rational
    spec = theorems.get_spec(id)
    s = sympy.Integer(0)
    for k in spec.indices(p):
        if spec.family == "quartic":
            s += (-1) ** k * (172 * k * k + 75 * k + 9) * b(2 * k, k) ** 3 * b(3 * k, k) * b(4 * k, 2 * k) / sympy.Integer(2) ** (12 * k)
        elif spec.family == "cubic":
            s += (11 * k + 3) * b(2 * k, k) ** 2 * b(3 * k, k) / sympy.Integer(64) ** k
        else:
            x = 4 if id == "GZ.10" else -8
            s += rf(R(1, 2), k) ** 3 / rf(1, k) ** 3 * (3 * k + 1) * sympy.Integer(x) ** k
    return Fraction(int(s.p), int(s.q))


def test_spec_exponents():
    assert {i: theorems.get_spec(i).r for i in IDS} == {"T1.1": 5, "T1.2": 5, "T1.3": 3, "T1.4": 3, "GZ.10": 3, "GZ.12": 3}
    with pytest.raises(UnknownCheck):
        theorems.get_spec("T9.9")


def test_p3_sums():
    assert theorems.truncated_sum("T1.3", 3) == Fraction(9135, 1024)
    assert theorems.cubic_term(2) == Fraction(3375, 1024)
    assert theorems.truncated_sum("T1.4", 3) == Fraction(45, 8)
    assert theorems.truncated_sum("T1.1", 3) == 0
    assert theorems.quartic_term(1) == -9


@pytest.mark.parametrize("id", IDS)
@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_sum_matches_independent_oracle(id, p):
    assert theorems.truncated_sum(id, p) == _sympy_sum(id, p)


def test_p3_verdicts():
    r13 = theorems.verify("T1.3", 3)
    assert r13.passed and r13.lhs == r13.rhs == "9" and r13.modulus == "3^3"
    r12 = theorems.verify("T1.2", 3)
    assert r12.passed and r12.lhs == "81"
    assert pow(2**20, 1, 243) == 31
    r11 = theorems.verify("T1.1", 3)
    assert r11.passed and theorems.SPECS["T1.1"].rhs(3) == -486


@pytest.mark.parametrize("id", IDS)
def test_routes_agree_and_pass(id):
    for p in sympy.primerange(3, 60):
        fast, oracle = theorems.verify(id, p), theorems.verify(id, p, route="oracle")
        assert fast.passed and oracle.passed
        assert fast.lhs == oracle.lhs and fast.rhs == oracle.rhs


def test_ladder():
    for id in IDS:
        r = theorems.get_spec(id).r
        for p in (3, 5, 11, 23):
            for s in range(1, r + 1):
                assert theorems.verify_at(id, p, s)


def test_half_full_consistency():
    for p in sympy.primerange(3, 200):
        tail = sum((theorems.quartic_term(k) for k in range((p + 1) // 2, p)), Fraction(0))
        assert theorems.truncated_sum("T1.1", p) == theorems.truncated_sum("T1.2", p) - tail


@pytest.mark.parametrize("section,p", [("s4", 5), ("s3", 7), ("s6", 11), ("s5", 13)])
def test_section_residual_examples(section, p):
    assert theorems.section_reduction_residual(section, p) == 0


def test_section_residual_errors():
    with pytest.raises(ValueError):
        theorems.section_reduction_residual("s7", 7)
    with pytest.raises(DomainError):
        theorems.section_reduction_residual("s3", 3)


def test_exploratory_label_and_result():
    res = theorems.verify("T1.2", 7, extra=1)
    assert "exploratory" in res.modulus and res.modulus.startswith("7^6")
    m = PrimePowerModulus(7, 6)
    assert res.lhs == str(reduce_mod(theorems.truncated_sum("T1.2", 7), m).value)


def test_bad_inputs():
    with pytest.raises(DomainError):
        theorems.verify("T1.1", 9)
    with pytest.raises(ValueError):
        theorems.verify("T1.1", 7, route="guess")
