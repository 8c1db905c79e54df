"""Exact arithmetic substrate: rationals, p-adic valuation and reduction into Z/p^r."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

Rational = Fraction

#: valuation of zero
INF = math.inf


class NotPIntegral(ArithmeticError):
    """The reduced denominator is divisible by p."""


class ModulusMismatch(ValueError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int or Fraction")
    return Fraction(x)


def is_prime(n: int) -> bool:
    # sympy.isprime is deterministic for n < 2**64
    return bool(sympy.isprime(n))


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(x, p: int):
    """v_p(x) for a rational x; ``INF`` when x == 0."""
    x = as_rational(x)
    if x == 0:
        return INF
    return _int_valuation(abs(x.numerator), p) - _int_valuation(x.denominator, p)


@dataclass(frozen=True)
class PrimePowerModulus:
    p: int
    r: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"modulus base must be an odd prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"exponent must be >= 1, got {self.r}")

    @property
    def value(self) -> int:
        return self.p**self.r

    def __str__(self):
        return f"{self.p}^{self.r}"


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: PrimePowerModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError(f"{self.value} out of range for {self.modulus}")

    def _check(self, other: "Residue") -> None:
        if not isinstance(other, Residue):
            raise TypeError(f"cannot combine Residue with {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")

    def __add__(self, other):
        self._check(other)
        return Residue((self.value + other.value) % self.modulus.value, self.modulus)

    def __sub__(self, other):
        self._check(other)
        return Residue((self.value - other.value) % self.modulus.value, self.modulus)

    def __mul__(self, other):
        self._check(other)
        return Residue((self.value * other.value) % self.modulus.value, self.modulus)

    def __neg__(self):
        return Residue(-self.value % self.modulus.value, self.modulus)

    def lower(self, s: int) -> "Residue":
        """Image under Z/p^r -> Z/p^s for s <= r."""
        if not 1 <= s <= self.modulus.r:
            raise ValueError(f"cannot lower {self.modulus} to exponent {s}")
        m = PrimePowerModulus(self.modulus.p, s)
        return Residue(self.value % m.value, m)

    def __str__(self):
        return str(self.value)


def reduce_mod(x, m: PrimePowerModulus) -> Residue:
    x = as_rational(x)
    if x.denominator % m.p == 0:
        raise NotPIntegral(f"{x} is not {m.p}-integral")
    n = m.value
    return Residue(x.numerator * pow(x.denominator, -1, n) % n, m)


def congruent(x, y, m: PrimePowerModulus) -> bool:
    """x == y (mod p^r) in the valuation sense; works for non-p-integral sides."""
    return padic_valuation(as_rational(x) - as_rational(y), m.p) >= m.r
