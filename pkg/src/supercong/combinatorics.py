"""Exact factorials, binomials, Pochhammer symbols, harmonic numbers, Fermat quotients.

``PrimeContext`` bundles memo tables for one prime so that every check run at
that prime shares factorials up to 4p and harmonic prefix sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import as_rational


class NegativeArgument(ValueError):
    pass


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True)
class HarmonicKind:
    order: int = 1
    signed: bool = False
    double: bool = False

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("harmonic order must be positive")
        if self.signed and self.double:
            raise ValueError("double harmonic sums have no signed variant here")

    @classmethod
    def plain(cls, r: int = 1) -> "HarmonicKind":
        return cls(r)

    @classmethod
    def alternating(cls, r: int = 1) -> "HarmonicKind":
        return cls(r, signed=True)

    @classmethod
    def pair(cls) -> "HarmonicKind":
        """H(1,1;n), the sum over 1 <= i < j <= n of 1/(ij)."""
        return cls(1, double=True)


def factorial(n: int) -> int:
    if n < 0:
        raise NegativeArgument(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** k * math.comb(k - n - 1, k)


def pochhammer(a, n: int) -> Fraction:
    if n < 0:
        raise ValueError("pochhammer length must be >= 0")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def harmonic(n: int, kind: HarmonicKind = HarmonicKind()) -> Fraction:
    if n < 0:
        raise ValueError("harmonic index must be >= 0")
    if kind.double:
        total, prefix = Fraction(0), Fraction(0)
        for j in range(1, n + 1):
            total += prefix / j
            prefix += Fraction(1, j)
        return total
    r = kind.order
    if kind.signed:
        return sum((Fraction((-1) ** k, k**r) for k in range(1, n + 1)), Fraction(0))
    return sum((Fraction(1, k**r) for k in range(1, n + 1)), Fraction(0))


def fermat_quotient(a: int, p: int) -> int:
    if a % p == 0:
        raise NotCoprime(f"{p} divides {a}")
    num = pow(a, p - 1) - 1
    q, rem = divmod(num, p)
    if rem:
        raise ValueError(f"{p} is not prime: {a}^{p - 1} != 1 mod {p}")
    return q


class _Prefix:
    """Growable prefix sums s[n] = sum_{k=1}^n term(k)."""

    def __init__(self, term):
        self._term = term
        self._vals = [Fraction(0)]

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"prefix index {n} < 0")
        vals = self._vals
        while len(vals) <= n:
            k = len(vals)
            vals.append(vals[-1] + self._term(k))
        return vals[n]


class PrimeContext:
    """Memo tables shared by all checks evaluated at one prime p."""

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0:
            raise ValueError(f"need an odd prime, got {p}")
        self.p = p
        self.h = (p - 1) // 2
        self.q = fermat_quotient(2, p)
        self._fact = [1]
        self._harm = {}
        self._alt = {}
        self._pair = None

    def fact(self, n: int) -> int:
        if n < 0:
            raise NegativeArgument(f"factorial of negative integer {n}")
        f = self._fact
        while len(f) <= n:
            f.append(f[-1] * len(f))
        return f[n]

    def C(self, n: int, k: int) -> int:
        if 0 <= k <= n:
            return self.fact(n) // (self.fact(k) * self.fact(n - k))
        return binomial(n, k)

    def H(self, n: int, r: int = 1) -> Fraction:
        """H_n(r)."""
        if r not in self._harm:
            self._harm[r] = _Prefix(lambda k, r=r: Fraction(1, k**r))
        return self._harm[r](n)

    def Hs(self, n: int, r: int = 1) -> Fraction:
        """H_n(-r) = sum (-1)^k / k^r."""
        if r not in self._alt:
            self._alt[r] = _Prefix(lambda k, r=r: Fraction((-1) ** k, k**r))
        return self._alt[r](n)

    def H11(self, n: int) -> Fraction:
        """H(1,1;n)."""
        if self._pair is None:
            self._pair = _Prefix(lambda j: self.H(j - 1) / j)
        return self._pair(n)

    def Hrange(self, a: int, b: int, r: int = 1) -> Fraction:
        """sum_{i=a}^{b} 1/i^r (0 if b < a)."""
        if b < a:
            return Fraction(0)
        return self.H(b, r) - self.H(a - 1, r)
