"""Truncated sums and their supercongruences, with a fast modular route and an exact oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .combinatorics import PrimeContext, fermat_quotient, pochhammer
from .exact import PrimePowerModulus, congruent, is_prime, reduce_mod
from .suite.registry import CheckResult, DomainError, UnknownCheck

HALF = Fraction(1, 2)


def _sgn(n):
    return -1 if n % 2 else 1


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    family: str                    # quartic, cubic or half-pair
    upper: Callable[[int], int]    # last summation index as a function of p
    rhs: Callable[[int], Fraction]
    r: int

    def indices(self, p):
        return range(self.upper(p) + 1)


def _half(p):
    return (p - 1) // 2


def _full(p):
    return p - 1


def _t11(p):
    q = fermat_quotient(2, p)
    return Fraction(9 * p**2 + 6 * p**3 * q - 9 * p**4 * q**2)


def _t14(p):
    return Fraction(3 * p + 3 * p**2 * fermat_quotient(2, p))


SPECS = {s.id: s for s in (
    TheoremSpec("T1.1", "quartic", _half, _t11, 5),
    TheoremSpec("T1.2", "quartic", _full, lambda p: Fraction(9 * p * p), 5),
    TheoremSpec("T1.3", "cubic", _full, lambda p: Fraction(3 * p), 3),
    TheoremSpec("T1.4", "cubic", _half, _t14, 3),
    TheoremSpec("GZ.10", "half-pair", _half, lambda p: Fraction(p), 3),
    TheoremSpec("GZ.12", "half-pair", _full, lambda p: Fraction(_sgn(_half(p)) * p), 3),
)}

THEOREM_IDS = tuple(SPECS)


def get_spec(id: str) -> TheoremSpec:
    if id not in SPECS:
        raise UnknownCheck(id)
    return SPECS[id]


# exact summands, written in the forms the statements use

def quartic_term(k: int, C=None) -> Fraction:
    from .combinatorics import binomial
    C = C or binomial
    return (Fraction(_sgn(k) * (172 * k * k + 75 * k + 9), 2 ** (12 * k))
            * C(2 * k, k) ** 3 * C(3 * k, k) * C(4 * k, 2 * k))


def cubic_term(k: int, C=None) -> Fraction:
    from .combinatorics import binomial
    C = C or binomial
    return Fraction(11 * k + 3, 64**k) * C(2 * k, k) ** 2 * C(3 * k, k)


def gz10_term(n: int) -> Fraction:
    return pochhammer(HALF, n) ** 3 / pochhammer(1, n) ** 3 * (3 * n + 1) * 4**n


def gz12_term(n: int) -> Fraction:
    return pochhammer(HALF, n) ** 3 / pochhammer(1, n) ** 3 * (3 * n + 1) * (-8) ** n


def _oracle_term(id, n, C):
    if id in ("T1.1", "T1.2"):
        return quartic_term(n, C)
    if id in ("T1.3", "T1.4"):
        return cubic_term(n, C)
    return gz10_term(n) if id == "GZ.10" else gz12_term(n)


def truncated_sum(id: str, p: int, ctx: PrimeContext | None = None) -> Fraction:
    spec = get_spec(id)
    _check_prime(p)
    C = ctx.C if ctx is not None and ctx.p == p else None
    return sum((_oracle_term(id, n, C) for n in spec.indices(p)), Fraction(0))


def _check_prime(p):
    if not is_prime(p) or p % 2 == 0:
        raise DomainError(f"{p} is not an odd prime")


def fast_residue(id: str, p: int, r: int, ctx: PrimeContext | None = None) -> int:
    """Sum reduced term by term in Z/p^r. Only powers of 2 ever sit in a denominator."""
    spec = get_spec(id)
    M = p**r
    inv2 = pow(2, -1, M)
    if ctx is None or ctx.p != p:
        ctx = PrimeContext(p)
    C = ctx.C
    acc = 0
    if spec.family == "quartic":
        w = pow(inv2, 12, M)
        scale = 1
        for k in spec.indices(p):
            t = _sgn(k) * (172 * k * k + 75 * k + 9) * pow(C(2 * k, k), 3, M) * C(3 * k, k) * C(4 * k, 2 * k)
            acc = (acc + t % M * scale) % M
            scale = scale * w % M
    elif spec.family == "cubic":
        w = pow(inv2, 6, M)
        scale = 1
        for k in spec.indices(p):
            acc = (acc + (11 * k + 3) * pow(C(2 * k, k), 2, M) * C(3 * k, k) % M * scale) % M
            scale = scale * w % M
    else:
        # (1/2)_n / n! = C(2n,n) / 4^n, so the summand is C(2n,n)^3 (3n+1) x^n / 64^n
        w = pow(inv2, 4, M) if id == "GZ.10" else (-pow(inv2, 3, M)) % M
        scale = 1
        for n in spec.indices(p):
            acc = (acc + pow(C(2 * n, n), 3, M) * (3 * n + 1) % M * scale) % M
            scale = scale * w % M
    return acc


def verify(id: str, p: int, *, route: str = "fast", extra: int = 0,
           ctx: PrimeContext | None = None) -> CheckResult:
    """Compare the truncated sum with its right side mod p^(r+extra).

    extra > 0 probes beyond the stated modulus; such results are exploratory
    and their modulus label says so.
    """
    spec = get_spec(id)
    _check_prime(p)
    r = spec.r + extra
    if r < 1:
        raise ValueError("exponent must be positive")
    m = PrimePowerModulus(p, r)
    t0 = time.perf_counter()
    rhs = reduce_mod(spec.rhs(p), m).value
    if route == "fast":
        lhs = fast_residue(id, p, r, ctx)
    elif route == "oracle":
        lhs = reduce_mod(truncated_sum(id, p, ctx), m).value
    else:
        raise ValueError(f"unknown route {route!r}")
    label = str(m) if extra == 0 else f"{m} (exploratory)"
    return CheckResult(id, p, None, label, str(lhs), str(rhs), lhs == rhs, time.perf_counter() - t0)


def verify_at(id: str, p: int, r: int) -> bool:
    """Oracle comparison at an arbitrary exponent r (used for the ladder property)."""
    spec = get_spec(id)
    return congruent(truncated_sum(id, p), spec.rhs(p), PrimePowerModulus(p, r))


def section_reduction_residual(section: str, p: int) -> Fraction:
    """LHS minus RHS of the exact identity each proof reduces its sum to."""
    from .suite import registry
    from .suite.quartic_full import _split
    from .suite.terms import quart

    _check_prime(p)
    if p < 5:
        raise DomainError("section identities need p >= 5")
    ctx = PrimeContext(p)
    ids = {"s3": "sec3.half-sum.identity", "s5": "sec5.f-sum.identity", "s6": "sec6.f-sum.identity"}
    if section in ids:
        lhs, rhs = registry.get(ids[section]).sides(ctx)
        return Fraction(lhs) - Fraction(rhs)
    if section == "s4":
        C = ctx.C
        lhs = sum((quart(ctx, k) for k in range(p)), Fraction(0))
        pieces = _split(ctx)[1]
        return lhs - Fraction(2**8 * p, 2 ** (12 * p)) * C(3 * p, p) * C(2 * p, p) * pieces
    raise ValueError(f"unknown section {section!r}")
