"""The two WZ pairs, their certificate polynomials, and exact residual checks.

A term is a signed product of factorials over a power of two times a few
plain affine factors.  Factorials of negative integers are counted as simple
poles: more poles below than above gives 0, more above is an error, and an
exact balance is also an error (it would need a Gamma-limit).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .combinatorics import binomial, pochhammer


class Undefined(ArithmeticError):
    """Numerator carries more factorial poles than the denominator."""


class BalancedPole(ArithmeticError):
    pass


class PoleAtArgument(ArithmeticError):
    """A plain (non-factorial) denominator factor vanishes."""


class WzPair(enum.Enum):
    A = "A"
    B = "B"

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        key = str(s).strip().upper()
        if key.startswith("PAIR"):
            key = key[4:]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown WZ pair {s!r}; expected A or B") from None


# affine form a*n + b*k + c
Affine = tuple


def _aff(f, n, k):
    a, b, c = f
    return a * n + b * k + c


@dataclass(frozen=True)
class FactorialRatioTerm:
    sign_n: int                 # (-1)^(sign_n*n + sign_k*k + sign_c)
    sign_k: int
    sign_c: int
    num_fact: tuple
    den_fact: tuple
    num_plain: tuple = ()
    den_plain: tuple = ()
    pow2: Affine = (0, 0, 0)
    poly: str | None = None     # "alpha", "beta" or None


def alpha(n, k):
    return (16 * k**4 - 128 * k**2 * n**2 + 688 * n**4 - 76 * k**2 * n
            + 988 * n**3 - 16 * k**2 + 508 * n**2 + 111 * n + 9)


def beta(n, k):
    return 22 * n**3 + (32 * k - 3) * n**2 + (10 * k**2 + 2 * k - 3) * n + k * k - k


def beta_misread(n, k):
    """Variant with (10n^2+2n-3)n in the linear-in-n slot; fails the WZ equation."""
    return 22 * n**3 + (32 * k - 3) * n**2 + (10 * n**2 + 2 * n - 3) * n + k * k - k


_POLYS = {"alpha": alpha, "beta": beta}

N, K, ONE = (1, 0, 0), (0, 1, 0), (0, 0, 1)

TERMS = {
    (WzPair.A, "F"): FactorialRatioTerm(
        1, 1, 0,
        num_fact=((2, 2, 0), (2, -2, -2), (4, 0, 0), (3, 0, 0)),
        den_fact=((1, 1, 0), (1, 1, 0), (2, -1, -1), (1, -1, -1), (1, -1, -1),
                  N, N, N, (2, 1, 0)),
        num_plain=(N,),
        pow2=(12, 0, 0),
    ),
    (WzPair.A, "G"): FactorialRatioTerm(
        1, 1, 0,
        num_fact=((2, 2, 0), (2, -2, 0), (4, 0, 0), (3, 0, 0)),
        den_fact=((1, 1, 0), (1, 1, 0), (2, -1, 1), (1, -1, 0), (1, -1, 0),
                  N, N, N, (2, 1, 1)),
        pow2=(12, 0, 8),
        poly="alpha",
    ),
    (WzPair.B, "F"): FactorialRatioTerm(
        0, 1, 0,
        num_fact=((2, 2, -2), (3, 1, -1), (2, 0, 0), K),
        den_fact=((1, 1, 0), (1, 1, 0), (1, -1, -1), (2, 1, -1), N, N, (0, 2, 0)),
        num_plain=(N, (3, 3, -1)),
        den_plain=((1, 1, -1),),
        pow2=(6, 2, 0),
    ),
    # (k-1)!/(2k-2)! is written as 2(2k-1) k!/(2k)!: same value for k >= 1,
    # and the analytic value -2 at k = 0 instead of a balanced pole.
    (WzPair.B, "G"): FactorialRatioTerm(
        0, 1, 1,
        num_fact=((2, 2, -3), (3, 1, -1), (2, 0, 0), K),
        den_fact=((1, 1, 0), (1, 1, 0), (1, -1, 0), (2, 1, 0), N, N, (0, 2, 0)),
        num_plain=((0, 4, -2),),
        pow2=(6, 2, 2),
        poly="beta",
    ),
}


def certificate_poly(pair, n: int, k: int) -> int:
    pair = WzPair.parse(pair)
    return alpha(n, k) if pair is WzPair.A else beta(n, k)


def _fact_ratio(num_args, den_args, fact):
    """prod a! / prod b! with largest-to-largest pairs cancelled into short range products."""
    num = den = 1
    na, da = sorted(num_args, reverse=True), sorted(den_args, reverse=True)
    for i in range(max(len(na), len(da))):
        a = na[i] if i < len(na) else None
        b = da[i] if i < len(da) else None
        if b is None:
            num *= fact(a)
        elif a is None:
            den *= fact(b)
        elif a >= b:
            num *= math.prod(range(b + 1, a + 1))
        else:
            den *= math.prod(range(a + 1, b + 1))
    return num, den


def _eval(term: FactorialRatioTerm, n, k, poly=None, fact=math.factorial) -> Fraction:
    num_args = [_aff(f, n, k) for f in term.num_fact]
    den_args = [_aff(f, n, k) for f in term.den_fact]
    pn = sum(1 for a in num_args if a < 0)
    pd = sum(1 for a in den_args if a < 0)
    if pd > pn:
        return Fraction(0)
    if pn > pd:
        raise Undefined(f"numerator pole excess at (n, k) = ({n}, {k})")
    if pn:
        raise BalancedPole(f"balanced factorial poles at (n, k) = ({n}, {k})")
    den_plain = 1
    for f in term.den_plain:
        den_plain *= _aff(f, n, k)
    if den_plain == 0:
        raise PoleAtArgument(f"vanishing plain factor at (n, k) = ({n}, {k})")
    num, den = _fact_ratio(num_args, den_args, fact)
    for f in term.num_plain:
        num *= _aff(f, n, k)
    if term.poly is not None:
        num *= (poly or _POLYS[term.poly])(n, k)
    den *= den_plain
    e = _aff(term.pow2, n, k)
    if e >= 0:
        den *= 1 << e
    else:
        num *= 1 << -e
    if (term.sign_n * n + term.sign_k * k + term.sign_c) % 2:
        num = -num
    return Fraction(num, den)


def evaluate_term(pair, which: str, n: int, k: int, *, poly=None, fact=math.factorial) -> Fraction:
    pair = WzPair.parse(pair)
    which = which.upper()
    if which not in ("F", "G"):
        raise ValueError(f"which must be F or G, got {which!r}")
    if pair is WzPair.B and n + k == 1:
        raise PoleAtArgument(f"pair B is not defined on n + k = 1 (n={n}, k={k})")
    return _eval(TERMS[pair, which], n, k, poly, fact)


def wz_residual(pair, n: int, k: int, *, poly=None, fact=math.factorial) -> Fraction:
    """F(n+1,k) - F(n,k) - G(n,k+1) + G(n,k)."""
    pair = WzPair.parse(pair)

    def F(a, b):
        return evaluate_term(pair, "F", a, b, fact=fact)

    def G(a, b):
        return evaluate_term(pair, "G", a, b, poly=poly, fact=fact)

    return F(n + 1, k) - F(n, k) - G(n, k + 1) + G(n, k)


def in_grid_domain(pair, n, k) -> bool:
    # the stencil at (n, k) touches (n+1, k) and (n, k+1)
    return WzPair.parse(pair) is WzPair.A or n + k >= 2


def telescope_start(pair) -> int:
    return 0 if WzPair.parse(pair) is WzPair.A else 2


def check_telescope(pair, m: int, N: int, *, fact=math.factorial) -> Fraction:
    """Residual of the WZ equation summed over 0 <= k < N and n0 <= n < m.

    sum_k [F(m,k) - F(n0,k)] - sum_n [G(n,N) - G(n,0)], which must vanish.
    """
    pair = WzPair.parse(pair)
    n0 = telescope_start(pair)
    if N < 1 or m < max(1, n0):
        raise ValueError(f"telescope needs m >= {max(1, n0)} and N >= 1, got m={m}, N={N}")
    F = lambda a, b: evaluate_term(pair, "F", a, b, fact=fact)
    G = lambda a, b: evaluate_term(pair, "G", a, b, fact=fact)
    s = sum((F(m, k) - F(n0, k) for k in range(N)), Fraction(0))
    s -= sum((G(n, N) - G(n, 0) for n in range(n0, m)), Fraction(0))
    return s


def g0_closed(n: int) -> Fraction:
    return (Fraction((-1) ** n * (172 * n * n + 75 * n + 9), 2 ** (12 * n + 8))
            * binomial(2 * n, n) ** 3 * binomial(3 * n, n) * binomial(4 * n, 2 * n))


def g_closed_form_residual(n: int) -> Fraction:
    return evaluate_term(WzPair.A, "G", n, 0) - g0_closed(n)


def g_cubic(n: int) -> Fraction:
    """g_n = (11n+3)/2^(6n) C(2n,n)^2 C(3n,n), the cubic summand."""
    return Fraction(11 * n + 3, 2 ** (6 * n)) * binomial(2 * n, n) ** 2 * binomial(3 * n, n)


def gb0_closed(n: int) -> Fraction:
    """G'(n,0) in closed form (n >= 2)."""
    return (Fraction(22 * n * n - 3 * n - 3, 2 ** (6 * n + 3) * 3 * n * (n - 1) * (2 * n - 1))
            * binomial(2 * n, n) ** 2 * binomial(3 * n, n))


def _t(n):
    f = math.factorial
    return Fraction(n**3 * f(2 * n) * f(3 * n) * 2**5, 2 ** (6 * n) * (2 * n - 1) * (n - 1) * f(n) ** 5)


def gb_difference_residual(n: int) -> Fraction:
    if n < 2:
        raise ValueError("n >= 2 required")
    return g_cubic(n) - 48 * evaluate_term(WzPair.B, "G", n, 0) - (_t(n + 1) - _t(n))


def summand_identity_residual(family: str, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n >= 0 required")
    h, t, tt, q, qq = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3),
                       Fraction(1, 4), Fraction(3, 4))
    one = pochhammer(1, n)
    if family == "quartic":
        poch = (pochhammer(h, n) * pochhammer(t, n) * pochhammer(tt, n)
                * pochhammer(q, n) * pochhammer(qq, n) / one**5)
        lhs = poch * (-1) ** n * (172 * n * n + 75 * n + 9) * Fraction(27, 16) ** n
        rhs = (Fraction((-1) ** n * (172 * n * n + 75 * n + 9), 2 ** (12 * n))
               * binomial(2 * n, n) ** 3 * binomial(3 * n, n) * binomial(4 * n, 2 * n))
    elif family == "cubic":
        poch = pochhammer(h, n) * pochhammer(t, n) * pochhammer(tt, n) / one**3
        lhs = poch * (11 * n + 3) * Fraction(27, 16) ** n
        rhs = g_cubic(n)
    else:
        raise ValueError(f"family must be 'quartic' or 'cubic', got {family!r}")
    return lhs - rhs


# monomials of the pair-B certificate, in solve order
BETA_MONOMIALS = ("n^3", "n^2 k", "n^2", "n k^2", "n k", "n", "k^2", "k", "1")


def _monomial(name):
    table = {
        "n^3": lambda n, k: n**3, "n^2 k": lambda n, k: n * n * k, "n^2": lambda n, k: n * n,
        "n k^2": lambda n, k: n * k * k, "n k": lambda n, k: n * k, "n": lambda n, k: n,
        "k^2": lambda n, k: k * k, "k": lambda n, k: k, "1": lambda n, k: 1,
    }
    return table[name]


def repair_certificate(points=None):
    """Solve for the pair-B certificate coefficients from the WZ equation.

    The residual is affine in the certificate, so each grid point gives one
    linear equation in the nine monomial coefficients.  Returns a dict
    monomial -> Fraction; raises ValueError if the system is inconsistent or
    underdetermined.
    """
    if points is None:
        points = [(n, k) for n in range(2, 6) for k in range(0, 4)]
    if len(points) < 12:
        raise ValueError("need at least 12 grid points")
    rows, rhs = [], []
    for n, k in points:
        if not in_grid_domain(WzPair.B, n, k):
            raise ValueError(f"point ({n}, {k}) is outside the pair-B domain")
        dF = evaluate_term(WzPair.B, "F", n + 1, k) - evaluate_term(WzPair.B, "F", n, k)
        row = []
        for m in BETA_MONOMIALS:
            mono = _monomial(m)
            row.append(evaluate_term(WzPair.B, "G", n, k + 1, poly=mono)
                       - evaluate_term(WzPair.B, "G", n, k, poly=mono))
        rows.append([sympy.Rational(x.numerator, x.denominator) for x in row])
        rhs.append(sympy.Rational(dF.numerator, dF.denominator))
    A, b = sympy.Matrix(rows), sympy.Matrix(rhs)
    sol, params = A.gauss_jordan_solve(b)
    if params.shape[0]:
        raise ValueError("certificate system is underdetermined")
    return {m: Fraction(int(v.p), int(v.q)) for m, v in zip(BETA_MONOMIALS, sol)}


def beta_coefficients():
    """Monomial coefficients of the adopted certificate, for comparison."""
    return {"n^3": 22, "n^2 k": 32, "n^2": -3, "n k^2": 10, "n k": 2, "n": -3,
            "k^2": 1, "k": -1, "1": 0}
