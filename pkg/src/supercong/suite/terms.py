"""Summands and building blocks shared by several checks.

Every function takes a PrimeContext ``c`` so factorials and harmonic
prefixes are memoized per prime.
"""

from fractions import Fraction as Q


def sgn(n):
    return -1 if n % 2 else 1


def quart(c, k):
    C = c.C
    return Q(sgn(k) * (172 * k * k + 75 * k + 9), 2 ** (12 * k)) * C(2 * k, k) ** 3 * C(3 * k, k) * C(4 * k, 2 * k)


def cub(c, k):
    C = c.C
    return Q(11 * k + 3, 64**k) * C(2 * k, k) ** 2 * C(3 * k, k)


def central(c, n):
    return c.C(n, n // 2)


def lower(p):
    """k = 1 .. (p-3)/2"""
    return range(1, (p - 3) // 2 + 1)


def half(p):
    """k = 1 .. (p-1)/2"""
    return range(1, (p - 1) // 2 + 1)


def M(c):
    p, C = c.p, c.C
    s = Q(0)
    for k in lower(p):
        s += (sgn(k) * Q((p - 1 - k) * (p - 1 - 2 * k), p - 2 - 2 * k)
              * central(c, p - 1 + 2 * k) * central(c, p - 1 - 2 * k) * C(2 * p - 2, p - 1 + k))
    return s


def gstar(c, k):
    p, C = c.p, c.C
    return (sgn(k) * Q((2 * p - k) * (p - k), 2 * (2 * p - 2 * k - 1))
            * C(2 * p + 2 * k, p + k) * C(2 * p - 2 * k, p - k) * C(4 * p, 2 * p + k))


def fstar(c, k):
    p, C = c.p, c.C
    return (Q(sgn(k) * 4**k * (6 * p - 3 * k - 1) * k,
              (2 * p - k - 1) * (2 * p - k) * (4 * p - 2 * k - 1) * (p - k))
            * Q(C(4 * p - 2 * k, 2 * p - k) * C(4 * p - k - 1, p) * C(p - 1, k), C(2 * p - 2 * k, p - k)))


def a_term(c, k):
    p, C = c.p, c.C
    return (Q(sgn(k) * (3 * p + 3 * k - 1), 4**k * (p + k - 1) * (p + k) * (2 * p + 2 * k - 1))
            * Q(C(2 * p + 2 * k, p + k) * C(3 * p + k - 1, p) * C(p - 1, k), C(2 * k, k)))


def d_term(c, k):
    p, C = c.p, c.C
    return (Q(sgn(k) * (3 * p + 1 + 6 * k) * (p + 1) * p, 4**k * (p - 1 + 2 * k) * (p + 1 + 2 * k) ** 2)
            * Q(central(c, p - 1 + 2 * k) * C((3 * p + 1 + 2 * k) // 2, p + k) * C(c.h, k), C(2 * k, k)))


def e_term(c, k):
    p, C, h = c.p, c.C, c.h
    return (Q((-4) ** k * (3 * p + 2 - 3 * k) * (2 * p + 1 - k) * k,
              (p - k) * (p - 2 * k) * (p + 1 - k) ** 2)
            * Q(C(h, k) * C(2 * p - 2 * k, p - k) * C(2 * p - k, h), central(c, p - 1 - 2 * k)))


def g0b(c, n):
    """Closed form of G'(n,0), n >= 2."""
    C = c.C
    return Q(22 * n * n - 3 * n - 3, 2 ** (6 * n + 3) * 3 * n * (n - 1) * (2 * n - 1)) * C(2 * n, n) ** 2 * C(3 * n, n)


def prod(a, b):
    """a * (a+1) * ... * b, empty product 1."""
    out = 1
    for j in range(a, b + 1):
        out *= j
    return out
