"""Checks behind the cubic half-range sum."""

from fractions import Fraction as Q

from .. import wz
from .registry import register
from .terms import cub, d_term, e_term, g0b, half, prod, sgn

B = wz.WzPair.B


def _d_lhs(c):
    p = c.p
    return Q(c.C(p - 1, c.h), 2 ** (3 * p + 1)) * sum((d_term(c, k) for k in range(c.h + 1)), Q(0))


def _g0_sum(c):
    return sum((g0b(c, k) for k in range(2, c.h + 1)), Q(0))


register("sec6.f-sum.identity", r"sec6: \frac{{p-1\choose \frac{p-1}{2}}}{2^{3p+1}}\sum_{k=0}^{\frac{p-1}{2}}\dots=\frac{15}{128}-\sum_{k=2}^{\frac{p-1}{2}}\frac{22k^2-3k-3}{2^{6k+3}3k(k-1)(2k-1)}\dots",
         None, lambda c: (_d_lhs(c), Q(15, 128) - _g0_sum(c)))
register("sec6.f-sum.wz", r"sec6: \sum_{k=0}^{p-1}F^{'}(\frac{p+1}{2},k)=\frac{{p-1\choose \frac{p-1}{2}}}{2^{3p+1}}\sum_{k=0}^{\frac{p-1}{2}}\dots", None,
         lambda c: (sum((wz.evaluate_term(B, "F", (c.p + 1) // 2, k, fact=c.fact) for k in range(c.p)), Q(0)), _d_lhs(c)))


def _delta_sum(c):
    p, h, C = c.p, c.h, c.C
    lhs = sum((cub(c, k) for k in range(2, h + 1)), Q(0)) - 48 * _g0_sum(c)
    rhs = Q(3 * (9 * p * p - 1), 2 ** (3 * p - 2) * (p - 1)) * C(3 * h, h) * C(p - 1, h) ** 2 - Q(45, 4)
    return lhs, rhs


register("sec6.delta-sum", r"sec6: \sum_{k=2}^{\frac{p-1}{2}}\dots-48\sum_{k=2}^{\frac{p-1}{2}}\frac{22k^2-3k-3}{2^{6k+3}3k(k-1)(2k-1)}\dots=\frac{3(9p^2-1)}{2^{3p-2}(p-1)}\dots-\frac{45}{4}",
         None, _delta_sum)
register("sec6.binom-2pk", r"sec6: {2p-k\choose \frac{p-1}{2}}\equiv (-1)^{\frac{p-1}{2}}\frac{2(p-k){\frac{p-1}{2}\choose k}}{(p+1-2k){p-1\choose k}} \pmod{p}",
         1, lambda c, k: (c.C(2 * c.p - k, c.h),
                          sgn(c.h) * Q(2 * (c.p - k) * c.C(c.h, k), (c.p + 1 - 2 * k) * c.C(c.p - 1, k))),
         krange=half)


def _odd_recip_prefix(k):
    return sum((Q(1, 2 * j - 1) for j in range(1, k + 1)), Q(0))


register("sec6.sun", r"sec6: (-4)^k{n\choose k}\equiv {2k\choose k} \left(1-p\sum_{j=1}^{k}\frac{1}{2j-1}\right) \pmod{p^2}", 2,
         lambda c, k: ((-4) ** k * c.C(c.h, k), c.C(2 * k, k) * (1 - c.p * _odd_recip_prefix(k))),
         krange=lambda p: range(0, (p - 1) // 2 + 1))


def e_sum(c, start):
    return sum((e_term(c, k) for k in range(start, c.h + 1)), Q(0))


def _e_a(c):
    p = c.p
    s = sum((Q(4**k, k) + Q(4**k, 2 * k - 1) for k in half(p)), Q(0))
    return e_sum(c, 2), -sgn(c.h) * Q(4 * p, c.C(p - 1, c.h)) * (s + 4)


register("sec6.e-sum.a", r"sec6: \sum_{k=2}^{\frac{p-1}{2}}\dots\equiv -(-1)^{\frac{p-1}{2}}\frac{4p}{{p-1\choose \frac{p-1}{2}}}\left(\sum\frac{4^k}{k}+\sum\frac{4^k}{2k-1}+4\right)",
         2, _e_a)
register("sec6.e-sum", r"sec6: \sum_{k=2}^{\frac{p-1}{2}}\frac{(-4)^k(3p+2-3k)(2p+1-k)k}{(p-k)(p-2k)(p+1-k)^2}\dots\equiv -16p+16pq_p(2) \pmod{p^2}",
         2, lambda c: (e_sum(c, 2), -16 * c.p + 16 * c.p * c.q))


def _ratio(c):
    p, h, C = c.p, c.h, c.C
    return -Q(16 * (3 * p - 1), (p - 1) * (2 * p - 1)) * C(2 * p - 1, p - 1) * Q(C(2 * p - 1, h), C(p - 1, h))


register("sec6.ratio", r"sec6: \frac{-16(3p-1)}{(p-1)(2p-1)}{2p-1\choose p-1}{2p-1\choose \frac{p-1}{2}}/{p-1\choose \frac{p-1}{2}}\equiv 16+32pq_p(2)",
         2, lambda c: (_ratio(c), 16 + 32 * c.p * c.q))
register("sec6.binom-3h", r"sec6: \frac{(3p+1)(9p^2-1)}{2(p^2-1)(p+1)}{\frac{3p-3}{2}\choose \frac{p-1}{2}}{p-1\choose \frac{p-1}{2}}\equiv -(-1)^{\frac{p-1}{2}}\left(p+5p^2\right)",
         3, lambda c: (Q((3 * c.p + 1) * (9 * c.p**2 - 1), 2 * (c.p**2 - 1) * (c.p + 1)) * c.C(3 * c.h, c.h) * c.C(c.p - 1, c.h),
                       -sgn(c.h) * (c.p + 5 * c.p**2)))
register("sec6.binom-3h-sq", r"sec6: \frac{3(9p^2-1)}{2^{3p-2}(p-1)}{\frac{3p-3}{2}\choose \frac{p-1}{2}}{p-1\choose \frac{p-1}{2}}^2\equiv -3\left(p+4p^2-p^2q_p(2)\right)",
         3, lambda c: (Q(3 * (9 * c.p**2 - 1), 2 ** (3 * c.p - 2) * (c.p - 1)) * c.C(3 * c.h, c.h) * c.C(c.p - 1, c.h) ** 2,
                       -3 * (c.p + 4 * c.p**2 - c.p**2 * c.q)))


def _d_tail(c):
    return sum((d_term(c, k) for k in half(c.p)), Q(0))


register("sec6.reflect", r"sec6: \sum_{k=1}^{\frac{p-1}{2}}\dots=-(-1)^{\frac{p-1}{2}}\frac{p}{2^{p+3}}\sum_{k=1}^{\frac{p-1}{2}}\frac{(-4)^k(3p+2-3k)(2p+1-k)k}{\dots}\dots",
         None, lambda c: (_d_tail(c), -sgn(c.h) * Q(c.p, 2 ** (c.p + 3)) * e_sum(c, 1)))
register("sec6.reflect-cong", r"sec6: \equiv -(-1)^{\frac{p-1}{2}}\left(p-p^2+2p^2q_p(2)\right) \pmod{p^3}", 3,
         lambda c: (_d_tail(c), -sgn(c.h) * (c.p - c.p**2 + 2 * c.p**2 * c.q)))
register("sec6.g0-sum", r"sec6: \sum_{k=2}^{\frac{p-1}{2}}\frac{22k^2-3k-3}{2^{6k+3}3k(k-1)(2k-1)}{2k\choose k}^2{3k\choose k} \equiv \frac{p}{8}+\frac{p^2}{4}+\frac{15}{128}",
         3, lambda c: (_g0_sum(c), Q(c.p, 8) + Q(c.p**2, 4) + Q(15, 128)))
register("sec6.cubic-tail", r"sec6: \sum_{k=2}^{\frac{p-1}{2}}\frac{11k+3}{2^{6k}}{2k\choose k}^2{3k\choose k}\equiv -\frac{45}{8}+3p+3p^2q_p(2) \pmod{p^3}",
         3, lambda c: (sum((cub(c, k) for k in range(2, c.h + 1)), Q(0)), -Q(45, 8) + 3 * c.p + 3 * c.p**2 * c.q))
register("sec6.cubic-split", r"sec6: \sum_{k=0}^{\frac{p-1}{2}}\frac{11k+3}{2^{6k}}\dots=\frac{45}{8}+\sum_{k=2}^{\frac{p-1}{2}}\dots", None,
         lambda c: (sum((cub(c, k) for k in range(c.h + 1)), Q(0)), Q(45, 8) + sum((cub(c, k) for k in range(2, c.h + 1)), Q(0))))


def _binom_2pk_exact(c, k):
    p, h = c.p, c.h
    num = prod(p + 1, 2 * p - k) * prod(p - h, p - 1)
    den = prod(p + 1, 2 * p - k - h) * c.fact(p - 1)
    return c.C(2 * p - k, h), Q(num, den)


# the typeset product form is garbled; this is the straightforward ratio it stands for
register("sec6.binom-2pk.exact", r"sec6: {2p-k\choose \frac{p-1}{2}}=\frac{(p+p-k)\cdots(p+1)(p-1)\cdots(p-\frac{p-1}{2})}{\dots(p-1)!}",
         None, _binom_2pk_exact, krange=half)
