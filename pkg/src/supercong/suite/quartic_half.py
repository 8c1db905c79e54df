"""Checks behind the quartic half-range sum: the inner sum M and binomial expansions mod p^k."""

from fractions import Fraction as Q

from .. import wz
from .registry import register
from .terms import M, central, half, lower, prod, quart, sgn


def _f_half(c, k):
    p, h, C = c.p, c.h, c.C
    closed = (sgn(h) * Q(p - 1, 2 ** (6 * p - 5)) * C(3 * h, h) * C(p - 1, h)
              * sgn(k) * (p - 1 - k) * central(c, p - 1 + 2 * k) * central(c, p - 3 - 2 * k)
              * C(2 * p - 2, p - 1 + k))
    return wz.evaluate_term(wz.WzPair.A, "F", h, k, fact=c.fact), closed


register("sec3.f-half", r"sec3: F(\frac{p-1}{2},k)=(-1)^{\frac{p-1}{2}}\frac{p-1}{2^{6p-5}}\dots", None,
         _f_half, krange=lambda p: range(p))


def _half_identity(c):
    p, h, C = c.p, c.h, c.C
    s = sgn(h)
    lhs = sum((quart(c, k) for k in range(h)), Q(0))
    rhs = (-s * Q(2**5 * p * (p - 1) ** 3, 2 ** (6 * (p - 1)) * (2 * p - 1) * (p - 2))
           * C(3 * h, h) * C(p - 1, h) ** 3 * C(2 * p - 1, p - 1)
           - s * Q(2**5 * (p - 1), 2 ** (6 * (p - 1))) * C(3 * h, h) * C(p - 1, h) * M(c))
    return lhs, rhs


register("sec3.half-sum.identity", r"sec3: \sum_{k=0}^{\frac{p-3}{2}}\dots=-(-1)^{\frac{p-1}{2}}\frac{2^5p(p-1)^3}{2^{6(p-1)}(2p-1)(p-2)}\dots-\dots\mathcal{M}",
         None, _half_identity)


def _cb_plus_exact(c, k):
    p = c.p
    rhs = p * c.C(p - 1, c.h) * Q(4**k * prod(p + 1, p + 2 * k - 1), prod_sq_odd(p, k))
    return central(c, p - 1 + 2 * k), rhs


def prod_sq_odd(p, k):
    out = 1
    for j in range(1, k + 1):
        out *= (p + 2 * j - 1) ** 2
    return out


def _cb_plus_base(c, k):
    p = c.p
    return c.C(p - 1, c.h) * Q(16**k * p, (p + 2 * k) * c.C(2 * k, k))


def _cb_plus_h11(c, k):
    p, H = c.p, c.H
    rhs = (_cb_plus_base(c, k) * (1 + Q(p, 2) * H(k) + Q(p * p, 4) * c.H11(k)) ** 2
           / (1 + p * H(2 * k) + p * p * c.H11(2 * k)))
    return central(c, p - 1 + 2 * k), rhs


def _cb_plus(c, k):
    p, H = c.p, c.H
    a, b = H(k), H(2 * k)
    poly = 1 + p * (a - b) + Q(p * p, 4) * (2 * a * a + 2 * b * b + 2 * H(2 * k, 2) - H(k, 2) - 4 * a * b)
    return central(c, p - 1 + 2 * k), poly * _cb_plus_base(c, k)


register("sec3.cb-plus.exact", r"sec3: {p-1+2k\choose \frac{p-1+2k}{2}}=p{p-1 \choose \frac{p-1}{2}}\frac{2^{2k}\prod(p+j)}{\prod_{j=1}^{k}(p+2j-1)^2}",
         None, _cb_plus_exact, krange=lambda p: range(1, p))
register("sec3.cb-plus.h11", r"sec3: {p-1+2k\choose \frac{p-1+2k}{2}}\equiv\dots\frac{(1+\frac{p}{2}H_k+\frac{p^2}{4}H(1,1;k))^2}{1+pH_{2k}+p^2H(1,1;2k)}",
         4, _cb_plus_h11, krange=lambda p: range(0, (p - 1) // 2 + 1))
register("sec3.cb-plus", r"sec3: \equiv\left(1+p(H_k-H_{2k})+\frac{p^2}{4}(\dots)\right){p-1 \choose \frac{p-1}{2}}\frac{4^{2k}p}{(p+2k){2k\choose k}}",
         4, _cb_plus, krange=lambda p: range(0, (p - 1) // 2 + 1))


def _cb_minus_base(c, k):
    return c.C(c.p - 1, c.h) * Q(c.C(2 * k, k), 16**k)


def _cb_minus_exact(c, k):
    p, h, C = c.p, c.h, c.C
    return central(c, p - 1 - 2 * k), Q(C(p - 1, h) * C(h, k) ** 2, C(2 * k, k) * C(p - 1, 2 * k))


def _cb_minus_h11(c, k):
    p, H = c.p, c.H
    rhs = (_cb_minus_base(c, k) * (1 - p * H(2 * k) + p * p * c.H11(2 * k))
           / (1 - Q(p, 2) * H(k) + Q(p * p, 4) * c.H11(k)) ** 2)
    return central(c, p - 1 - 2 * k), rhs


def _cb_minus(c, k):
    p, H = c.p, c.H
    a, b = H(k), H(2 * k)
    poly = 1 + p * (a - b) + Q(p * p, 4) * (2 * a * a + 2 * b * b + H(k, 2) - 2 * H(2 * k, 2) - 4 * a * b)
    return central(c, p - 1 - 2 * k), poly * _cb_minus_base(c, k)


_half0 = lambda p: range(0, (p - 1) // 2 + 1)  # noqa: E731

register("sec3.cb-minus.exact", r"sec3: {p-1-2k\choose \frac{p-1-2k}{2}}=\frac{{p-1\choose (p-1)/2}{(p-1)/2 \choose k}^2}{{2k\choose k}{p-1\choose 2k}}",
         None, _cb_minus_exact, krange=_half0)
register("sec3.cb-minus.h11", r"sec3: \equiv{p-1\choose \frac{p-1}{2}}\frac{{2k\choose k}}{16^k}\frac{1-pH_{2k}+p^2H(1,1;2k)}{(1-\frac{p}{2}H_k+\frac{p^2}{4}H(1,1;k))^2}",
         3, _cb_minus_h11, krange=_half0)
register("sec3.cb-minus", r"sec3: \equiv\left(1+p(H_k-H_{2k})+\frac{p^2}{4}(\dots)\right){p-1\choose \frac{p-1}{2}}\frac{{2k\choose k}}{16^k}",
         3, _cb_minus, krange=_half0)

register("sec3.binom-p1", r"sec3: {p-1\choose k}\equiv (-1)^k\left(1-pH_k+p^2H(1,1;k)\right) \pmod {p^3}", 3,
         lambda c, k: (c.C(c.p - 1, k), sgn(k) * (1 - c.p * c.H(k) + c.p**2 * c.H11(k))),
         krange=lambda p: range(p))

register("sec3.binom-2p2.exact", r"sec3: {2p-2\choose p-1-k}=\frac{(p+p-2)(p+p-3)\cdots(p+k)}{(p-1-k)!}", None,
         lambda c, k: (c.C(2 * c.p - 2, c.p - 1 - k), Q(prod(c.p + k, 2 * c.p - 2), c.fact(c.p - 1 - k))),
         krange=lambda p: range(p))


def _binom_2p2_tail(c, k):
    p = c.p
    s1 = c.Hrange(k, p - 2)
    s2 = (s1 * s1 - c.Hrange(k, p - 2, 2)) / 2
    return c.C(2 * p - 2, p - 1 - k), Q(k, p - 1) * (1 + p * s1 + p * p * s2) * c.C(p - 1, k)


def _binom_2p2(c, k):
    p, a = c.p, c.H(k)
    rhs = -k * sgn(k) * (1 + 2 * p + 4 * p * p + Q(p + 2 * p * p, k)
                         - (2 * p + 4 * p * p + Q(2 * p * p, k)) * a + 2 * p * p * a * a)
    return c.C(2 * p - 2, p - 1 - k), rhs


register("sec3.binom-2p2.tail", r"sec3: \equiv \frac{k(1+p\sum_{k\leq j \leq p-2}\frac{1}{j}+p^2\sum\frac{1}{ij})}{p-1}{p-1\choose k}",
         3, _binom_2p2_tail, krange=lambda p: range(1, p))
register("sec3.binom-2p2", r"sec3: {2p-2\choose p-1-k}\equiv -k(-1)^k\left(1+2p+4p^2+\frac{p+2p^2}{k}-\dots+2p^2H_k^2\right)",
         3, _binom_2p2, krange=lambda p: range(1, p))


def _rational(c, k):
    p = c.p
    lhs = Q(k * (p - 1 - 2 * k) * (p - 1 - k), (p - 2 - 2 * k) * (p + 2 * k))
    rhs = -(Q(2 * k + 1 - 3 * p, 4) - Q(2 * p - 5 * p * p, 16 * k) + Q(p * p, 16 * k * k)
            + Q(2 * p + p * p, 16 * (k + 1)) + Q(p * p, 16 * (k + 1) ** 2))
    return lhs, rhs


register("sec3.rational", r"sec3: \frac{k(p-1-2k)(p-1-k)}{(p-2-2k)(p+2k)}\equiv -\left(\frac{2k+1-3p}{4}-\dots\right)",
         3, _rational, krange=lower)


def _odd_recip(c):
    return sum((Q(1, 2 * k - 1) for k in half(c.p)), Q(0))


register("sec3.odd-recip.reflect", r"sec3: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{2k-1}=\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{p-2k}",
         None, lambda c: (_odd_recip(c), sum((Q(1, c.p - 2 * k) for k in half(c.p)), Q(0))))
register("sec3.odd-recip", r"sec3: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{2k-1}\equiv -\frac{1}{2}H_{\frac{p-1}{2}}", 1,
         lambda c: (_odd_recip(c), -c.H(c.h) / 2))


def _m_expansion(c):
    p, h, H = c.p, c.h, c.H
    ks = half(p)
    rhs = (-Q(3 * p**3 + 3 * p, 16) + Q(2 * p * p - 3 * p**3, 8) * H(h) + Q(p**3, 8) * H(h, 2)
           - Q(p**3, 2) * sum((H(2 * k) / k for k in ks), Q(0))
           - (p * p - 2 * p**3) * sum((k * H(2 * k) for k in ks), Q(0))
           - Q(p * p - p**3, 2) * sum((H(2 * k) for k in ks), Q(0))
           + Q(p**3, 2) * sum(((2 * k + 1) * H(2 * k) ** 2 for k in ks), Q(0)))
    return M(c) / c.C(p - 1, h) ** 2, rhs


register("sec3.m-expansion", r"sec3: \mathcal{M}/{p-1\choose \frac{p-1}{2}}^2\equiv -\frac{3p^3+3p}{16}+\frac{2p^2-3p^3}{8}H_{\frac{p-1}{2}}+\dots",
         4, _m_expansion)
register("sec3.morley", r"sec3: {p-1\choose \frac{p-1}{2}}\equiv (-1)^{\frac{p-1}{2}}4^{p-1} \pmod{p^3}", 3,
         lambda c: (c.C(c.p - 1, c.h), sgn(c.h) * 4 ** (c.p - 1)))


def _m_closed(c):
    p, q = c.p, c.q
    return M(c), (-Q(3 * p + 2 * p * p + 6 * p**3, 16) - Q(9 * p * p - 2 * p**3, 8) * q
                  - Q(45 * p**3, 16) * q * q)


register("sec3.m-closed", r"sec3: \mathcal{M}\equiv -\frac{3p+2p^2+6p^3}{16}-\frac{9p^2-2p^3}{8}q_p(2)-\frac{45p^3}{16}q_p(2)^2",
         4, _m_closed)

register("sec3.binom-3h.exact", r"sec3: {\frac{3p-3}{2}\choose \frac{p-1}{2}}=\frac{p(p+\frac{p-3}{2})\cdots(p+1)}{(\frac{p-1}{2})!}",
         None, lambda c: (c.C(3 * c.h, c.h), Q(c.p * prod(c.p + 1, c.p + (c.p - 3) // 2), c.fact(c.h))))
register("sec3.binom-3h.h11", r"sec3: \equiv \frac{2p}{3p-1}\left(1+pH_{\frac{p-1}{2}}+p^2H(1,1;\frac{p-1}{2})\right)",
         4, lambda c: (c.C(3 * c.h, c.h), Q(2 * c.p, 3 * c.p - 1) * (1 + c.p * c.H(c.h) + c.p**2 * c.H11(c.h))))


def _binom_3h(c):
    p, q = c.p, c.q
    return c.C(3 * c.h, c.h), (-2 * p - 6 * p * p - 18 * p**3 + 4 * (p * p + 3 * p**3) * q - 6 * p**3 * q * q)


register("sec3.binom-3h", r"sec3: {\frac{3p-3}{2}\choose \frac{p-1}{2}}\equiv-2p-6p^2-18p^3+\dots", 4, _binom_3h)
register("sec3.binom-2p1", r"sec3: {2p-1\choose p-1}\equiv 1\pmod{p^3}", 3,
         lambda c: (c.C(2 * c.p - 1, c.p - 1), 1))
register("sec3.fermat-power", r"sec3: (2^{p-1})^\alpha=(1+pq_p(2))^\alpha", None,
         lambda c, a: (2 ** ((c.p - 1) * a), (1 + c.p * c.q) ** a),
         krange=lambda p: range(1, 6), kname="a")


def _half_sum(c):
    p, q = c.p, c.q
    lhs = sum((quart(c, k) for k in range(c.h)), Q(0))
    return lhs, (-20 * p * p - 48 * p**3 - 152 * p**4 + (64 * p**3 + 96 * p**4) * q - 96 * p**4 * q * q)


register("sec3.half-sum", r"sec3: \sum_{k=0}^{\frac{p-3}{2}}\dots\equiv -20p^2-48p^3-152p^4+(64p^3+96p^4)q_p(2)-96p^4q_p(2)^2",
         5, _half_sum)


def last_term(c):
    p, h, C = c.p, c.h, c.C
    return (sgn(h) * Q(p * (9 + Q(75 * (p - 1), 2) + 43 * (p - 1) ** 2), 2 ** (6 * (p - 1)) * (2 * p - 1))
            * C(p - 1, h) ** 3 * C(3 * h, h) * C(2 * p - 1, p - 1))


register("sec3.last-term.exact", r"sec3: (-1)^{\frac{p-1}{2}}\frac{p(9+75(p-1)/2+43(p-1)^2)}{2^{6(p-1)}(2p-1)}{p-1\choose (p-1)/2}^3\dots",
         None, lambda c: (quart(c, c.h), last_term(c)))


def _last_cong(c):
    p, q = c.p, c.q
    return last_term(c), (29 * p * p + 48 * p**3 + 152 * p**4 - (58 * p**3 + 96 * p**4) * q + 87 * p**4 * q * q)


register("sec3.last-term", r"sec3: \equiv 29p^2+48p^3+152p^4-(58p^3+96p^4)q_p(2)+87p^4q_p(2)^2 \pmod{p^5}", 5, _last_cong)
register("sec3.half-sum.split", r"sec3: \sum_{k=0}^{\frac{p-1}{2}}\dots=(-1)^{\frac{p-1}{2}}\dots+\sum_{k=0}^{\frac{p-3}{2}}\dots",
         None, lambda c: (sum((quart(c, k) for k in range(c.h + 1)), Q(0)),
                          last_term(c) + sum((quart(c, k) for k in range(c.h)), Q(0))))
