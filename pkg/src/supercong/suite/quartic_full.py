"""Checks behind the quartic full-range sum: the five-piece split of the G* sum."""

from fractions import Fraction as Q

from .. import wz
from .registry import register
from .terms import gstar, half, lower, prod, quart, sgn

A = wz.WzPair.A


def _rows(p):
    return (0, 1, (p - 1) // 2, p - 1)


def _column(c, k):
    p = c.p
    F = lambda n: wz.evaluate_term(A, "F", n, k, fact=c.fact)  # noqa: E731
    G = lambda n, j: wz.evaluate_term(A, "G", n, j, fact=c.fact)  # noqa: E731
    return F(p) - F(0), sum((G(n, k + 1) - G(n, k) for n in range(p)), Q(0))


register("sec4.column-telescope", r"sec4: F(p,k)-F(0,k)=\sum_{n=0}^{p-1}G(n,k+1)-\sum_{n=0}^{p-1}G(n,k)", None,
         _column, krange=_rows)


def _f_p(c, k):
    p, C = c.p, c.C
    closed = (-Q(sgn(k) * p * (2 * p - k), 2 ** (12 * p)) * C(3 * p, p) * C(2 * p, p)
              * C(2 * p + 2 * k, p + k) * C(2 * p - 2 * k - 2, p - k - 1) * C(4 * p, 2 * p + k))
    return wz.evaluate_term(A, "F", p, k, fact=c.fact), closed


register("sec4.f-p", r"sec4: F(p,k)=-\frac{(-1)^kp(2p-k)}{2^{12p}}{3p\choose p}{2p\choose p}\dots{4p\choose 2p+k}", None,
         _f_p, krange=lambda p: range(p))


def _r_sum(c):
    p, C = c.p, c.C
    return sum((sgn(k) * (2 * p - k) * C(2 * p + 2 * k, p + k) * C(2 * p - 2 * k - 2, p - k - 1) * C(4 * p, 2 * p + k)
                for k in range(p)), Q(0))


def _full_identity(c):
    p, C = c.p, c.C
    lhs = sum((quart(c, k) for k in range(p)), Q(0))
    return lhs, Q(2**8 * p, 2 ** (12 * p)) * C(3 * p, p) * C(2 * p, p) * _r_sum(c)


register("sec4.full-sum.identity", r"sec4: \sum_{k=0}^{p-1}\dots=\frac{2^8p}{2^{12p}}{3p\choose p}{2p\choose p}\sum(-1)^k(2p-k)\dots",
         None, _full_identity)


def upper(p):
    return range((p + 1) // 2, p - 1)


def gstar_lower_sum(c):
    return sum((gstar(c, k) for k in lower(c.p)), Q(0))


def gstar_upper_sum(c):
    return sum((gstar(c, k) for k in upper(c.p)), Q(0))


def _split(c):
    p = c.p
    rhs = gstar_lower_sum(c) + gstar_upper_sum(c) + gstar(c, 0) + gstar(c, c.h) + gstar(c, p - 1)
    return _r_sum(c), rhs


register("sec4.split", r"sec4: \sum_{k=0}^{p-1}(-1)^k(2p-k)\dots=\sum_{k=1}^{\frac{p-3}{2}}G^*(k)+\sum_{k=\frac{p+1}{2}}^{p-2}G^*(k)+G^*(0)+\dots",
         None, _split)

register("sec4.binom-4p-2pk.exact", r"sec4: {4p\choose 2p+k}=\frac{4p(3p+p-1)\cdots(2p+k+1)}{(p+p-k)!}", None,
         lambda c, k: (c.C(4 * c.p, 2 * c.p + k), Q(prod(2 * c.p + k + 1, 4 * c.p), c.fact(2 * c.p - k))),
         krange=lower)


def _binom_4p_2pk(c, k):
    p, H = c.p, c.H
    rhs = (Q(12 * p, p - k) * (1 + 3 * p * H(p - 1)) * (1 + 2 * p * c.Hrange(k + 1, p - 1))
           / (1 + p * H(p - k)) * c.C(p - 1, k))
    return c.C(4 * p, 2 * p + k), rhs


register("sec4.binom-4p-2pk", r"sec4: {4p\choose 2p+k}\equiv \frac{12p}{p-k}\frac{(1+3pH_{p-1})(1+2p\sum_{i=k+1}^{p-1}\frac{1}{i})}{1+pH_{p-k}}{p-1\choose k}",
         3, _binom_4p_2pk, krange=lower)
register("sec4.binom-2p-2k", r"sec4: {2p-2k\choose p-k}\equiv -\frac{2p}{k{2k\choose k}}\left(1-2pH_{k-1}+2pH_{2k-1}\right)", 3,
         lambda c, k: (c.C(2 * c.p - 2 * k, c.p - k),
                       -Q(2 * c.p, k * c.C(2 * k, k)) * (1 - 2 * c.p * c.H(k - 1) + 2 * c.p * c.H(2 * k - 1))),
         krange=lower)
register("sec4.binom-2p+2k", r"sec4: {2p+2k\choose p+k}\equiv \frac{(-1)^k2p}{(2k+1){p+k\choose 2k+1}}\left(1+2pH_{2k}-2pH_{p-k-1}\right)",
         2, lambda c, k: (c.C(2 * c.p + 2 * k, c.p + k),
                          Q(sgn(k) * 2 * c.p, (2 * k + 1) * c.C(c.p + k, 2 * k + 1))
                          * (1 + 2 * c.p * c.H(2 * k) - 2 * c.p * c.H(c.p - k - 1))),
         krange=lower)
register("sec4.binom-pk", r"sec4: {p+k\choose 2k+1}\equiv \frac{(-1)^kp}{(2k+1){2k\choose k}} \pmod{p^3}", 3,
         lambda c, k: (c.C(c.p + k, 2 * k + 1), Q(sgn(k) * c.p, (2 * k + 1) * c.C(2 * k, k))),
         krange=lower)


def _gstar_lower(c, k):
    p, H, C = c.p, c.H, c.C
    lhs = sgn(k) * Q(p - k, 2) * C(2 * p + 2 * k, p + k) * C(2 * p - 2 * k, p - k) * C(4 * p, 2 * p + k)
    rhs = -Q(24 * p * p, k) * (1 - 2 * p * H(p - 1 - k) - p * H(p - k) - 5 * p * H(k) + 4 * p * H(2 * k - 1) + Q(3 * p, k))
    return lhs, rhs


register("sec4.gstar-lower", r"sec4: (-1)^k\frac{p-k}{2}{2p+2k\choose p+k}{2p-2k\choose p-k}{4p\choose 2p+k}\equiv -\frac{24p^2}{k}\left(\dots\right)",
         4, _gstar_lower, krange=lower)
register("sec4.rational-lower", r"sec4: \frac{2p-k}{2p-2k-1}\equiv \frac{2kp}{(2k+1)^2}-\frac{2p-k}{2k+1} \pmod{p^2}", 2,
         lambda c, k: (Q(2 * c.p - k, 2 * c.p - 2 * k - 1),
                       Q(2 * k * c.p, (2 * k + 1) ** 2) - Q(2 * c.p - k, 2 * k + 1)),
         krange=lower)


def _s(c, f):
    return sum((f(k) for k in lower(c.p)), Q(0))


def _gstar_lower_cong(c):
    p, H = c.p, c.H
    rhs = (-48 * p**3 * H((p - 3) // 2) + (96 * p**3 - 24 * p * p) * _s(c, lambda k: Q(1, 2 * k + 1))
           - 48 * p**3 * _s(c, lambda k: Q(1, (2 * k + 1) ** 2))
           + 192 * p**3 * _s(c, lambda k: H(k) / (2 * k + 1))
           - 96 * p**3 * _s(c, lambda k: H(2 * k - 1) / (2 * k + 1)))
    return gstar_lower_sum(c), rhs


register("sec4.gstar-lower-sum", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}G^*(k)\equiv -48p^3H_{\frac{p-3}{2}}+(96p^3-24p^2)\sum\frac{1}{2k+1}-\dots",
         4, _gstar_lower_cong)


def reflected(c, k):
    p, C = c.p, c.C
    return (sgn(k) * Q((p + 1 + k) * (2 * p - k), 2 * (4 * p - 2 * k - 1))
            * C(4 * p - 2 * k, 2 * p - k) * C(2 * k, k) * C(4 * p, p + 1 + k))


register("sec4.reflect", r"sec4: \sum_{k=\frac{p+1}{2}}^{p-2}G^*(k)=\sum_{k=1}^{\frac{p-3}{2}}\frac{(-1)^k(p+1+k)(2p-k)}{2(4p-2k-1)}\dots",
         None, lambda c: (gstar_upper_sum(c), _s(c, lambda k: reflected(c, k))))
register("sec4.binom-4p-p1k.exact", r"sec4: {4p\choose p+1+k}=\frac{4p(3p+p+1)\cdots(3p-k)}{(p+1+k)!}", None,
         lambda c, k: (c.C(4 * c.p, c.p + 1 + k), Q(prod(3 * c.p - k, 4 * c.p), c.fact(c.p + 1 + k))),
         krange=lower)
register("sec4.binom-4p-p1k", r"sec4: {4p\choose p+1+k}\equiv \frac{(-1)^k12p(1+3pH_{p-1})(1-3pH_k)}{(k+1)(1+pH_{k+1})}", 3,
         lambda c, k: (c.C(4 * c.p, c.p + 1 + k),
                       Q(sgn(k) * 12 * c.p, k + 1) * (1 + 3 * c.p * c.H(c.p - 1)) * (1 - 3 * c.p * c.H(k))
                       / (1 + c.p * c.H(k + 1))),
         krange=lower)
register("sec4.binom-4p-2k.exact", r"sec4: {4p-2k \choose 2p-k}{2k\choose k}={4p\choose 2p}{2p\choose k}^2/{4p\choose 2k}", None,
         lambda c, k: (c.C(4 * c.p - 2 * k, 2 * c.p - k) * c.C(2 * k, k),
                       Q(c.C(4 * c.p, 2 * c.p) * c.C(2 * c.p, k) ** 2, c.C(4 * c.p, 2 * k))),
         krange=lower)


def _binom_4p_2k(c, k):
    p, H, C = c.p, c.H, c.C
    rhs = (-C(4 * p, 2 * p) * Q(2 * p, k) * (1 + p * c.Hrange(p + 1 - k, p - 1)) ** 2 * (1 - p * H(k - 1)) ** 2
           / ((1 + 3 * p * c.Hrange(p + 1 - 2 * k, p - 1)) * (1 - p * H(2 * k - 1))))
    return C(4 * p - 2 * k, 2 * p - k) * C(2 * k, k), rhs


register("sec4.binom-4p-2k", r"sec4: {4p-2k \choose 2p-k}{2k\choose k}\equiv -{4p\choose 2p}\frac{2p(1+p\sum_{i=p+1-k}^{p-1}\frac{1}{i})^2\dots}{\dots}",
         3, _binom_4p_2k, krange=lower)


def _upper_ratio(c, k):
    p, H, C = c.p, c.H, c.C
    lhs = sgn(k) * C(4 * p, p + 1 + k) * Q(C(4 * p - 2 * k, 2 * p - k) * C(2 * k, k), C(4 * p, 2 * p))
    rhs = -24 * p * p * Q(1, k * (k + 1)) * (1 + 4 * p * H(2 * k - 1) - 8 * p * H(k - 1) - Q(4 * p, k) - Q(p, k + 1))
    return lhs, rhs


register("sec4.upper-ratio", r"sec4: (-1)^k{4p\choose p+1+k}{4p-2k \choose 2p-k}{2k\choose k}/{4p\choose 2p}\equiv -\frac{24p^2}{k(k+1)}\left(\dots\right)",
         4, _upper_ratio, krange=lower)
register("sec4.binom-4p-2p", r"sec4: {4p \choose 2p}\equiv 6 \pmod{p^3}", 3, lambda c: (c.C(4 * c.p, 2 * c.p), 6))
register("sec4.rational-upper", r"sec4: \frac{(p+1+k)(2p-k)}{4p-2k-1} \equiv -p\left(\frac{3}{2(2k+1)}+\frac{1}{(2k+1)^2}-\frac{1}{2}\right)+\dots",
         2, lambda c, k: (Q((c.p + 1 + k) * (2 * c.p - k), 4 * c.p - 2 * k - 1),
                          -c.p * (Q(3, 2 * (2 * k + 1)) + Q(1, (2 * k + 1) ** 2) - Q(1, 2))
                          + Q(2 * k + 1, 4) - Q(1, 4 * (2 * k + 1))),
         krange=lower)


def _gstar_upper_cong(c):
    p, H = c.p, c.H
    rhs = (72 * (4 * p**3 - p * p) * _s(c, lambda k: Q(1, 1 + 2 * k))
           - 288 * p**3 * _s(c, lambda k: Q(1, (1 + 2 * k) ** 2))
           - 144 * p**3 * _s(c, lambda k: Q(1, k))
           - 288 * p**3 * _s(c, lambda k: H(2 * k - 1) / (2 * k + 1))
           + 576 * p**3 * _s(c, lambda k: H(k) / (2 * k + 1)))
    return gstar_upper_sum(c), rhs


register("sec4.gstar-upper-sum", r"sec4: \sum_{k=\frac{p+1}{2}}^{p-2}G^*(k)\equiv 72(4p^3-p^2)\sum\frac{1}{1+2k}-288p^3\sum\frac{1}{(1+2k)^2}-\dots",
         4, _gstar_upper_cong)

register("sec4.odd-recip.reflect", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{1}{1+2k}=\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{p-2k}-1", None,
         lambda c: (_s(c, lambda k: Q(1, 1 + 2 * k)), sum((Q(1, c.p - 2 * k) for k in half(c.p)), Q(0)) - 1))
register("sec4.odd-recip", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{1}{1+2k}\equiv q_p(2)-\frac{p}{2}q_p(2)^2-1 \pmod{p^2}", 2,
         lambda c: (_s(c, lambda k: Q(1, 1 + 2 * k)), c.q - Q(c.p, 2) * c.q**2 - 1))
register("sec4.odd-recip2.reflect", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{1}{(1+2k)^2}=\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{(p-2k)^2}-1", None,
         lambda c: (_s(c, lambda k: Q(1, (1 + 2 * k) ** 2)),
                    sum((Q(1, (c.p - 2 * k) ** 2) for k in half(c.p)), Q(0)) - 1))
register("sec4.odd-recip2", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{1}{(1+2k)^2}\equiv -1 \pmod{p}", 1,
         lambda c: (_s(c, lambda k: Q(1, (1 + 2 * k) ** 2)), -1))
register("sec4.h-reflect", r"sec4: H_{\frac{p-1}{2}-k}\equiv H_{\frac{p-1}{2}}+2H_{2k}-H_k \pmod{p}", 1,
         lambda c, k: (c.H(c.h - k), c.H(c.h) + 2 * c.H(2 * k) - c.H(k)),
         krange=lambda p: range(0, (p - 1) // 2 + 1))
register("sec4.hk-over-k", r"sec4: \sum_{k=1}^{\frac{p-1}{2}}\frac{H_k}{k}\equiv 2q_p(2)^2 \pmod{p}", 1,
         lambda c: (sum((c.H(k) / k for k in half(c.p)), Q(0)), 2 * c.q**2))
register("sec4.hk-odd.reflect", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{H_k}{2k+1}=\sum_{k=1}^{\frac{p-1}{2}}\frac{H_{\frac{p-1}{2}-k}}{p-2k}", None,
         lambda c: (_s(c, lambda k: c.H(k) / (2 * k + 1)),
                    sum((c.H(c.h - k) / (c.p - 2 * k) for k in half(c.p)), Q(0))))
register("sec4.hk-odd", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{H_k}{2k+1}\equiv -2q_p(2)^2 \pmod{p}", 1,
         lambda c: (_s(c, lambda k: c.H(k) / (2 * k + 1)), -2 * c.q**2))


def _h2k_odd_reflect(c):
    p, H = c.p, c.H
    rhs = (sum((H(p - 1 - 2 * k) / (p - 2 * k) for k in half(p)), Q(0)) + _s(c, lambda k: Q(1, 2 * k + 1))
           - H(c.h) / 2 + Q(1, p - 1))
    return _s(c, lambda k: H(2 * k - 1) / (2 * k + 1)), rhs


register("sec4.h2k-odd.reflect", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{H_{2k-1}}{2k+1}=\sum_{k=1}^{\frac{p-1}{2}}\frac{H_{p-1-2k}}{p-2k}+\dots",
         None, _h2k_odd_reflect)
register("sec4.h2k-odd", r"sec4: \sum_{k=1}^{\frac{p-3}{2}}\frac{H_{2k-1}}{2k+1}\equiv 2q_p(2)-\frac{1}{2}q_p(2)^2-2 \pmod{p}", 1,
         lambda c: (_s(c, lambda k: c.H(2 * k - 1) / (2 * k + 1)), 2 * c.q - Q(c.q**2, 2) - 2))

register("sec4.binom-4p-5h.exact", r"sec4: {4p\choose \frac{5p-1}{2}}=\frac{4p(3p+p-1)\cdots(2p+\frac{p+1}{2})}{(p+\frac{p+1}{2})\cdots(p+1)p!}",
         None, lambda c: (c.C(4 * c.p, (5 * c.p - 1) // 2),
                          Q(prod((5 * c.p + 1) // 2, 4 * c.p), prod(c.p + 1, c.p + (c.p + 1) // 2) * c.fact(c.p))))


def _binom_4p_5h(c):
    p, q = c.p, c.q
    rhs = c.C(p - 1, c.h) * (24 * p - 72 * p * p + 216 * p**3 + (144 * p * p - 432 * p**3) * q + 360 * p**3 * q * q)
    return c.C(4 * p, (5 * p - 1) // 2), rhs


register("sec4.binom-4p-5h", r"sec4: {4p\choose \frac{5p-1}{2}}\equiv {p-1\choose \frac{p-1}{2}}\left(24p-72p^2+216p^3+\dots\right) \pmod{p^4}",
         4, _binom_4p_5h)
register("sec4.binom-3p1", r"sec4: {3p-1\choose \frac{3p-1}{2}}\equiv 2{p-1\choose \frac{p-1}{2}}\left(1+4pq_p(2)+6p^2q_p(2)^2\right)", 3,
         lambda c: (c.C(3 * c.p - 1, (3 * c.p - 1) // 2),
                    2 * c.C(c.p - 1, c.h) * (1 + 4 * c.p * c.q + 6 * c.p**2 * c.q**2)))
register("sec4.chain.a", r"sec4: {4p\choose p}\equiv4 \pmod{p^3}", 3, lambda c: (c.C(4 * c.p, c.p), 4))
register("sec4.chain.b", r"sec4: 2{2p\choose p}\equiv4 \pmod{p^3}", 3, lambda c: (2 * c.C(2 * c.p, c.p), 4))
register("sec4.chain.c", r"sec4: 4{2p-1\choose p-1} \equiv4 \pmod{p^3}", 3, lambda c: (4 * c.C(2 * c.p - 1, c.p - 1), 4))
register("sec4.gstar-0", r"sec4: G^*(0)\equiv -24p^2\left(1+2p\right) \pmod{p^4}", 4,
         lambda c: (gstar(c, 0), -24 * c.p**2 * (1 + 2 * c.p)))
register("sec4.gstar-last", r"sec4: G^*(p-1)\equiv -72p^2\left(1+4p\right) \pmod{p^4}", 4,
         lambda c: (gstar(c, c.p - 1), -72 * c.p**2 * (1 + 4 * c.p)))
register("sec4.gstar-mid", r"sec4: G^*(\frac{p-1}{2})\equiv 2^{6(p-1)}\left(24p+240p^2q_p(2)+1080p^3q_p(2)^2\right)", 4,
         lambda c: (gstar(c, c.h), 2 ** (6 * (c.p - 1)) * (24 * c.p + 240 * c.p**2 * c.q + 1080 * c.p**3 * c.q**2)))
register("sec4.split.piece-sum", r"sec4: \sum_{k=0}^{p-1}G^*(k)\equiv 24p+288p^2q_p(2)+1584p^3q_p(2)^2 \pmod{p^4}", 4,
         lambda c: (sum((gstar(c, k) for k in range(c.p)), Q(0)),
                    24 * c.p + 288 * c.p**2 * c.q + 1584 * c.p**3 * c.q**2))
register("sec4.binom-3p2p", r"sec4: {3p\choose p}{2p \choose p}\equiv 6 \pmod{p^3}", 3,
         lambda c: (c.C(3 * c.p, c.p) * c.C(2 * c.p, c.p), 6))
