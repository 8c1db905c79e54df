"""Checks behind the cubic full-range sum: the second WZ pair and the four-piece split of F*."""

from fractions import Fraction as Q

from .. import wz
from .registry import register
from .terms import a_term, cub, fstar, g0b, half, lower, prod, sgn

B = wz.WzPair.B


def _f_sum_lhs(c):
    p = c.p
    return Q(p * p, 2 ** (6 * p + 1)) * c.C(2 * p, p) * sum((a_term(c, k) for k in range(p)), Q(0))


def _f_sum_identity(c):
    p, C = c.p, c.C
    tail = sum((Q(22 * k * k - 3 * k - 3, 2 ** (6 * k) * k * (k - 1) * (2 * k - 1)) * C(2 * k, k) ** 2 * C(3 * k, k)
                for k in range(2, p)), Q(0))
    return _f_sum_lhs(c), Q(15, 128) - tail / 24


register("sec5.f-sum.identity", r"sec5: \frac{p^2}{2^{6p+1}}{2p\choose p}\sum_{k=0}^{p-1}\dots=\frac{15}{128}-\frac{1}{24}\sum_{k=2}^{p-1}\frac{22k^2-3k-3}{2^{6k}k(k-1)(2k-1)}\dots",
         None, _f_sum_identity)
register("sec5.f-sum.wz", r"sec5: \sum_{k=0}^{p-1}F^{'}(p,k)=\frac{p^2}{2^{6p+1}}{2p\choose p}\sum_{k=0}^{p-1}\dots", None,
         lambda c: (sum((wz.evaluate_term(B, "F", c.p, k, fact=c.fact) for k in range(c.p)), Q(0)), _f_sum_lhs(c)))


def _t(c, n):
    f = c.fact
    return Q(n**3 * f(2 * n) * f(3 * n) * 32, 2 ** (6 * n) * (2 * n - 1) * (n - 1) * f(n) ** 5)


register("sec5.delta", r"sec5: g_n-48G^{'}(n,0)=\Delta_n\left(\frac{n^3(2n)!(3n)!}{2^{6n-5}(2n-1)(n-1)n!^5}\right)", None,
         lambda c, n: (cub(c, n) - 48 * wz.evaluate_term(B, "G", n, 0, fact=c.fact), _t(c, n + 1) - _t(c, n)),
         krange=lambda p: range(2, p), kname="n")


def _delta_sum(c):
    p, C = c.p, c.C
    lhs = sum((cub(c, n) - 48 * g0b(c, n) for n in range(2, p)), Q(0))
    rhs = Q(p**3, 2 ** (6 * p - 5) * (p - 1) * (2 * p - 1)) * C(2 * p, p) ** 2 * C(3 * p, p) - Q(45, 4)
    return lhs, rhs


register("sec5.delta-sum", r"sec5: \sum_{n=2}^{p-1}\frac{11n+3}{2^{6n}}\dots-48\sum_{n=2}^{p-1}\dots=\frac{p^3}{2^{6p-5}(p-1)(2p-1)}{2p\choose p}^2{3p\choose p}-\frac{45}{4}",
         None, _delta_sum)


def fstar_all(c):
    return sum((fstar(c, k) for k in range(1, c.p)), Q(0))


def a_sum(c):
    return sum((a_term(c, k) for k in range(1, c.p)), Q(0))


register("sec5.reflect", r"sec5: \sum_{k=1}^{p-1}\dots=-\frac{1}{4^p}\sum_{k=1}^{p-1}\frac{(-1)^k2^{2k}(6p-3k-1)k}{(2p-k-1)(2p-k)(4p-2k-1)(p-k)}\dots",
         None, lambda c: (a_sum(c), -Q(1, 4**c.p) * fstar_all(c)))


def upper(p):
    return range((p + 1) // 2, p - 1)


def fs_lower(c):
    return sum((fstar(c, k) for k in lower(c.p)), Q(0))


def fs_upper(c):
    return sum((fstar(c, k) for k in upper(c.p)), Q(0))


register("sec5.split", r"sec5: \sum_{k=1}^{p-1}\dots=\sum_{k=1}^{\frac{p-3}{2}}F^*(p,k)+\sum_{k=\frac{p+1}{2}}^{p-2}F^*(p,k)+F^*(p,p-1)+F^*(p,\frac{p-1}{2})",
         None, lambda c: (fstar_all(c), fs_lower(c) + fs_upper(c) + fstar(c, c.p - 1) + fstar(c, c.h)))

register("sec5.binom-4pk1.exact", r"sec5: {4p-k-1\choose p}=\frac{(3p+p-1)\cdots(3p-k)}{p!}", None,
         lambda c, k: (c.C(4 * c.p - k - 1, c.p), Q(prod(3 * c.p - k, 4 * c.p - k - 1), c.fact(c.p))),
         krange=lower)
register("sec5.binom-4pk1", r"sec5: {4p-k-1\choose p}\equiv 3(-1)^k/{p-1\choose k} \pmod{p}", 1,
         lambda c, k: (c.C(4 * c.p - k - 1, c.p), Q(3 * sgn(k), c.C(c.p - 1, k))),
         krange=lower)
register("sec5.ratio-4p2p", r"sec5: {4p\choose 2p}/{2p\choose p}=3 \pmod{p}", 1,
         lambda c: (Q(c.C(4 * c.p, 2 * c.p), c.C(2 * c.p, c.p)), 3))
register("sec5.binom-identity", r"sec5: {2n-2k\choose n-k}=\frac{{2n\choose n}{n\choose k}^2}{{2k\choose k}{2n\choose 2k}}", None,
         lambda c, k: (c.C(2 * c.p - 2 * k, c.p - k),
                       Q(c.C(2 * c.p, c.p) * c.C(c.p, k) ** 2, c.C(2 * k, k) * c.C(2 * c.p, 2 * k))),
         krange=lambda p: range(p + 1))


def _ratio(c, k):
    p, C = c.p, c.C
    return Q(C(4 * p - 2 * k, 2 * p - k), C(2 * p - 2 * k, p - k))


register("sec5.ratio.exact", r"sec5: {4p-2k\choose 2p-k}/{2p-2k\choose p-k}=\frac{{4p \choose 2p}{2p \choose 2k}{2p \choose k}^2}{{2p \choose p}{4p \choose 2k}{p \choose k}^2}",
         None, lambda c, k: (_ratio(c, k), Q(c.C(4 * c.p, 2 * c.p) * c.C(2 * c.p, 2 * k) * c.C(2 * c.p, k) ** 2,
                                              c.C(2 * c.p, c.p) * c.C(4 * c.p, 2 * k) * c.C(c.p, k) ** 2)),
         krange=lower)
register("sec5.ratio", r"sec5: {4p-2k\choose 2p-k}/{2p-2k\choose p-k}\equiv 6 \pmod{p}", 1,
         lambda c, k: (_ratio(c, k), 6), krange=lower)


def _sl(c, f):
    return sum((f(k) for k in lower(c.p)), Q(0))


def _sh(c, f):
    return sum((f(k) for k in half(c.p)), Q(0))


def _fl_a(c):
    p = c.p
    return fs_lower(c), 18 * _sl(c, lambda k: Q(4**k * (6 * p - 3 * k - 1) * k,
                                               (2 * p - k - 1) * (2 * p - k) * (4 * p - 2 * k - 1) * (p - k)))


register("sec5.fstar-lower.a", r"sec5: \sum_{k=1}^{\frac{p-3}{2}}F^*(p,k)\equiv 18\sum_{k=1}^{\frac{p-3}{2}}\frac{2^{2k}(6p-3k-1)k}{(2p-k-1)(2p-k)(4p-2k-1)(p-k)}",
         1, _fl_a)
register("sec5.fstar-lower.b", r"sec5: \equiv -18\sum_{k=1}^{\frac{p-3}{2}} 4^k\left(\frac{1}{k}+\frac{2}{2k+1}-\frac{2}{k+1}\right)", 1,
         lambda c: (fs_lower(c), -18 * _sl(c, lambda k: 4**k * (Q(1, k) + Q(2, 2 * k + 1) - Q(2, k + 1)))))


def _inv_odd(c):
    return _sh(c, lambda k: Q(4**k, 2 * k - 1))


def _inv_k(c):
    return _sh(c, lambda k: Q(4**k, k))


register("sec5.fstar-lower", r"sec5: \equiv -36-9\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{2k-1}-9\sum_{k=1}^{\frac{p-1}{2}} \frac{4^k}{k} \pmod{p}", 1,
         lambda c: (fs_lower(c), -36 - 9 * _inv_odd(c) - 9 * _inv_k(c)))

register("sec5.ratio-2p", r"sec5: {2p\choose 2k+2}/{4p\choose 2(p-1-k)}\equiv \frac{1}{6} \pmod{p}", 1,
         lambda c, k: (Q(c.C(2 * c.p, 2 * k + 2), c.C(4 * c.p, 2 * (c.p - 1 - k))), Q(1, 6)), krange=lower)
register("sec5.ratio-sq", r"sec5: {2p\choose p-1-k}^2/{p\choose k+1}^2\equiv 4 \pmod{p}", 1,
         lambda c, k: (Q(c.C(2 * c.p, c.p - 1 - k) ** 2, c.C(c.p, k + 1) ** 2), 4), krange=lower)
register("sec5.binom-3pk", r"sec5: {3p+k\choose p}{p-1\choose k}\equiv 3(-1)^k \pmod{p}", 1,
         lambda c, k: (c.C(3 * c.p + k, c.p) * c.C(c.p - 1, k), 3 * sgn(k)), krange=lower)


def _fu_exact(c):
    p, C = c.p, c.C

    def term(k):
        return (Q(sgn(k) * (3 * p + 3 * k + 2) * (p - 1 - k), 4**k * (p + k) * (p + k + 1) * (2 * p + 2 * k + 1) * (1 + k))
                * Q(C(2 * p, 2 * k + 2) * C(2 * p, p - 1 - k) ** 2 * C(3 * p + k, p) * C(p - 1, k),
                    C(4 * p, 2 * (p - 1 - k)) * C(p, k + 1) ** 2))

    return fs_upper(c), 4 ** (p - 1) * Q(C(4 * p, 2 * p), C(2 * p, p)) * _sl(c, term)


register("sec5.fstar-upper.exact", r"sec5: \sum_{k=\frac{p+1}{2}}^{p-2}F^*(p,k)=4^{p-1}\frac{{4p\choose 2p}}{{2p\choose p}}\sum_{k=1}^{\frac{p-3}{2}}\dots",
         None, _fu_exact)
register("sec5.fstar-upper.a", r"sec5: \equiv -6\sum_{k=1}^{\frac{p-3}{2}}\frac{1}{4^k}\left(\frac{2}{k}-\frac{2}{2k+1}-\frac{1}{k+1}\right)", 1,
         lambda c: (fs_upper(c), -6 * _sl(c, lambda k: Q(1, 4**k) * (Q(2, k) - Q(2, 2 * k + 1) - Q(1, k + 1)))))


def _a(c):
    return _sh(c, lambda k: Q(1, 4**k * k))


def _b(c):
    return _sh(c, lambda k: Q(1, 4**k * (2 * k - 1)))


register("sec5.fstar-upper", r"sec5: \equiv 12\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{4^kk}+48\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{4^k(2k-1)}-42 \pmod{p}", 1,
         lambda c: (fs_upper(c), 12 * _a(c) + 48 * _b(c) - 42))
register("sec5.inv4.reflect", r"sec5: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{4^kk}=\frac{1}{2^{p}}\sum_{k=1}^{\frac{p-1}{2}} \frac{4^k}{p+1-2k}", None,
         lambda c: (_a(c), Q(1, 2**c.p) * _sh(c, lambda k: Q(4**k, c.p + 1 - 2 * k))))
register("sec5.inv4", r"sec5: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{4^kk}\equiv -\frac{1}{2}\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{2k-1} \pmod{p}", 1,
         lambda c: (_a(c), -_inv_odd(c) / 2))
register("sec5.inv4-odd.reflect", r"sec5: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{(2k-1)4^k}=\frac{1}{2^{p+1}}\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{p-2k}",
         None, lambda c: (_b(c), Q(1, 2 ** (c.p + 1)) * _sh(c, lambda k: Q(4**k, c.p - 2 * k))))
register("sec5.inv4-odd", r"sec5: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{(2k-1)4^k}\equiv -\frac{1}{8}\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{k} \pmod{p}", 1,
         lambda c: (_b(c), -_inv_k(c) / 8))
register("sec5.granville", r"sec5: \sum_{k=1}^{p-1}\frac{x^k}{k}\equiv \frac{1-x^p-(1-x)^p}{p} \pmod{p}", 1,
         lambda c, x: (sum((Q(x**k, k) for k in range(1, c.p)), Q(0)), Q(1 - x**c.p - (1 - x) ** c.p, c.p)),
         krange=lambda p: (2, 3, 4), kname="x")


def _pow2_sum(c):
    return 2 * sum((Q(2**k, k) for k in range(1, c.p)), Q(0))


register("sec5.pow-sum.exact", r"sec5: \sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{2k-1}+\sum_{k=1}^{\frac{p-1}{2}}\frac{4^k}{k}=2\sum_{k=1}^{p-1}\frac{2^k}{k}",
         None, lambda c: (_inv_odd(c) + _inv_k(c), _pow2_sum(c)))
register("sec5.pow-sum", r"sec5: 2\sum_{k=1}^{p-1}\frac{2^k}{k} \equiv \frac{2(2-2^p)}{p} \pmod{p}", 1,
         lambda c: (_pow2_sum(c), Q(2 * (2 - 2**c.p), c.p)))
register("sec5.fstar-pieces", r"sec5: \sum_{k=1}^{\frac{p-3}{2}}F^*(p,k)+\sum_{k=\frac{p+1}{2}}^{p-2}F^*(p,k)\equiv -78+60q_p(2) \pmod{p}", 1,
         lambda c: (fs_lower(c) + fs_upper(c), -78 + 60 * c.q))
register("sec5.binom-2p1h.harmonic", r"sec5: {2p-1\choose (p-1)/2}\equiv (-1)^{\frac{p-1}{2}}\left(1-2pH_{\frac{p-1}{2}}\right) \pmod{p^2}", 2,
         lambda c: (c.C(2 * c.p - 1, c.h), sgn(c.h) * (1 - 2 * c.p * c.H(c.h))))
register("sec5.binom-2p1h", r"sec5: {2p-1\choose (p-1)/2}\equiv (-1)^{\frac{p-1}{2}}\left(1+4pq_p(2)\right) \pmod{p^2}", 2,
         lambda c: (c.C(2 * c.p - 1, c.h), sgn(c.h) * (1 + 4 * c.p * c.q)))
register("sec5.binom-7p.harmonic", r"sec5: {(7p-1)/2\choose p}\equiv 3+3pH_{\frac{p-1}{2}}+2pH_{p-1} \pmod{p^2}", 2,
         lambda c: (c.C((7 * c.p - 1) // 2, c.p), 3 + 3 * c.p * c.H(c.h) + 2 * c.p * c.H(c.p - 1)))
register("sec5.binom-7p", r"sec5: {(7p-1)/2\choose p}\equiv 3-6pq_p(2) \pmod{p^2}", 2,
         lambda c: (c.C((7 * c.p - 1) // 2, c.p), 3 - 6 * c.p * c.q))
register("sec5.ratio-3-2.a", r"sec5: {4p\choose 2p}/{4p\choose p}\equiv \frac{3}{2} \pmod{p^2}", 2,
         lambda c: (Q(c.C(4 * c.p, 2 * c.p), c.C(4 * c.p, c.p)), Q(3, 2)))
register("sec5.ratio-3-2.b", r"sec5: {3p\choose 2p}/{2p\choose p}\equiv \frac{3}{2} \pmod{p^2}", 2,
         lambda c: (Q(c.C(3 * c.p, 2 * c.p), c.C(2 * c.p, c.p)), Q(3, 2)))


def fstar_last_closed(c):
    p = c.p
    return Q((3 * p + 2) * (p - 1), 4 * (p + 1) ** 2 * p) * c.C(3 * p, p) * c.C(2 * p, p)


def fstar_mid_closed(c):
    p, h, C = c.p, c.h, c.C
    return (sgn(h) * Q((9 * p + 1) * (p - 1), 2 ** (p - 2) * 3 * (3 * p + 1) ** 2 * (3 * p - 1) * p)
            * Q(C(4 * p, 2 * p) * C((7 * p - 1) // 2, p) * C(2 * p - 1, h) ** 2, C(4 * p, p) * C(p - 1, h)))


register("sec5.fstar-last.exact", r"sec5: F^*(p,p-1)=\frac{(3p+2)(p-1)}{4(p+1)^2p}{3p\choose p}{2p\choose p}\quad(\times 4^{p})", None,
         lambda c: (fstar(c, c.p - 1), 4**c.p * fstar_last_closed(c)))
register("sec5.fstar-last", r"sec5: \frac{(3p+2)(p-1)}{4(p+1)^2p}{3p\choose p}{2p\choose p}\equiv \frac{9}{2}-\frac{3}{p} \pmod{p}", 1,
         lambda c: (fstar_last_closed(c), Q(9, 2) - Q(3, c.p)))
register("sec5.fstar-mid.exact", r"sec5: F^*(p,\frac{p-1}{2})=\frac{(-1)^{\frac{p-1}{2}}(9p+1)(p-1)}{2^{p-2}3(3p+1)^2(3p-1)p}\dots\quad(\times 4^{p})",
         None, lambda c: (fstar(c, c.h), 4**c.p * fstar_mid_closed(c)))
register("sec5.fstar-mid", r"sec5: \dots\equiv 15+\frac{3}{p}+9q_p(2) \pmod{p}", 1,
         lambda c: (fstar_mid_closed(c), 15 + Q(3, c.p) + 9 * c.q))
register("sec5.a-sum", r"sec5: \sum_{k=1}^{p-1}\frac{(-1)^k(3p+3k-1)}{2^{2k}(p+k-1)(p+k)(2p+2k-1)}\dots\equiv -24q_p(2) \pmod{p}", 1,
         lambda c: (a_sum(c), -24 * c.q))


def _a0(c):
    p = c.p
    return Q(2 * (3 * p - 1), 3 * p * (p - 1) * (2 * p - 1)) * c.C(2 * p, p) * c.C(3 * p, p)


register("sec5.a-sum.full.a", r"sec5: \sum_{k=0}^{p-1}\dots\equiv \frac{2(3p-1)}{3p(p-1)(2p-1)}{2p\choose p}{3p\choose p}-24q_p(2)", 1,
         lambda c: (a_sum(c) + a_term(c, 0), _a0(c) - 24 * c.q))
register("sec5.a-sum.full", r"sec5: \sum_{k=0}^{p-1}\dots\equiv -\frac{4}{p}-24q_p(2) \pmod{p}", 1,
         lambda c: (a_sum(c) + a_term(c, 0), -Q(4, c.p) - 24 * c.q))
register("sec5.a-term0", r"sec5: k=0\ \text{term}=\frac{2(3p-1)}{3p(p-1)(2p-1)}{2p\choose p}{3p\choose p}", None,
         lambda c: (a_term(c, 0), _a0(c)))
register("sec5.cubic-tail", r"sec5: \sum_{k=2}^{p-1}\frac{11k+3}{2^{6k}}{2k\choose k}^2{3k\choose k}\equiv \frac{3p+18p^2q_p(2)}{2^{6(p-1)}}-\frac{45}{8} \pmod{p^3}",
         3, lambda c: (sum((cub(c, k) for k in range(2, c.p)), Q(0)),
                       Q(3 * c.p + 18 * c.p**2 * c.q, 2 ** (6 * (c.p - 1))) - Q(45, 8)))
register("sec5.cubic-split", r"sec5: \sum_{k=0}^{p-1}\frac{11k+3}{2^{6k}}\dots=\frac{45}{8}+ \sum_{k=2}^{p-1}\frac{11k+3}{2^{6k}}\dots", None,
         lambda c: (sum((cub(c, k) for k in range(c.p)), Q(0)), Q(45, 8) + sum((cub(c, k) for k in range(2, c.p)), Q(0))))
