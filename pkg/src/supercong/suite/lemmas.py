"""Wolstenholme-type and harmonic-sum congruences."""

from fractions import Fraction as Q

from .registry import register
from .terms import half, sgn


def _suffix(p, f):
    """t[j] = sum_{k=j}^{p-1} f(k) for 1 <= j <= p (t[p] = 0)."""
    t = [0] * (p + 1)
    for j in range(p - 1, 0, -1):
        t[j] = t[j + 1] + f(j)
    return t


def double_alt(c):
    """sum_{j<p} sum_{i<j} (-1)^j / (ij)"""
    return sum((Q(sgn(j), j) * c.H(j - 1) for j in range(1, c.p)), Q(0))


def alt_weighted_h2(c):
    """sum_{k<p} (-1)^k (k+1) H_k(2)"""
    return sum((sgn(k) * (k + 1) * c.H(k, 2) for k in range(1, c.p)), Q(0))


def alt_weighted_hsq(c):
    return sum((sgn(k) * (k + 1) * c.H(k) ** 2 for k in range(1, c.p)), Q(0))


def weighted_h2(c):
    return sum(((k + 1) * c.H(k, 2) for k in range(1, c.p)), Q(0))


def kh2k(c):
    return sum((k * c.H(2 * k) for k in half(c.p)), Q(0))


register("wolstenholme.h1", r"sec2: H_{p-1}\equiv 0 \pmod{p^2}", 2,
         lambda c: (c.H(c.p - 1), 0))
register("wolstenholme.h2", r"sec2: H_{p-1}(2)\equiv 0 \pmod{p}", 1,
         lambda c: (c.H(c.p - 1, 2), 0))

register("lemma2.1.a", r"sec2: \sum_{k=1}^{\frac{p-1}{2}}\frac{H_{2k}}{k}\equiv q_p(2)^2", 1,
         lambda c: (sum((c.H(2 * k) / k for k in half(c.p)), Q(0)), c.q**2))
register("lemma2.1.b", r"sec2: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{k}\equiv -2q_p(2)+q_p(2)^2p", 2,
         lambda c: (c.H(c.h), -2 * c.q + c.q**2 * c.p))
register("lemma2.1.c", r"sec2: \sum_{k=1}^{\frac{p-1}{2}}\frac{1}{k^2}\equiv 0", 1,
         lambda c: (c.H(c.h, 2), 0))

register("lemma2.2.a", r"sec2: \sum kH_{2k} \equiv \frac{3p-2}{16}+\frac{2q_p(2)-pq_p(2)^2}{16}", 2,
         lambda c: (kh2k(c), Q(3 * c.p - 2, 16) + Q(2 * c.q - c.p * c.q**2, 16)))
register("lemma2.2.b", r"sec2: \sum H_{2k} \equiv \frac{1-p}{2}-\frac{2q_p(2)-pq_p(2)^2}{4}", 2,
         lambda c: (sum((c.H(2 * k) for k in half(c.p)), Q(0)),
                    Q(1 - c.p, 2) - Q(2 * c.q - c.p * c.q**2, 4)))
register("lemma2.2.c", r"sec2: \sum (2k+1)H_{2k}^2 \equiv \frac{q_p(2)^2-2}{4}", 1,
         lambda c: (sum(((2 * k + 1) * c.H(2 * k) ** 2 for k in half(c.p)), Q(0)), Q(c.q**2 - 2, 4)))


def _alt_khk_swap(c):
    p = c.p
    t = _suffix(p, lambda k: sgn(k) * k)
    lhs = sum((sgn(k) * k * c.H(k) for k in range(1, p)), Q(0))
    return lhs, sum((Q(t[j], j) for j in range(1, p)), Q(0))


register("sec2.alt-khk.swap", r"sec2: \sum_{k=1}^{p-1}(-1)^kkH_k=\sum_{j=1}^{p-1}\sum_{k=j}^{p-1}(-1)^kk", None,
         _alt_khk_swap)
register("sec2.alt-khk", r"sec2: \sum(-1)^kkH_k=\frac{(2p-1)H_{p-1}-H_{p-1}(-1)}{4}", None,
         lambda c: (sum((sgn(k) * k * c.H(k) for k in range(1, c.p)), Q(0)),
                    ((2 * c.p - 1) * c.H(c.p - 1) - c.Hs(c.p - 1)) / 4))
register("sec2.khk-half", r"sec2: \frac{(2p^2-1)H_{p-1}-H_{p-1}(-1)-2+3p-p^2}{16}", None,
         lambda c: (kh2k(c), ((2 * c.p**2 - 1) * c.H(c.p - 1) - c.Hs(c.p - 1) - 2 + 3 * c.p - c.p**2) / 16))

register("sec2.alt-h1.split", r"sec2: \sum_{k=1}^{p-1}\frac{(-1)^k}{k}=\sum_{k=1}^{\frac{p-1}{2}}\frac{1}{k}-\sum_{k=1}^{p-1}\frac{1}{k}",
         None, lambda c: (c.Hs(c.p - 1), c.H(c.h) - c.H(c.p - 1)))
register("sec2.alt-h1", r"sec2: \sum_{k=1}^{p-1}\frac{(-1)^k}{k}\equiv -2q_p(2)+pq_p(2)^2", 2,
         lambda c: (c.Hs(c.p - 1), -2 * c.q + c.p * c.q**2))
register("sec2.kh2k.fold", r"sec2: \sum kH_{2k}=\frac{\sum_{k=1}^{p-1}(1+(-1)^k)kH_k}{4}", None,
         lambda c: (kh2k(c), sum(((1 + sgn(k)) * k * c.H(k) for k in range(1, c.p)), Q(0)) / 4))
register("sec2.double-alt", r"sec2: \sum_{j=1}^{p-1}\sum_{i=1}^{j-1}\frac{(-1)^j}{ij}\equiv q_p(2)^2", 1,
         lambda c: (double_alt(c), c.q**2))
register("sec2.alt-h2.split", r"sec2: H_{p-1}(-2)=\frac{1}{2}H_{\frac{p-1}{2}}(2)-H_{p-1}(2)", None,
         lambda c: (c.Hs(c.p - 1, 2), c.H(c.h, 2) / 2 - c.H(c.p - 1, 2)))
register("sec2.alt-h2", r"sec2: H_{p-1}(-2)\equiv 0", 1, lambda c: (c.Hs(c.p - 1, 2), 0))


def _hsq_expand(c):
    rhs = sum((sgn(k) * (k + 1) * (c.H(k, 2) + 2 * c.H11(k)) for k in range(1, c.p)), Q(0))
    return alt_weighted_hsq(c), rhs


def _hsq_swap(c):
    p = c.p
    t = _suffix(p, lambda k: sgn(k) * (k + 1))
    # sum_{i<=j} 1/(ij) = H_j / j
    s = sum((c.H(j) / j * t[j] for j in range(1, p)), Q(0))
    return alt_weighted_hsq(c), 2 * s - alt_weighted_h2(c)


def _hsq_closed(c):
    p = c.p
    rhs = (Q(1 + 2 * p, 4) * (c.H(p - 1) ** 2 + c.H(p - 1, 2))
           + (double_alt(c) + c.Hs(p - 1, 2)) / 2 + c.H(c.h) / 2 - alt_weighted_h2(c))
    return alt_weighted_hsq(c), rhs


register("sec2.alt-hk2.expand", r"sec2: \sum(-1)^k(k+1)H_{k}^2=\sum(-1)^k(k+1)\left(H_k(2)+2H(1,1;k)\right)",
         None, _hsq_expand)
register("sec2.alt-hk2.swap", r"sec2: =2\sum_{j=1}^{p-1}\sum_{i=1}^{j}\frac{1}{ij}\sum_{k=j}^{p-1}(-1)^k(k+1)-\sum(-1)^k(k+1)H_k(2)",
         None, _hsq_swap)
register("sec2.alt-hk2.closed", r"sec2: =\frac{(1+2p)}{4}\left(H_{p-1}^2+H_{p-1}(2)\right)+\frac{1}{2}\left(\dots+H_{p-1}(-2)\right)+\frac{1}{2}H_{\frac{p-1}{2}}-\dots",
         None, _hsq_closed)
register("sec2.alt-hk2", r"sec2: \equiv \frac{1}{2}q_p(2)^2-q_p(2)-\sum_{k=1}^{p-1}(-1)^k(k+1)H_k(2)", 1,
         lambda c: (alt_weighted_hsq(c), Q(c.q**2, 2) - c.q - alt_weighted_h2(c)))
register("sec2.alt-h2k.closed", r"sec2: \sum(-1)^k(k+1)H_k(2)=\frac{(1+2p)H_{p-1}(2)+H_{p-1}(-2)+2H_{p-1}(-1)}{4}",
         None, lambda c: (alt_weighted_h2(c),
                          ((1 + 2 * c.p) * c.H(c.p - 1, 2) + c.Hs(c.p - 1, 2) + 2 * c.Hs(c.p - 1)) / 4))
register("sec2.alt-h2k", r"sec2: \sum(-1)^k(k+1)H_k(2)\equiv -q_p(2)", 1,
         lambda c: (alt_weighted_h2(c), -c.q))
register("sec2.hk2", r"sec2: \sum_{k=1}^{p-1}(k+1)H_k^2\equiv -\frac{1}{2}-\sum_{k=1}^{p-1}(k+1)H_k(2)", 1,
         lambda c: (sum(((k + 1) * c.H(k) ** 2 for k in range(1, c.p)), Q(0)), Q(-1, 2) - weighted_h2(c)))
register("sec2.h2k-weighted", r"sec2: \sum_{k=1}^{p-1}(k+1)H_k(2)\equiv \frac{1}{2}", 1,
         lambda c: (weighted_h2(c), Q(1, 2)))
register("sec2.odd-h2k-sq.fold", r"sec2: \sum(2k+1)H_{2k}^2=\frac{1}{2}\sum_{k=1}^{p-1}(k+1)\left((-1)^k+1\right)H_k^2",
         None, lambda c: (sum(((2 * k + 1) * c.H(2 * k) ** 2 for k in half(c.p)), Q(0)),
                          sum(((k + 1) * (sgn(k) + 1) * c.H(k) ** 2 for k in range(1, c.p)), Q(0)) / 2))
