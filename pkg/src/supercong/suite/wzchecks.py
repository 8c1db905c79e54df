"""Per-prime WZ equation and telescoping checks."""

from fractions import Fraction as Q

from .. import wz
from .registry import register

A, B = wz.WzPair.A, wz.WzPair.B


def _F(pair, c, n, k):
    return wz.evaluate_term(pair, "F", n, k, fact=c.fact)


def _G(pair, c, n, k):
    return wz.evaluate_term(pair, "G", n, k, fact=c.fact)


def _row_sum(pair, c, n):
    return sum((_F(pair, c, n, k) for k in range(c.p)), Q(0))


def _g0_sum(pair, c, lo, hi):
    return sum((_G(pair, c, n, 0) for n in range(lo, hi)), Q(0))


def _equation(pair, n_of):
    def sides(c, k):
        n = n_of(c.p)
        return _F(pair, c, n + 1, k) - _F(pair, c, n, k), _G(pair, c, n, k + 1) - _G(pair, c, n, k)
    return sides


def _row_telescope(pair, c, n):
    lhs = sum((_F(pair, c, n + 1, k) - _F(pair, c, n, k) for k in range(c.p)), Q(0))
    return lhs, _G(pair, c, n, c.p) - _G(pair, c, n, 0)


register("wz.A.equation", r"sec3: F(n+1,k)-F(n,k)=G(n,k+1)-G(n,k)", None,
         _equation(A, lambda p: (p - 1) // 2), krange=lambda p: range(p))
register("wz.A.row-telescope", r"sec3: \sum_{k=0}^{p-1}\left(F(n+1,k)-F(n,k)\right)=G(n,p)-G(n,0)", None,
         lambda c, n: _row_telescope(A, c, n),
         krange=lambda p: sorted({0, 1, (p - 3) // 2, p - 1}), kname="n")
register("wz.A.half-telescope", r"sec3: \sum_{k=0}^{p-1}F(\frac{p-1}{2},k)=-\sum_{n=0}^{\frac{p-3}{2}}G(n,0)", None,
         lambda c: (_row_sum(A, c, c.h), -_g0_sum(A, c, 0, c.h)))
register("wz.A.full-telescope", r"sec4: \sum_{k=0}^{p-1}F(p,k)=-\sum_{n=0}^{p-1}G(n,0)", None,
         lambda c: (_row_sum(A, c, c.p), -_g0_sum(A, c, 0, c.p)))

register("wz.B.equation", r"sec5: F^{'}(n+1,k)-F^{'}(n,k)=G^{'}(n,k+1)-G^{'}(n,k)", None,
         _equation(B, lambda p: p - 1), krange=lambda p: range(p))
register("wz.B.row-telescope", r"sec5: \sum_{k=0}^{p-1}\left(F^{'}(n+1,k)-F^{'}(n,k)\right)=G^{'}(n,p)-G^{'}(n,0)", None,
         lambda c, n: _row_telescope(B, c, n),
         krange=lambda p: sorted({2, 3, (p - 1) // 2, p - 1}), kname="n")
register("wz.B.full-telescope", r"sec5: \sum_{k=0}^{p-1}F^{'}(p,k)-\sum_{k=0}^{p-1}F^{'}(2,k)=-\sum_{n=2}^{p-1}G^{'}(n,0)", None,
         lambda c: (_row_sum(B, c, c.p) - _row_sum(B, c, 2), -_g0_sum(B, c, 2, c.p)))
register("wz.B.half-telescope", r"sec6: \sum_{k=0}^{p-1}F^{'}(\frac{p+1}{2},k)-\sum_{k=0}^{p-1}F^{'}(2,k)=-\sum_{n=2}^{\frac{p-1}{2}}G^{'}(n,0)", None,
         lambda c: (_row_sum(B, c, c.h + 1) - _row_sum(B, c, 2), -_g0_sum(B, c, 2, c.h + 1)))
