"""Check descriptors, results and the runner."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..combinatorics import PrimeContext
from ..exact import INF, PrimePowerModulus, congruent, is_prime, padic_valuation, reduce_mod


class DomainError(ValueError):
    pass


class UnknownCheck(KeyError):
    pass


@dataclass(frozen=True)
class CheckDescriptor:
    id: str
    anchor: str                     # section tag and formula snippet
    r: int | None                   # None marks an exact identity
    min_prime: int
    sides: Callable                 # (ctx) or (ctx, k) -> (lhs, rhs)
    krange: Callable | None = None  # p -> iterable of k for family checks
    kname: str = "k"

    @property
    def parameterized_in_k(self) -> bool:
        return self.krange is not None

    def modulus_label(self, p: int) -> str:
        return "exact" if self.r is None else f"{p}^{self.r}"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    prime: int
    k: int | None
    modulus: str
    lhs: str
    rhs: str
    passed: bool
    elapsed: float = 0.0
    failing_ks: tuple = field(default=(), compare=False)

    def record(self, timings=False) -> dict:
        return {
            "check_id": self.check_id,
            "prime": self.prime,
            "k": self.k,
            "modulus": self.modulus,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "elapsed_us": int(round(self.elapsed * 1e6)) if timings else 0,
        }


_REGISTRY: dict[str, CheckDescriptor] = {}


def register(id, anchor, r, sides, *, min_prime=5, krange=None, kname="k"):
    if id in _REGISTRY:
        raise ValueError(f"duplicate check id {id}")
    if min_prime < 3:
        raise ValueError("min_prime must be >= 3")
    _REGISTRY[id] = CheckDescriptor(id, anchor, r, min_prime, sides, krange, kname)
    return _REGISTRY[id]


def _loaded():
    # topic modules register on import
    from . import lemmas, quartic_half, quartic_full, cubic_full, cubic_half, wzchecks  # noqa: F401
    return _REGISTRY


def manifest() -> list[CheckDescriptor]:
    return sorted(_loaded().values(), key=lambda d: d.id)


def get(id: str) -> CheckDescriptor:
    reg = _loaded()
    if id not in reg:
        raise UnknownCheck(id)
    return reg[id]


def _fmt(x, m: PrimePowerModulus | None, p: int) -> str:
    if m is not None and padic_valuation(x, p) >= 0:
        return str(reduce_mod(x, m).value)
    v = padic_valuation(x, p)
    return "val=inf" if v == INF else f"val={v}"


def compare(lhs, rhs, r, p):
    """(pass, lhs string, rhs string) for one evaluation."""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if r is None:
        return lhs == rhs, _fmt(lhs, None, p), _fmt(rhs, None, p)
    m = PrimePowerModulus(p, r)
    return congruent(lhs, rhs, m), _fmt(lhs, m, p), _fmt(rhs, m, p)


def _sides(d: CheckDescriptor, ctx, k):
    return d.sides(ctx) if k is None else d.sides(ctx, k)


def run_check(id: str, p: int, k: int | None = None, ctx: PrimeContext | None = None) -> CheckResult:
    """Run one check at p.

    A family check without k runs every k in range; the result is the
    conjunction and carries the first failing k (None when all pass).
    """
    d = get(id)
    if not is_prime(p) or p % 2 == 0:
        raise DomainError(f"{p} is not an odd prime")
    if p < d.min_prime:
        raise DomainError(f"{id} needs p >= {d.min_prime}, got {p}")
    if ctx is None or ctx.p != p:
        ctx = PrimeContext(p)
    mod = d.modulus_label(p)
    t0 = time.perf_counter()
    if d.krange is None:
        if k is not None:
            raise DomainError(f"{id} is not a family check")
        ok, ls, rs = compare(*_sides(d, ctx, None), d.r, p)
        return CheckResult(id, p, None, mod, ls, rs, ok, time.perf_counter() - t0)
    ks = list(d.krange(p))
    if k is not None:
        if k not in ks:
            raise DomainError(f"{d.kname}={k} outside the range of {id} at p={p}")
        ks = [k]
    first, failing = None, []
    for kk in ks:
        ok, ls, rs = compare(*_sides(d, ctx, kk), d.r, p)
        if not ok:
            failing.append((kk, ls, rs))
            if first is None:
                first = (kk, ls, rs)
    dt = time.perf_counter() - t0
    if first is None:
        if k is not None:
            return CheckResult(id, p, k, mod, ls, rs, True, dt)
        span = f"{d.kname}={ks[0]}..{ks[-1]}" if ks else "empty"
        return CheckResult(id, p, None, mod, span, f"{len(ks)}/{len(ks)}", True, dt)
    kk, ls, rs = first
    return CheckResult(id, p, kk, mod, ls, rs, False, dt, tuple(failing))


def family_records(res: CheckResult, id: str) -> list[CheckResult]:
    """Scan records for a family result: a k=None summary plus one row per failing k."""
    d = get(id)
    if d.krange is None or res.passed:
        return [res]
    n = len(list(d.krange(res.prime)))
    summary = CheckResult(id, res.prime, None, res.modulus, f"{d.kname} failures",
                          f"{n - len(res.failing_ks)}/{n}", False, res.elapsed)
    rows = [CheckResult(id, res.prime, kk, res.modulus, ls, rs, False, 0.0)
            for kk, ls, rs in res.failing_ks]
    return [summary] + rows
