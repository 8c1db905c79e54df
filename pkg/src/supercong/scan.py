"""Batch runs of checks and theorems over a prime range."""

from __future__ import annotations

import csv
import fnmatch
import io
import json
import logging
import os
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field

import sympy

from . import theorems
from .combinatorics import PrimeContext
from .suite import registry

log = logging.getLogger(__name__)

FIELDS = ("check_id", "prime", "k", "modulus", "lhs", "rhs", "pass", "elapsed_us")
FORMATS = ("json-lines", "csv")
JOBS_ENV = "SUPERCONG_JOBS"


class InvalidRange(ValueError):
    pass


class SelectorError(ValueError):
    pass


class IoError(OSError):
    pass


def primes_in(lo: int, hi: int) -> list[int]:
    if lo < 2 or hi < lo:
        raise InvalidRange(f"need 2 <= lo <= hi, got {lo}..{hi}")
    return list(sympy.primerange(lo, hi + 1))


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise InvalidRange(f"expected LO..HI, got {text!r}") from None
    if lo < 3 or hi < lo:
        raise InvalidRange(f"need 3 <= lo <= hi, got {text}")
    return lo, hi


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise SelectorError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None
    if n < 1:
        raise SelectorError(f"{JOBS_ENV} must be >= 1")
    return n


def resolve(selector) -> list[str]:
    """Expand a selector into a sorted list of theorem and check ids.

    Accepts "all", "theorems", "lemmas", "wz", glob patterns and explicit
    ids, either as one comma-separated string or a list.
    """
    if isinstance(selector, str):
        selector = [s.strip() for s in selector.split(",")]
    selector = [s for s in selector if s]
    if not selector:
        raise SelectorError("empty selector")
    checks = [d.id for d in registry.manifest()]
    known = list(theorems.THEOREM_IDS) + checks
    groups = {
        "all": known,
        "theorems": list(theorems.THEOREM_IDS),
        "lemmas": [i for i in checks if i.startswith(("lemma", "wolstenholme", "sec2."))],
        "wz": [i for i in checks if i.startswith("wz.")],
    }
    out = set()
    for s in selector:
        if s in groups:
            out.update(groups[s])
        elif any(ch in s for ch in "*?["):
            hit = fnmatch.filter(known, s)
            if not hit:
                raise SelectorError(f"pattern {s!r} matches nothing")
            out.update(hit)
        elif s in known:
            out.add(s)
        else:
            raise SelectorError(f"unknown check {s!r}")
    return sorted(out)


def min_prime(id: str) -> int:
    return 3 if id in theorems.SPECS else registry.get(id).min_prime


@dataclass
class ScanConfig:
    lo: int = 3
    hi: int = 499
    checks: object = "theorems"
    jobs: int = 1
    out: str | None = None
    format: str = "json-lines"
    fail_fast: bool = False
    oracle: bool = False
    timings: bool = False
    extra: int = 0

    def validate(self):
        if self.lo < 3 or self.hi < self.lo:
            raise InvalidRange(f"need 3 <= lo <= hi, got {self.lo}..{self.hi}")
        if self.jobs < 1:
            raise SelectorError("jobs must be >= 1")
        if self.format not in FORMATS:
            raise SelectorError(f"format must be one of {FORMATS}")
        if self.extra < 0:
            raise SelectorError("extra must be >= 0")
        return resolve(self.checks)


@dataclass
class CheckSummary:
    check_id: str
    runs: int = 0
    passes: int = 0
    failures: int = 0
    min_prime: int | None = None
    max_prime: int | None = None
    elapsed: float = 0.0


@dataclass
class ScanReport:
    summaries: list = field(default_factory=list)
    failures: list = field(default_factory=list)   # failing record dicts
    records: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def runs(self):
        return sum(s.runs for s in self.summaries)

    @property
    def ok(self):
        return not self.failures

    def table(self) -> str:
        lines = [f"{'check':36} {'runs':>5} {'pass':>5} {'fail':>5}  primes"]
        for s in self.summaries:
            span = "-" if s.min_prime is None else f"{s.min_prime}..{s.max_prime}"
            lines.append(f"{s.check_id:36} {s.runs:5} {s.passes:5} {s.failures:5}  {span}")
        return "\n".join(lines)


def _run_prime(p, ids, oracle, extra):
    """All selected work at one prime, sharing one context. Returns (results, error-or-None)."""
    ctx = PrimeContext(p)
    out = []
    for id in ids:
        if id in theorems.SPECS:
            res = theorems.verify(id, p, extra=extra, ctx=ctx)
            if oracle:
                alt = theorems.verify(id, p, route="oracle", extra=extra, ctx=ctx)
                if alt.lhs != res.lhs:
                    res = type(res)(id, p, None, res.modulus, res.lhs, f"oracle {alt.lhs}", False, res.elapsed)
            out.append((id, [res]))
        else:
            res = registry.run_check(id, p, ctx=ctx)
            out.append((id, registry.family_records(res, id)))
    return p, out


def _sort_key(rec):
    return (rec["check_id"], rec["prime"], -1 if rec["k"] is None else rec["k"])


def render(records, fmt) -> str:
    if fmt == "json-lines":
        return "".join(json.dumps(r) + "\n" for r in records)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in records:
        w.writerow([("" if r[f] is None else str(r[f]).lower() if f == "pass" else r[f]) for f in FIELDS])
    return buf.getvalue()


def scan(config: ScanConfig) -> ScanReport:
    ids = config.validate()
    primes = [p for p in primes_in(config.lo, config.hi) if p % 2]
    work = {}
    for p in primes:
        todo = [i for i in ids if p >= min_prime(i)]
        if todo:
            work[p] = todo
    report = ScanReport()
    if not work:
        msg = "no admissible (check, prime) pairs in range"
        log.warning(msg)
        report.warnings.append(msg)

    # open before doing any work so a bad path fails fast
    fh = None
    if config.out:
        try:
            fh = open(config.out, "w", encoding="utf-8", newline="")
        except OSError as e:
            raise IoError(f"cannot write {config.out}: {e}") from e

    results = []
    stop = False

    def take(p, out):
        nonlocal stop
        for id, recs in out:
            results.append((id, p, recs))
            if config.fail_fast and not recs[0].passed:
                stop = True

    try:
        if config.jobs == 1:
            for p, todo in work.items():
                take(*_run_prime(p, todo, config.oracle, config.extra))
                if stop:
                    break
        else:
            with ProcessPoolExecutor(max_workers=config.jobs) as ex:
                pending = iter(work.items())
                running = set()

                def submit():
                    nxt = next(pending, None)
                    if nxt is not None:
                        running.add(ex.submit(_run_prime, nxt[0], nxt[1], config.oracle, config.extra))

                for _ in range(config.jobs * 2):
                    submit()
                while running:
                    done, _ = wait(running, return_when=FIRST_COMPLETED)
                    for f in done:
                        running.discard(f)
                        take(*f.result())
                        if not stop:
                            submit()
    except BaseException:
        if fh:
            fh.close()
        raise

    by_id = {i: CheckSummary(i) for i in ids}
    records = []
    for id, p, recs in results:
        s = by_id[id]
        head = recs[0]
        s.runs += 1
        s.elapsed += head.elapsed
        if head.passed:
            s.passes += 1
        else:
            s.failures += 1
        s.min_prime = p if s.min_prime is None else min(s.min_prime, p)
        s.max_prime = p if s.max_prime is None else max(s.max_prime, p)
        for r in recs:
            records.append(r.record(timings=config.timings))
    records.sort(key=_sort_key)
    report.records = records
    report.failures = [r for r in records if not r["pass"]]
    report.summaries = [by_id[i] for i in ids]
    if fh:
        try:
            with fh:
                fh.write(render(records, config.format))
        except OSError as e:
            raise IoError(f"cannot write {config.out}: {e}") from e
    return report
