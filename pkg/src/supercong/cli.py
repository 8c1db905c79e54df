"""Command line entry point. Exit codes: 0 all pass, 1 some failure, 2 usage or configuration error."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import scan as scanmod
from . import theorems, wz
from .suite import registry

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _parser():
    ap = argparse.ArgumentParser(prog="supercong", description="Per-prime verification of truncated-series supercongruences.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("scan", help="run checks over a prime range")
    s.add_argument("--primes", default="3..499", metavar="LO..HI")
    s.add_argument("--checks", default="theorems", help="ids, globs, all, theorems, lemmas or wz (comma separated)")
    s.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${scanmod.JOBS_ENV} or 1)")
    s.add_argument("--out", default=None, help="record file (default stdout)")
    s.add_argument("--format", default="json-lines", choices=scanmod.FORMATS)
    s.add_argument("--fail-fast", action="store_true")
    s.add_argument("--oracle", action="store_true", help="cross-check theorem residues against exact summation")
    s.add_argument("--timings", action="store_true", help="fill elapsed_us (makes output nondeterministic)")
    s.add_argument("--explore-extra", type=int, default=0, metavar="E",
                   help="raise theorem exponents by E; results are exploratory")

    w = sub.add_parser("wz", help="WZ pair tools")
    wsub = w.add_subparsers(dest="wzcmd", required=True)
    v = wsub.add_parser("verify", help="check the WZ equation on a grid and the telescoped sums")
    v.add_argument("--pair", required=True)
    v.add_argument("--nmax", type=int, default=40)
    v.add_argument("--tmax", type=int, default=30, help="telescope bound for m and N")

    c = sub.add_parser("check", help="run one check or theorem at one prime")
    c.add_argument("--id", required=True)
    c.add_argument("--prime", type=int, required=True)
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--oracle", action="store_true")

    m = sub.add_parser("manifest", help="print the check table")
    m.add_argument("--coverage", action="store_true", help="print the display coverage table instead")

    r = sub.add_parser("report", help="render figures and a summary from a record file")
    r.add_argument("records")
    r.add_argument("--out-dir", default="report")
    r.add_argument("--margin-hi", type=int, default=199, help="largest prime used in the margin plot")
    return ap


def _scan(a, out, err):
    lo, hi = scanmod.parse_range(a.primes)
    jobs = a.jobs if a.jobs is not None else scanmod.default_jobs()
    cfg = scanmod.ScanConfig(lo, hi, a.checks, jobs, a.out, a.format, a.fail_fast, a.oracle, a.timings, a.explore_extra)
    rep = scanmod.scan(cfg)
    if a.out is None:
        out.write(scanmod.render(rep.records, a.format))
        print(rep.table(), file=err)
    else:
        print(rep.table(), file=out)
    if a.explore_extra:
        print(f"note: theorem moduli raised by {a.explore_extra}; these results go beyond the stated claims", file=err)
    return EXIT_OK if rep.ok else EXIT_FAIL


def _wz(a, out):
    pair = wz.WzPair.parse(a.pair)
    if a.nmax < 0 or a.tmax < 1:
        raise ValueError("nmax must be >= 0 and tmax >= 1")
    bad = [(n, k) for n in range(a.nmax + 1) for k in range(a.nmax + 1)
           if wz.in_grid_domain(pair, n, k) and wz.wz_residual(pair, n, k) != 0]
    n0 = max(1, wz.telescope_start(pair))
    tbad = [(m, N) for m in range(n0, a.tmax + 1) for N in range(1, a.tmax + 1)
            if wz.check_telescope(pair, m, N) != 0]
    print(f"pair {pair.name}: grid 0..{a.nmax} nonzero residuals {len(bad)}; "
          f"telescopes m={n0}..{a.tmax}, N=1..{a.tmax} nonzero {len(tbad)}", file=out)
    for n, k in bad[:10]:
        print(f"  residual at n={n} k={k}", file=out)
    return EXIT_OK if not bad and not tbad else EXIT_FAIL


def _check(a, out):
    if a.id in theorems.SPECS:
        if a.k is not None:
            raise registry.DomainError("theorems take no k")
        res = theorems.verify(a.id, a.prime, route="oracle" if a.oracle else "fast")
        recs = [res]
    else:
        res = registry.run_check(a.id, a.prime, a.k)
        recs = registry.family_records(res, a.id)
    for r in recs:
        print(json.dumps(r.record()), file=out)
    return EXIT_OK if res.passed else EXIT_FAIL


def _manifest(a, out):
    from .suite import coverage
    print(coverage.coverage_text() if a.coverage else coverage.manifest_text(), file=out, end="")
    return EXIT_OK


def _report(a, out):
    from . import report
    try:
        files = report.build(a.records, a.out_dir, margin_hi=a.margin_hi)
    except OSError as e:
        raise scanmod.IoError(str(e)) from e
    for f in files:
        print(f, file=out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        a = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if a.cmd == "scan":
            return _scan(a, out, err)
        if a.cmd == "wz":
            return _wz(a, out)
        if a.cmd == "check":
            return _check(a, out)
        if a.cmd == "manifest":
            return _manifest(a, out)
        return _report(a, out)
    except (scanmod.InvalidRange, scanmod.SelectorError, registry.DomainError, registry.UnknownCheck,
            scanmod.IoError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
