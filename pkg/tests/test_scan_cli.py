import csv
import io
import json

import pytest

from supercong import cli, scan
from supercong.scan import InvalidRange, IoError, ScanConfig, SelectorError, primes_in, resolve


def test_primes_in():
    assert primes_in(3, 20) == [3, 5, 7, 11, 13, 17, 19]
    assert primes_in(14, 16) == []
    assert primes_in(2, 2) == [2]
    for lo, hi in [(1, 5), (9, 3)]:
        with pytest.raises(InvalidRange):
            primes_in(lo, hi)


def test_parse_range():
    assert scan.parse_range("3..499") == (3, 499)
    for bad in ["3-9", "2..9", "9..3", "a..b"]:
        with pytest.raises(InvalidRange):
            scan.parse_range(bad)


def test_selectors():
    assert resolve("theorems") == sorted(["T1.1", "T1.2", "T1.3", "T1.4", "GZ.10", "GZ.12"])
    assert resolve("lemma2.1.*") == ["lemma2.1.a", "lemma2.1.b", "lemma2.1.c"]
    assert all(i.startswith("wz.") for i in resolve("wz"))
    lem = resolve("lemmas")
    assert "wolstenholme.h1" in lem and "sec2.double-alt" in lem and "sec3.morley" not in lem
    assert resolve(["sec3.morley", "T1.1", "sec3.morley"]) == ["T1.1", "sec3.morley"]
    assert len(resolve("all")) > 150
    for bad in ["nope", "zz*", ""]:
        with pytest.raises(SelectorError):
            resolve(bad)


def test_scan_lemma_example(tmp_path):
    rep = scan.scan(ScanConfig(5, 5, "lemma2.1.*"))
    assert rep.runs == 3 and rep.ok and len(rep.records) == 3


def test_scan_empty_admissible_set():
    rep = scan.scan(ScanConfig(3, 3, "sec3.morley"))
    assert rep.runs == 0 and rep.ok and rep.warnings


def test_scan_theorem_rows_and_counts():
    rep = scan.scan(ScanConfig(3, 60, "theorems"))
    assert len(rep.summaries) == 6
    assert all(s.runs == 16 == s.passes and s.min_prime == 3 and s.max_prime == 59 for s in rep.summaries)
    assert len(rep.records) == 6 * 16
    keys = [(r["check_id"], r["prime"]) for r in rep.records]
    assert keys == sorted(keys)


def test_record_count_with_family_failures(temp_checks):
    temp_checks("zz.scan.family", "sec2: test", 1, lambda c, k: (k % 2, 0), krange=lambda p: range(0, 4))
    rep = scan.scan(ScanConfig(5, 13, "zz.scan.family,wolstenholme.h1"))
    # 4 primes x (1 summary + 2 failing k) plus 4 passing records
    assert len(rep.records) == 4 * 3 + 4
    fam = [r for r in rep.records if r["check_id"] == "zz.scan.family" and r["prime"] == 5]
    assert [r["k"] for r in fam] == [None, 1, 3]
    assert not rep.ok and len(rep.failures) == 12
    s = {x.check_id: x for x in rep.summaries}
    assert s["zz.scan.family"].runs == s["zz.scan.family"].failures == 4


def test_fail_fast(temp_checks):
    temp_checks("zz.scan.bad", "sec2: test", 1, lambda c: (1, 0))
    rep = scan.scan(ScanConfig(5, 97, "zz.scan.bad", fail_fast=True))
    assert rep.runs == 1 and not rep.ok


def test_output_formats(tmp_path):
    jl, cv = tmp_path / "a.jsonl", tmp_path / "a.csv"
    scan.scan(ScanConfig(3, 13, "T1.3,sec6.sun", out=str(jl)))
    scan.scan(ScanConfig(3, 13, "T1.3,sec6.sun", out=str(cv), format="csv"))
    recs = [json.loads(x) for x in jl.read_text().splitlines()]
    assert list(recs[0]) == list(scan.FIELDS)
    assert recs[0] == {"check_id": "T1.3", "prime": 3, "k": None, "modulus": "3^3", "lhs": "9", "rhs": "9",
                       "pass": True, "elapsed_us": 0}
    rows = list(csv.reader(io.StringIO(cv.read_text())))
    assert tuple(rows[0]) == scan.FIELDS
    assert rows[1] == ["T1.3", "3", "", "3^3", "9", "9", "true", "0"]
    assert len(rows) - 1 == len(recs)


def test_bad_output_path(tmp_path):
    with pytest.raises(IoError):
        scan.scan(ScanConfig(3, 5, "T1.1", out=str(tmp_path / "missing" / "x.jsonl")))


def test_config_validation():
    for cfg in [ScanConfig(2, 5), ScanConfig(7, 5), ScanConfig(jobs=0), ScanConfig(format="xml"), ScanConfig(extra=-1)]:
        with pytest.raises((InvalidRange, SelectorError)):
            scan.scan(cfg)


def test_parallel_matches_serial(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    scan.scan(ScanConfig(3, 40, "theorems,sec3.*", jobs=1, out=str(a)))
    scan.scan(ScanConfig(3, 40, "theorems,sec3.*", jobs=3, out=str(b)))
    assert a.read_bytes() == b.read_bytes()


def test_jobs_env(monkeypatch):
    monkeypatch.delenv(scan.JOBS_ENV, raising=False)
    assert scan.default_jobs() == 1
    monkeypatch.setenv(scan.JOBS_ENV, "4")
    assert scan.default_jobs() == 4
    monkeypatch.setenv(scan.JOBS_ENV, "many")
    with pytest.raises(SelectorError):
        scan.default_jobs()


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_cli_check():
    code, out, _ = run(["check", "--id", "sec3.morley", "--prime", "7"])
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = run(["check", "--id", "T1.2", "--prime", "5", "--oracle"])
    assert code == 0 and json.loads(out)["modulus"] == "5^5"
    assert run(["check", "--id", "sec3.morley", "--prime", "3"])[0] == 2
    assert run(["check", "--id", "nope", "--prime", "7"])[0] == 2
    assert run(["check", "--id", "T1.1", "--prime", "7", "--k", "1"])[0] == 2


def test_cli_check_failure(temp_checks):
    temp_checks("zz.cli.bad", "sec2: test", 1, lambda c: (1, 0))
    assert run(["check", "--id", "zz.cli.bad", "--prime", "7"])[0] == 1


def test_cli_scan(tmp_path):
    out_file = tmp_path / "s.jsonl"
    code, out, _ = run(["scan", "--primes", "3..30", "--out", str(out_file)])
    assert code == 0 and "T1.4" in out
    assert len(out_file.read_text().splitlines()) == 6 * 9
    code, out, err = run(["scan", "--primes", "5..7", "--checks", "wolstenholme.*", "--format", "csv"])
    assert code == 0 and out.startswith("check_id,prime") and "wolstenholme.h1" in err
    code, _, err = run(["scan", "--primes", "7..11", "--explore-extra", "1", "--checks", "T1.2"])
    assert code in (0, 1) and "beyond the stated claims" in err


def test_cli_scan_oracle_and_timings(tmp_path):
    out_file = tmp_path / "o.jsonl"
    code, _, _ = run(["scan", "--primes", "3..20", "--oracle", "--timings", "--out", str(out_file)])
    recs = [json.loads(x) for x in out_file.read_text().splitlines()]
    assert code == 0 and all(r["pass"] for r in recs) and any(r["elapsed_us"] > 0 for r in recs)


def test_cli_usage_errors():
    assert run(["scan", "--primes", "9..3"])[0] == 2
    assert run(["scan", "--checks", "nope"])[0] == 2
    assert run(["scan", "--format", "xml"])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run([])[0] == 2


def test_cli_wz():
    code, out, _ = run(["wz", "verify", "--pair", "A", "--nmax", "8", "--tmax", "6"])
    assert code == 0 and "nonzero residuals 0" in out
    assert run(["wz", "verify", "--pair", "Q"])[0] == 2


def test_cli_manifest():
    code, out, _ = run(["manifest"])
    assert code == 0 and "sec3.morley" in out
    code, out, _ = run(["manifest", "--coverage"])
    assert code == 0 and "UNMAPPED" not in out and "#127" in out


def test_cli_report(tmp_path):
    rec = tmp_path / "r.jsonl"
    assert run(["scan", "--primes", "3..40", "--checks", "theorems,sec6.*", "--out", str(rec)])[0] == 0
    code, out, _ = run(["report", str(rec), "--out-dir", str(tmp_path / "rep")])
    files = out.split()
    assert code == 0 and len(files) == 3
    for f in files:
        assert (tmp_path / "rep" / f.split("/")[-1]).stat().st_size > 0
    summary = (tmp_path / "rep" / "summary.csv").read_text().splitlines()
    assert summary[0] == "check_id,runs,passes,failures,min_prime,max_prime"
    assert any(line.startswith("T1.1,11,11,0,3,37") for line in summary)
    csvrec = tmp_path / "r.csv"
    run(["scan", "--primes", "5..13", "--checks", "sec6.sun", "--format", "csv", "--out", str(csvrec)])
    assert run(["report", str(csvrec), "--out-dir", str(tmp_path / "rep2")])[0] == 0
    assert run(["report", str(tmp_path / "missing.jsonl")])[0] == 2
