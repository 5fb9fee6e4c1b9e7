"""Acceptance criteria 1-9, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v` or directly as a script.
"""

import time

import pytest

from quadchar2.suites import MIXED_SHAPES, report_json, run_suite, summarize
from quadchar2.theorems import mixed_bound

SEED = 0


def _clean(reports):
    s = summarize(reports)
    return s["refuted"] == 0 and s["inconclusive"] == 0, s


def _line(s):
    return f"{s['verified']} verified, {s['refuted']} refuted, {s['inconclusive']} inconclusive"


def criterion_1():
    t0 = time.perf_counter()
    reports = run_suite("lemma-2.1", 100, SEED)
    secs = time.perf_counter() - t0
    ok, s = _clean(reports)
    return ok and secs < 30, f"{_line(s)} in {secs:.1f} s (limit 30 s)"


def criterion_2():
    reports = run_suite("schmid-gate", 200, SEED)
    ok, s = _clean(reports)
    hits = sum(1 for r in reports if r.certificates.get("norm_witness") is not None)
    return ok, f"{_line(s)}; norm search found witnesses for {hits} symbols"


def criterion_3():
    ok, s = _clean(run_suite("lemma-2.3", 100, SEED))
    return ok, _line(s)


def _bounded(reports, key="length", bound="bound"):
    return all(r.certificates[key] <= r.certificates[bound] for r in reports if r.verdict == "verified")


def criterion_4():
    reports = run_suite("prop-2.4-planted", 30, SEED)
    s = summarize(reports)
    ms = sorted({r.instance["m"] for r in reports if "m" in r.instance})
    ok = s["refuted"] == 0 and s["inconclusive_rate"] <= 0.2 and _bounded(reports)
    return ok, f"{_line(s)}; inconclusive rate {s['inconclusive_rate']:.0%} (limit 20%); m drawn from {ms}"


def criterion_5():
    reports = run_suite("cor-2.5-planted", 30, SEED)
    s = summarize(reports)
    shapes = all(
        not r.certificates["symbols"].symbols or r.certificates["symbols"].symbols[-1].b == r.instance["b"]
        for r in reports
        if r.verdict == "verified"
    )
    return s["refuted"] == 0 and _bounded(reports) and shapes, _line(s)


def criterion_6():
    parts, ok = [], True
    for m, n in MIXED_SHAPES:
        reports = run_suite(f"prop-2.6-m{m}n{n}", 10, SEED)
        s = summarize(reports)
        longest = max((r.certificates["length"] for r in reports if r.verdict == "verified"), default=0)
        ok &= s["refuted"] == 0 and longest <= mixed_bound(m, n)
        parts.append(f"(m,n)=({m},{n}): {s['verified']}/10, longest {longest} <= {mixed_bound(m, n)}")
    return ok, "; ".join(parts)


def criterion_7():
    reports = run_suite("prop-3.1-planted", 10, SEED)
    ok, s = _clean(reports)
    stages = all(
        r.certificates["anisotropic_dim_bound"] < 8 and r.certificates["e2_transfer"] and len(r.certificates["three_symbols"]) <= 3
        for r in reports
        if r.verdict == "verified"
    )
    return ok and stages, _line(s)


INVARIANT_SUITES = ("arf-invariants", "transfer-additivity", "frobenius-reciprocity", "e2-well-defined", "frob-restrict")


def criterion_8():
    parts, ok = [], True
    for name in INVARIANT_SUITES:
        good, s = _clean(run_suite(name, 100, SEED))
        ok &= good
        parts.append(f"{name} {s['verified']}/100")
    return ok, "; ".join(parts)


def criterion_9():
    docs = [report_json("prop-2.4-planted", 11, run_suite("prop-2.4-planted", 5, 11)) for _ in range(2)]
    more = [report_json("lemma-2.1", 11, run_suite("lemma-2.1", 20, 11)) for _ in range(2)]
    same = docs[0] == docs[1] and more[0] == more[1]
    return same, f"byte-identical: {same} ({len(docs[0])} and {len(more[0])} bytes)"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


def _report(i, fn):
    ok, detail = fn()
    print(f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


@pytest.mark.parametrize("i", range(1, len(CRITERIA) + 1))
def test_criterion(i, capsys):
    with capsys.disabled():
        print()
        ok = _report(i, CRITERIA[i - 1])
    assert ok


if __name__ == "__main__":
    results = [_report(i, fn) for i, fn in enumerate(CRITERIA, 1)]
    raise SystemExit(0 if all(results) else 1)
