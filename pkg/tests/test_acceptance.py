"""Acceptance criteria, one test each.

Every test prints a single line "ACn PASS|FAIL <summary> [seconds]".  The lines
are repeated in the pytest terminal summary; running this file as a script
prints them without pytest.
"""

import math
import sys
import time

import pytest

from symmetria import verify as V
from symmetria.distributions import LAWS, exact_distributions, kolmogorov_distance, moments

RESULTS: list[str] = []

ORACLE_IDS = ("A108747", "A051286", "A004148", "A005817", "A005558", "A001246", "A213600",
              "A018224", "A000891")
TABLE_IDS = ("A341415", "A341445", "A298645", "A339754")


def report(tag: str, good: bool, summary: str, seconds: float, budget: float) -> None:
    line = (f"{tag} {'PASS' if good else 'FAIL'} {summary} "
            f"[{seconds:.1f}s, budget {budget:.0f}s]")
    RESULTS.append(line)
    print(line, file=sys.__stdout__, flush=True)


def _names(reports):
    return ", ".join(r["name"] for r in V.failures(reports))


def test_ac1_table_reproduction():
    t = time.monotonic()
    limits = {"grand_ds": 6, "grand_sv": 6, "partitions_psp": 8, "dyck_ds": 7, "dyck_sv": 7}
    bad = []
    for name, top in limits.items():
        for n, r in V.table_rows(name, top).items():
            if not (r["series"] == r["enumeration"] == r["published"]):
                bad.append(f"{name} n={n}")
    dt = time.monotonic() - t
    report("AC1", not bad, "published tables from enumeration and from series/walk DP"
           + (f"; mismatched: {', '.join(bad)}" if bad else ""), dt, 30)
    assert not bad


def test_ac2_functional_equation_residuals():
    t = time.monotonic()
    reports = [r for r in V.suite_feq(12) if r["name"].startswith("functional equation")]
    good = len(reports) == 2 and not V.failures(reports)
    report("AC2", good, "ds and sv kernel-equation residuals identically zero to z^12",
           time.monotonic() - t, 60)
    assert good, reports


def test_ac3_series_identities():
    t = time.monotonic()
    reports = V.suite_series_identities(14)
    bad = V.failures(reports)
    report("AC3", not bad, f"{len(reports)} series identities to order 14"
           + (f"; failing: {_names(reports)}" if bad else ""), time.monotonic() - t, 30)
    assert not bad, bad


def test_ac4_bijections():
    t = time.monotonic()
    reports = V.suite_bijections(7, 10)
    bad = V.failures(reports)
    report("AC4", not bad, f"{len(reports)} bijection and transport checks (n<=7, Motzkin n<=10)"
           + (f"; failing: {_names(reports)}" if bad else ""), time.monotonic() - t, 120)
    assert not bad, bad


def test_ac5_oeis_fixtures():
    t = time.monotonic()
    reports = {r["name"].split()[-1]: r for r in V.suite_oeis()}
    wanted = ORACLE_IDS + TABLE_IDS
    bad = [i for i in wanted
           if i not in reports or reports[i]["status"] != "ok" or reports[i]["terms"] < 10]
    report("AC5", not bad, f"{len(wanted)} fixtures match their computed prefixes"
           + (f"; failing: {', '.join(bad)}" if bad else ""), time.monotonic() - t, 60)
    assert not bad, [reports.get(i) for i in bad]


def test_ac6_exact_moments():
    t = time.monotonic()
    reports = V.suite_moments(12)
    bad = V.failures(reports)
    report("AC6", not bad, "closed-form mean/variance = brute-force moments, grand Dyck ds and sv,"
           " n<=12", time.monotonic() - t, 10)
    assert not bad, bad


NS = (50, 100, 200, 400)
LIMIT_PAIRS = V.LIMIT_PAIRS
_hist_cache: dict = {}


def _hists(cls, stat):
    if (cls, stat) not in _hist_cache:
        _hist_cache[cls, stat] = exact_distributions(cls, stat, NS)
    return _hist_cache[cls, stat]


def test_ac7_limit_laws():
    t = time.monotonic()
    parts, bad = [], []
    for cls, stat in LIMIT_PAIRS:
        law = LAWS[cls, stat]
        hists = _hists(cls, stat)
        d = [kolmogorov_distance(hists[n], law.cdf) for n in NS]
        decreasing = all(a > b for a, b in zip(d, d[1:]))
        ok = decreasing and d[-1] < 0.08
        parts.append(f"{cls}/{stat} {d[-1]:.4f}{'' if ok else '!'}")
        if not ok:
            bad.append(f"{cls}/{stat} (decreasing={decreasing}, d400={d[-1]:.4f})")
    report("AC7", not bad, "Kolmogorov distance decreasing and < 0.08 at n=400: "
           + ", ".join(parts), time.monotonic() - t, 300)
    assert not bad, bad


def test_ac8_mean_scaling():
    t = time.monotonic()
    targets = {"ds": math.sqrt(math.pi) / 2, "sv": math.sqrt(math.pi)}
    ratios = {}
    for stat, target in targets.items():
        h = _hists("grand_dyck", stat)[400]
        ratios[stat] = float(moments(h)[0]) / math.sqrt(400) / target
    good = all(abs(r - 1) <= 0.05 for r in ratios.values())
    report("AC8", good, "grand Dyck mean/sqrt(n) at n=400 relative to target: "
           + ", ".join(f"{s} {r:.4f}" for s, r in ratios.items()), time.monotonic() - t, 300)
    assert good, ratios


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                pass
