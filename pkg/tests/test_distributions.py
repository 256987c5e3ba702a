import csv
import io
import math
from fractions import Fraction
from math import comb

import pytest

from symmetria.distributions import (
    PAIRS, Histogram, LimitLaw, UnsupportedPairError, closed_form_moments, default_law,
    exact_distribution, exact_distributions, histograms_to_csv, kolmogorov_distance,
    limit_law_table, moments, step_cdf,
)


def test_published_examples():
    assert exact_distribution("GrandDyck", "ds", 4).counts == {0: 14, 1: 16, 2: 24, 4: 16}
    assert exact_distribution("Dyck", "sv", 6).counts == {2: 8, 3: 24, 4: 40, 5: 40, 6: 20}
    assert exact_distribution("partitions_sp", "ds", 7).counts == {0: 16, 1: 8, 2: 8}


def test_unsupported_pair():
    with pytest.raises(UnsupportedPairError):
        exact_distribution("dyck", "pho", 3)


@pytest.mark.parametrize("key", sorted(PAIRS))
def test_series_route_equals_enumeration(key):
    cls, stat = key
    top = 7 if cls in ("grand_dyck", "dyck") else 8
    for n in range(1 if cls != "bargraphs_ub" else 2, top + 1):
        assert exact_distribution(cls, stat, n) == exact_distribution(cls, stat, n, "oracle"), n


def test_totals():
    for n in range(1, 15):
        assert exact_distribution("grand_dyck", "ds", n).total == comb(2 * n, n)
        assert exact_distribution("dyck", "ds", n).total == comb(2 * n, n) // (n + 1)


def test_moments_trivial_cases():
    assert moments(Histogram(1, {3: 5})) == (3, 0)
    assert moments(Histogram(1, {0: 1, 1: 1})) == (Fraction(1, 2), Fraction(1, 4))
    with pytest.raises(ValueError):
        moments(Histogram(1, {}))


def test_closed_form_moments():
    assert closed_form_moments("grand_dyck", "ds", 1)[0] == 1
    assert closed_form_moments("grand_dyck", "ds", 2)[0] == Fraction(4, 3)
    assert closed_form_moments("grand_dyck", "sv", 2)[0] == Fraction(5, 3)
    for n in range(1, 13):
        for stat in ("ds", "sv"):
            assert closed_form_moments("grand_dyck", stat, n) == \
                moments(exact_distribution("grand_dyck", stat, n))
    with pytest.raises(UnsupportedPairError):
        closed_form_moments("dyck", "ds", 3)


def test_limit_law_basics():
    law = LimitLaw.parse("rayleigh:0.5")
    assert law.cdf(0) == 0
    assert law.cdf(0.5) == pytest.approx(1 - math.exp(-0.5))
    hn = LimitLaw("half_normal", 0.5)
    assert hn.cdf(0.5) == pytest.approx(math.erf(1 / math.sqrt(2)))
    with pytest.raises(ValueError):
        LimitLaw("rayleigh", 0)
    with pytest.raises(ValueError):
        LimitLaw("cauchy", 1)


def test_self_distance_is_zero():
    h = exact_distribution("grand_dyck", "sv", 30)
    cdf, left = step_cdf(h)
    assert kolmogorov_distance(h, cdf, left) == 0


def test_distance_decreases_along_n():
    rows = limit_law_table("grand_dyck", "ds", [50, 100, 200, 400])
    d = [r["kolmogorov"] for r in rows]
    assert all(a > b for a, b in zip(d, d[1:]))
    rows = limit_law_table("partitions_sp", "ds", [40, 80, 160], default_law("partitions_sp", "ds"))
    d = [r["kolmogorov"] for r in rows]
    assert all(a > b for a, b in zip(d, d[1:]))


def test_csv_schema():
    hists = exact_distributions("grand_dyck", "ds", [2, 3])
    text = histograms_to_csv(hists.values())
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["n", "k", "count", "total"]
    assert {(r["n"], r["k"], r["count"], r["total"]) for r in rows if r["n"] == "2"} == \
        {("2", "0", "2", "6"), ("2", "2", "4", "6")}
