from math import comb

import pytest

from symmetria import bijections as B
from symmetria import paths as P
from symmetria import statistics as S
from symmetria.reference_tables import DYCK_DS, DYCK_SV, as_counts
from symmetria.series import TruncatedSeries as TS
from symmetria.walks import (
    R_series, R_specializations, WalkWeighting, dyck_generating_function, feq_residual,
    gouyou_beauchamps_counts, h_series, walk_dp, x_axis_histogram,
)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_walk_dp_start():
    assert walk_dp(0, "ds") == {(0, 0, 0): 1}
    with pytest.raises(ValueError):
        WalkWeighting(True, True)


def test_walk_dp_stays_in_quadrant():
    for n in range(8):
        assert all(i >= 0 and j >= 0 for i, j, _ in walk_dp(n, "sv"))


@pytest.mark.parametrize("n", range(1, 8))
def test_histograms_match_published_rows_and_bijection(n):
    assert x_axis_histogram(n, "ds") == as_counts(DYCK_DS[n], 1)
    assert x_axis_histogram(n, "sv") == as_counts(DYCK_SV[n], 1)
    ds, sv = {}, {}
    for p in P.enumerate_words(P.DYCK, n):
        w = B.dyck_to_wq3(p)
        ds[B.axis_steps(w)] = ds.get(B.axis_steps(w), 0) + 1
        sv[S.sv(p)] = sv.get(S.sv(p), 0) + 1
    assert x_axis_histogram(n, "ds") == dict(sorted(ds.items()))
    assert x_axis_histogram(n, "sv") == dict(sorted(sv.items()))


def test_dyck_gf_totals_are_catalan():
    assert dyck_generating_function(12).specialize("s", 1).univariate() == \
        [catalan(n) for n in range(13)]


@pytest.mark.parametrize("mode", ["ds", "sv"])
def test_functional_equation_residual_vanishes(mode):
    assert feq_residual(mode, 12).is_zero()


def test_residual_detects_perturbation():
    R = R_series(8, "ds") + TS.z(8)
    assert not feq_residual("ds", 8, R).is_zero()


def test_R_specializations():
    reports = R_specializations(12)
    assert [r["status"] for r in reports] == ["ok"] * len(reports)


def test_h_series_routes_agree():
    h = h_series(12)
    for method in ("walk", "diagonal", "ballot_uvz"):
        assert h_series(12, method) == h
    assert h.specialize("y", 1).univariate() == [catalan(n) for n in range(13)]
    assert h.specialize("y", 0).univariate() == \
        [catalan(n // 2) ** 2 if n % 2 == 0 else 0 for n in range(13)]


def test_uncoloured_counts():
    from symmetria.oeis import load_fixture
    a = load_fixture("A005817")
    b = load_fixture("A005558")
    assert gouyou_beauchamps_counts(11) == a["terms"][:12]
    assert gouyou_beauchamps_counts(11, "any") == b["terms"][:12]
