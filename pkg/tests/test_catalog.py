from math import comb

import pytest

from symmetria import paths as P
from symmetria.catalog import GF_NAMES, brute_force_gf, closed_form, gf_catalog
from symmetria.reference_tables import GRAND_DS, PARTITIONS_SP
from symmetria.series import monomial


def row(series, n, var="s"):
    poly = series.polynomial_in(n, var)
    return [poly.get(k, 0) for k in range(max(poly) + 1)]


def test_ds_grand_reproduces_published_rows():
    s = gf_catalog("DS_GRAND", 6)
    for n, expected in GRAND_DS.items():
        assert row(s, n) == expected


def test_psp_reproduces_published_rows():
    s = gf_catalog("PSP", 8)
    for n, expected in PARTITIONS_SP.items():
        got = row(s, n)
        assert got + [0] * (len(expected) - len(got)) == expected


def test_ds_grand_total():
    assert gf_catalog("DS_GRAND", 12).specialize("s", 1).univariate() == \
        [comb(2 * n, n) for n in range(13)]


def test_catalan_and_unknown_name():
    assert gf_catalog("CATALAN", 4).univariate() == [1, 1, 2, 5, 14]
    with pytest.raises(ValueError):
        gf_catalog("NOPE", 3)


def test_ub_sp_is_shifted_a051286():
    ub = gf_catalog("UB_SP", 14).specialize("s", 1).univariate()
    assert ub[:2] == [0, 0]
    assert ub[2:] == [sum(comb(n - k, k) ** 2 for k in range(n // 2 + 1)) for n in range(1, 14)]


@pytest.mark.parametrize("name", [n for n in GF_NAMES if n not in ("B_AB", "B_UVZ", "F", "J", "K", "H_DYCK")])
def test_structural_equals_closed_form(name):
    assert gf_catalog(name, 12) == closed_form(name, 12)


def test_closed_method_matches_structural_at_order_30():
    for name in ("DS_GRAND", "SV_GRAND", "PSP", "DSH_SQUARE", "UB_SP"):
        assert gf_catalog(name, 30, method="closed") == gf_catalog(name, 30)


@pytest.mark.parametrize("source, stats, gf, order", [
    (P.GRAND_DYCK, ["ds_path"], "DS_GRAND", 6),
    (P.GRAND_DYCK, ["sv"], "SV_GRAND", 6),
    (P.GRAND_DYCK, ["pho"], "PHO_GRAND", 6),
    (P.BySemiperimeter, ["ds_partition"], "PSP", 8),
    (P.InSquare, ["ds_square"], "DS_SQUARE", 5),
    (P.ByMinSquare, ["ds_partition"], "DS_MINSQ", 5),
    (P.InSquare, ["dsh"], "DSH_SQUARE", 5),
    (P.ByMinSquare, ["dsh"], "DSH_MINSQ", 5),
    ("bargraph", ["ds_bargraph"], "UB_SP", 10),
])
def test_brute_force_oracles(source, stats, gf, order):
    assert brute_force_gf(source, stats, order) == gf_catalog(gf, order)


def test_brute_force_hm_matches_ballot_squares():
    assert brute_force_gf(P.DYCK, ["hm"], 8) == gf_catalog("H_DYCK", 8)
    assert brute_force_gf(P.GRAND_DYCK, ["hm"], 6) == gf_catalog("HM_GRAND", 6)


def test_b_ab_matches_enumeration():
    for a in range(4):
        for b in range(4):
            s = gf_catalog("B_AB", 10, a=a, b=b)
            assert s.univariate() == [len(P.enumerate_ballot_paths(a, b, n)) for n in range(11)]


def test_b_uvz_coefficients():
    buvz = gf_catalog("B_UVZ", 8, cap=5)
    for a in range(3):
        for b in range(3):
            col = [buvz.coefficient(n, monomial(u=a, v=b)) for n in range(9)]
            assert col == gf_catalog("B_AB", 8, a=a, b=b).univariate()
