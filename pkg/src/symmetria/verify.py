"""Verification suites.  Each returns a list of check reports.

A report is a dict with at least ``name`` and ``status`` ("ok" or
"mismatch"); extra keys carry details such as the first differing term.
"""

from __future__ import annotations

import math
from collections import Counter
from math import comb, isqrt

from . import bijections as B
from . import paths as P
from .catalog import (
    b_uvz, b_uvz_closed_residual, brute_force_gf, closed_form, gf_catalog, motzkin_f,
    grand_motzkin_g,
)
from .distributions import (
    LAWS, Histogram, closed_form_moments, exact_distribution, exact_distributions, kolmogorov_distance,
    moments,
)
from .oeis import check_all
from .reference_tables import TABLES, as_counts
from .series import TruncatedSeries, monomial
from .statistics import grand_dyck_histograms, dsh, ds_path, ds_square, pho, ret, sv
from .walks import R_specializations, feq_residual, h_series

TS = TruncatedSeries


def _ok(name: str, good: bool, **extra) -> dict:
    return {"name": name, "status": "ok" if good else "mismatch", **extra}


def _series_check(name: str, a: TS, b: TS) -> dict:
    diff = a.first_difference(b)
    if diff is None:
        return _ok(name, True, order=min(a.order, b.order))
    k, m = diff
    return _ok(name, False, order=min(a.order, b.order),
               first_mismatch={"zdeg": k, "monomial": dict(m),
                               "got": str(a.coefficient(k, m)), "expected": str(b.coefficient(k, m))})


# -- tables ------------------------------------------------------------------


def table_rows(name: str, n_max: int) -> dict:
    """Rows of a published table from both routes plus the printed values where known."""
    rows, first_k, (cls, stat) = TABLES[name]
    n_lo = min(rows)
    fast = exact_distributions(cls, stat, range(n_lo, n_max + 1))
    out = {}
    for n in range(n_lo, n_max + 1):
        oracle = exact_distribution(cls, stat, n, method="oracle")
        out[n] = {"series": dict(fast[n].counts), "enumeration": dict(oracle.counts),
                  "published": as_counts(rows[n], first_k) if n in rows else None}
    return out


def suite_tables(n_max: dict | None = None) -> list[dict]:
    limits = {"grand_ds": 6, "grand_sv": 6, "partitions_psp": 8, "dyck_ds": 7, "dyck_sv": 7}
    limits.update(n_max or {})
    reports = []
    for name, top in sorted(limits.items()):
        bad = []
        for n, r in table_rows(name, top).items():
            if r["series"] != r["enumeration"] or (r["published"] is not None
                                                   and r["published"] != r["series"]):
                bad.append(n)
        reports.append(_ok(f"table {name} n<={top}", not bad, mismatched_rows=bad))
    return reports


# -- bijections --------------------------------------------------------------


def _is_bijection(name, domain, fn, inverse, codomain_size, valid=None) -> tuple[dict, list]:
    images = []
    good = True
    for obj in domain:
        img = fn(obj)
        if valid is not None and not valid(img):
            good = False
            break
        if inverse(img) != obj:
            good = False
            break
        images.append(img)
    good = good and len(set(images)) == len(domain) == codomain_size
    return _ok(name, good), images


def suite_bijections(max_n: int = 7, max_n_motzkin: int = 10) -> list[dict]:
    reports = []
    for n in range(max_n + 1):
        grand = P.enumerate_words(P.GRAND_DYCK, n)
        nb = len(grand)
        r, images = _is_bijection(f"phi n={n}", grand, B.phi, B.phi_inv,
                                  P.count(P.BICOLORED_GRAND_MOTZKIN, n), P.validate)
        reports.append(r)
        reports.append(_ok(f"phi transports ds and sv n={n}", all(
            ds_path(p) == sum(B.height_zero_counts(m)) and sv(p) == B.axis_vertices(m) - 1
            for p, m in zip(grand, images))))
        r, images = _is_bijection(f"sv_to_ret n={n}", grand, B.sv_to_ret, B.sv_to_ret_inv, nb,
                                  P.validate)
        reports.append(r)
        reports.append(_ok(f"sv_to_ret transports sv to ret n={n}",
                           all(sv(p) == ret(q) for p, q in zip(grand, images))))
        parts = P.enumerate_partitions(P.InSquare(n))
        r, images = _is_bijection(f"partial_n n={n}", parts, lambda lam: B.partial_n(lam, n),
                                  B.partial_n_inv, nb, P.validate)
        reports.append(r)
        reports.append(_ok(f"partial_n transports ds_square and dsh n={n}", all(
            ds_square(lam, n) == ds_path(p) and dsh(lam) == B.height_zero_counts(B.phi(p))[0]
            for lam, p in zip(parts, images))))
        r, images = _is_bijection(f"psi n={n}", parts, lambda lam: B.psi(lam, n), B.psi_inv, nb,
                                  P.validate)
        reports.append(r)
        reports.append(_ok(f"psi transports dsh to pho n={n}",
                           all(dsh(lam) == pho(p) for lam, p in zip(parts, images))))
        dyck = P.enumerate_words(P.DYCK, n)
        r, images = _is_bijection(f"dyck_to_wq3 n={n}", dyck, B.dyck_to_wq3, B.wq3_to_dyck,
                                  P.count(P.WQ3, n), P.validate)
        reports.append(r)
        reports.append(_ok(f"dyck_to_wq3 transports ds and sv n={n}", all(
            ds_path(p) == B.axis_steps(w) and sv(p) == B.axis_vertices_before_end(w)
            for p, w in zip(dyck, images))))
        stages = all(P.validate(B.dyck_to_wq1(p)) and P.validate(B.wq1_fold_wq2(B.dyck_to_wq1(p)))
                     for p in dyck)
        reports.append(_ok(f"dyck_to_wq3 stages land in WQ1 and WQ2 n={n}", stages))
    for n in range(max_n_motzkin + 1):
        vf = P.enumerate_words(P.VALLEY_FREE_MOTZKIN, n)
        r, _ = _is_bijection(f"theta n={n}", vf, B.theta, B.theta_inv,
                             P.count(P.UNEVEN_BICOLORED_MOTZKIN, n),
                             lambda b: P.validate(b) and b.size == n)
        reports.append(r)
        pk = P.enumerate_words(P.PEAKLESS_MOTZKIN, n + 1)
        r, _ = _is_bijection(f"mu length {n + 1}", pk, B.mu, B.mu_inv, len(vf),
                             lambda v: P.validate(v) and len(v) == n)
        reports.append(r)
        gp = P.enumerate_words(P.GRAND_PEAKLESS_MOTZKIN, n)
        r, _ = _is_bijection(f"big_theta n={n}", gp, B.big_theta, B.big_theta_inv,
                             P.count(P.UNEVEN_BICOLORED_GRAND_MOTZKIN, n),
                             lambda b: P.validate(b) and b.size == n)
        reports.append(r)
    return reports


# -- functional equations ------------------------------------------------------


def suite_feq(order: int = 12) -> list[dict]:
    reports = []
    for mode in ("ds", "sv"):
        res = feq_residual(mode, order)
        reports.append(_ok(f"functional equation residual {mode} order {order}", res.is_zero(),
                           order=order))
    reports.extend(R_specializations(order))
    h = h_series(order, "ballot")
    for method in ("walk", "diagonal"):
        reports.append(_series_check(f"H(y,z) ballot squares = {method}", h, h_series(order, method)))
    return reports


# -- series identities ------------------------------------------------------------


def _hm_sqrt_check(order: int) -> dict:
    hm = gf_catalog("HM_GRAND", order)
    y = TS.var("y", order, zdeg=0)
    yinv = TS.var("y", order, exp=-1, zdeg=0)
    rational = (1 - (y + yinv) * TS.z(order)).reciprocal()
    good = True
    for k in range(order + 1):
        got = {}
        for m, c in hm[k].items():
            r = isqrt(c)
            if r * r != c:
                good = False
            got[m] = r
        if got != rational[k]:
            good = False
    return _ok(f"HM_GRAND coefficient square roots = 1/(1-(y+1/y)z) order {order}", good)


def suite_series_identities(order: int = 14) -> list[dict]:
    n16 = max(order, 16)
    reports = []
    x, y = TS.var("x", n16, zdeg=1), TS.var("y", n16, zdeg=1)
    f = motzkin_f(x, y)
    reports.append(_ok("F = 1 + (x+y)F + xyF^2", (f - 1 - (x + y) * f - x * y * f * f).is_zero()))
    z = TS.z(n16)
    fzz = motzkin_f(z, z)
    reports.append(_ok("F(z,z) = 1 + 2zF + z^2F^2",
                       (fzz - 1 - 2 * z * fzz - z * z * fzz * fzz).is_zero()))
    s1, s2 = TS.var("s1", n16, zdeg=0), TS.var("s2", n16, zdeg=0)
    g = grand_motzkin_g(x, y, s1, s2)
    reports.append(_series_check("G (1 - s1 x - s2 y - 2xyF) = 1",
                                 g * (1 - s1 * x - s2 * y - 2 * x * y * f), TS.constant(1, n16)))
    cat = gf_catalog("CATALAN", n16)
    reports.append(_series_check("z^2 F(z,z) = z (C(z) - 1)", z * z * fzz, z * (cat - 1)))
    reports.append(_series_check("CATALAN = C_n", cat, TS.from_univariate(
        [comb(2 * n, n) // (n + 1) for n in range(n16 + 1)])))
    for name in ("G", "CATALAN", "DS_GRAND", "SV_GRAND", "JOINT_DS_SV", "DS_SQUARE", "DS_MINSQ",
                 "PSP", "JTILDE", "DSH_SQUARE", "DSH_MINSQ", "PHO_GRAND", "UB_XY", "UB_SP",
                 "PEAKLESS", "BALLOT_B0b", "HM_GRAND", "JOINT_DS_HM"):
        reports.append(_series_check(f"{name} structural = closed form order {order}",
                                     gf_catalog(name, order), closed_form(name, order)))
    s = TS.var("s", order, zdeg=0)
    z = TS.z(order)
    ds = gf_catalog("DS_SQUARE", order)
    reports.append(_series_check("DS_MINSQ = (1 - sz) DS_SQUARE", gf_catalog("DS_MINSQ", order),
                                 (1 - s * z) * ds))
    reports.append(_series_check("DSH_MINSQ = (1 - z) DSH_SQUARE", gf_catalog("DSH_MINSQ", order),
                                 (1 - z) * gf_catalog("DSH_SQUARE", order)))
    reports.append(_series_check("PHO_GRAND = DSH_SQUARE", gf_catalog("PHO_GRAND", order),
                                 gf_catalog("DSH_SQUARE", order)))
    reports.append(_series_check("DS_GRAND at s=1 = binom(2n,n)",
                                 gf_catalog("DS_GRAND", order).specialize("s", 1),
                                 TS.from_univariate([comb(2 * n, n) for n in range(order + 1)])))
    reports.append(_series_check("PSP at s=1 = 1 + z^2/(1-2z)",
                                 gf_catalog("PSP", order).specialize("s", 1),
                                 1 + z * z / (1 - 2 * z)))
    jt = gf_catalog("JTILDE", order)
    j = gf_catalog("J", order)
    reports.append(_series_check("JTILDE = 1 + z^2 J + z JTILDE + z^3 JTILDE J", jt,
                                 1 + z * z * j + z * jt + z ** 3 * jt * j))
    z2 = TS.z(order, 2)
    reports.append(_series_check("K = z^3 JTILDE G(z^2,z^2,s,s)", gf_catalog("K", order),
                                 z ** 3 * jt * grand_motzkin_g(z2, z2, s, s)))
    psp = gf_catalog("PSP", order)
    reports.append(_series_check("PSP = 1 + s z^2 G(z^2,z^2,s,s) + 2K", psp,
                                 1 + s * z * z * grand_motzkin_g(z2, z2, s, s)
                                 + 2 * gf_catalog("K", order)))
    ub = gf_catalog("UB_SP", order).specialize("s", 1)
    reports.append(_series_check("UB_SP at s=1 = z (G(z^2,z,1,1) - 1)", ub,
                                 z * (grand_motzkin_g(z * z, z) - 1)))
    pk = gf_catalog("PEAKLESS", order)
    peakless_counts = TS.from_univariate([P.count(P.PEAKLESS_MOTZKIN, n) for n in range(order + 1)])
    reports.append(_series_check("1 + z F(z^2,z) = peakless Motzkin counts", 1 + z * pk,
                                 peakless_counts))
    valley_free = TS.from_univariate([P.count(P.VALLEY_FREE_MOTZKIN, n) for n in range(order + 1)])
    reports.append(_series_check("F(z^2,z) = valley-free Motzkin counts", pk, valley_free))
    joint = gf_catalog("JOINT_DS_SV", order)
    reports.append(_series_check("JOINT_DS_SV at v=1 = DS_GRAND", joint.specialize("v", 1),
                                 gf_catalog("DS_GRAND", order)))
    reports.append(_series_check("JOINT_DS_SV at s=1 = SV_GRAND", joint.specialize("s", 1),
                                 gf_catalog("SV_GRAND", order)))
    joint = gf_catalog("JOINT_DS_HM", order)
    reports.append(_series_check("JOINT_DS_HM at y=1 = DS_GRAND", joint.specialize("y", 1),
                                 gf_catalog("DS_GRAND", order)))
    reports.append(_series_check("JOINT_DS_HM at s=1 = HM_GRAND", joint.specialize("s", 1),
                                 gf_catalog("HM_GRAND", order)))
    reports.append(_series_check("HM_GRAND = sum binom(n,k)^2 y^(n-2k) z^n",
                                 gf_catalog("HM_GRAND", order), closed_form("HM_GRAND_SUM", order)))
    reports.append(_hm_sqrt_check(order))
    ballot = gf_catalog("BALLOT_B0b", order)
    buvz = b_uvz(order, cap=6)
    ab_ok = True
    b0_ok = True
    for a in range(5):
        for b in range(5):
            bab = gf_catalog("B_AB", order, a=a, b=b)
            if bab != closed_form("B_AB", order, a=a, b=b):
                ab_ok = False
            col = [buvz.coefficient(n, monomial(u=a, v=b)) for n in range(order + 1)]
            if col != bab.univariate():
                ab_ok = False
            if a == 0 and [ballot.coefficient(n, monomial(y=b)) for n in range(order + 1)] \
                    != bab.univariate():
                b0_ok = False
    reports.append(_ok("B_AB = reflection count and = [u^a v^b] B_UVZ, a,b<=4", ab_ok))
    reports.append(_ok("B_AB(0,b) = [y^b] BALLOT_B0b, b<=4", b0_ok))
    reports.append(_ok("B_UVZ satisfies its closed form", b_uvz_closed_residual(order, 8).is_zero()))
    small = min(order, 8)
    reports.append(_series_check("DS_GRAND = enumeration", gf_catalog("DS_GRAND", small),
                                 brute_force_gf(P.GRAND_DYCK, ["ds_path"], small)))
    reports.append(_series_check("PSP = enumeration", gf_catalog("PSP", small),
                                 brute_force_gf(P.BySemiperimeter, ["ds_partition"], small)))
    reports.append(_series_check("H(y,z) = enumeration", h_series(small),
                                 brute_force_gf(P.DYCK, ["hm"], small)))
    reports.append(_series_check("JOINT_DS_HM = enumeration", gf_catalog("JOINT_DS_HM", 6),
                                 brute_force_gf(P.GRAND_DYCK, ["ds_path", "hm"], 6)))
    reports.append(_series_check("UB_SP = enumeration", gf_catalog("UB_SP", small),
                                 brute_force_gf("bargraph", ["ds_bargraph"], small)))
    return reports


# -- moments and limits -------------------------------------------------------------


def suite_moments(max_n: int = 12) -> list[dict]:
    """Closed-form moments against moments of exhaustively enumerated words."""
    bad: dict[str, list[int]] = {"ds": [], "sv": []}
    for n in range(1, max_n + 1):
        brute = grand_dyck_histograms(n)
        for stat in bad:
            if closed_form_moments("grand_dyck", stat, n) != moments(Histogram(n, brute[stat])):
                bad[stat].append(n)
    return [_ok(f"grand_dyck {stat} closed-form moments n<={max_n}", not b, mismatched_n=b)
            for stat, b in bad.items()]


LIMIT_PAIRS = (("grand_dyck", "ds"), ("grand_dyck", "sv"), ("partitions_square", "ds"),
               ("partitions_square", "dsh"), ("bargraphs_ub", "ds"), ("partitions_sp", "ds"))


def suite_limits(ns=(50, 100, 200, 400), threshold: float = 0.08,
                 mean_tolerance: float = 0.05) -> list[dict]:
    reports = []
    top = max(ns)
    for cls, stat in LIMIT_PAIRS:
        law = LAWS[cls, stat]
        hists = exact_distributions(cls, stat, ns)
        dist = [kolmogorov_distance(hists[n], law.cdf) for n in ns]
        decreasing = all(a > b for a, b in zip(dist, dist[1:]))
        reports.append(_ok(f"{cls} {stat} Kolmogorov distance decreasing", decreasing,
                           distances=dict(zip(ns, dist))))
        reports.append(_ok(f"{cls} {stat} Kolmogorov distance < {threshold} at n={top}",
                           dist[-1] < threshold, distance=dist[-1], law=law.kind,
                           sigma=law.sigma))
    targets = {"ds": math.sqrt(math.pi) / 2, "sv": math.sqrt(math.pi)}
    hists = {s: exact_distributions("grand_dyck", s, [top])[top] for s in targets}
    for stat, target in targets.items():
        ratio = float(moments(hists[stat])[0]) / math.sqrt(top) / target
        reports.append(_ok(f"grand_dyck {stat} mean/sqrt(n) within {mean_tolerance:.0%} at n={top}",
                           abs(ratio - 1) <= mean_tolerance, ratio=ratio))
    return reports


def suite_oeis() -> list[dict]:
    return check_all()


SUITES = {
    "tables": suite_tables,
    "bijections": suite_bijections,
    "feq": suite_feq,
    "series_identities": suite_series_identities,
    "moments": suite_moments,
    "limits": suite_limits,
    "oeis": suite_oeis,
}


def failures(reports: list[dict]) -> list[dict]:
    return [r for r in reports if r["status"] != "ok"]


def tally(reports: list[dict]) -> Counter:
    return Counter(r["status"] for r in reports)
