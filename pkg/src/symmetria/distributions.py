"""Exact distributions of statistics, their moments, and limit-law comparisons."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping

from . import paths as P
from .catalog import _objects, gf_catalog
from .statistics import STATISTICS
from .walks import x_axis_histogram


class UnsupportedPairError(ValueError):
    pass


@dataclass(frozen=True)
class Histogram:
    n: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(k): int(c) for k, c in sorted(self.counts.items()) if c}
        if any(c < 0 for c in clean.values()):
            raise ValueError("negative count")
        object.__setattr__(self, "counts", clean)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def probability(self, k: int) -> Fraction:
        return Fraction(self.counts.get(k, 0), self.total)

    def row(self) -> list[int]:
        """Counts for k = min..max with explicit zeros, min being 0 unless negative."""
        if not self.counts:
            return []
        lo = min(0, min(self.counts))
        return [self.counts.get(k, 0) for k in range(lo, max(self.counts) + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "count", "total"])
        total = self.total
        for k, c in self.counts.items():
            w.writerow([self.n, k, c, total])
        return buf.getvalue()


@dataclass(frozen=True)
class Pair:
    """A class of objects with a statistic: the series route and the enumeration route."""

    cls: str
    stat: str
    gf: str | None
    var: str | None
    source: object
    statistic: str


PAIRS: dict[tuple[str, str], Pair] = {p[:2]: Pair(*p) for p in [
    ("grand_dyck", "ds", "DS_GRAND", "s", P.GRAND_DYCK, "ds_path"),
    ("grand_dyck", "sv", "SV_GRAND", "v", P.GRAND_DYCK, "sv"),
    ("grand_dyck", "pho", "PHO_GRAND", "s", P.GRAND_DYCK, "pho"),
    ("grand_dyck", "ret", "SV_GRAND", "v", P.GRAND_DYCK, "ret"),
    ("grand_dyck", "hm", "HM_GRAND", "y", P.GRAND_DYCK, "hm"),
    ("dyck", "ds", None, None, P.DYCK, "ds_path"),
    ("dyck", "sv", None, None, P.DYCK, "sv"),
    ("dyck", "hm", "H_DYCK", "y", P.DYCK, "hm"),
    ("partitions_square", "ds", "DS_SQUARE", "s", P.InSquare, "ds_square"),
    ("partitions_square", "dsh", "DSH_SQUARE", "s", P.InSquare, "dsh"),
    ("partitions_minsq", "ds", "DS_MINSQ", "s", P.ByMinSquare, "ds_partition"),
    ("partitions_minsq", "dsh", "DSH_MINSQ", "s", P.ByMinSquare, "dsh"),
    ("partitions_sp", "ds", "PSP", "s", P.BySemiperimeter, "ds_partition"),
    ("bargraphs_ub", "ds", "UB_SP", "s", "bargraph", "ds_bargraph"),
]}

_CLASS_ALIASES = {
    "granddyck": "grand_dyck", "dyck": "dyck",
    "partitionssquare": "partitions_square", "partitionsinsquare": "partitions_square",
    "partitionsminsq": "partitions_minsq", "partitionsbyminsquare": "partitions_minsq",
    "partitionssp": "partitions_sp", "partitionsbysp": "partitions_sp",
    "bargraphsub": "bargraphs_ub", "ub": "bargraphs_ub",
}


def pair(cls: str, stat: str) -> Pair:
    key = _CLASS_ALIASES.get("".join(ch for ch in cls.lower() if ch.isalnum()), cls)
    stat = {"ds_square": "ds", "ds_path": "ds", "ds_partition": "ds"}.get(stat, stat)
    try:
        return PAIRS[key, stat]
    except KeyError:
        supported = ", ".join(f"{c}/{s}" for c, s in PAIRS)
        raise UnsupportedPairError(f"unsupported pair {cls}/{stat}; supported: {supported}") from None


@lru_cache(maxsize=16)
def _expansion(gf: str, order: int):
    return gf_catalog(gf, order, method="closed")


def _series_histogram(p: Pair, n: int, order: int | None = None) -> Histogram:
    if p.gf is None:
        return Histogram(n, x_axis_histogram(n, p.stat))
    series = _expansion(p.gf, max(n, order or 0))
    return Histogram(n, series.polynomial_in(n, p.var))


def _oracle_histogram(p: Pair, n: int) -> Histogram:
    fn = STATISTICS[p.statistic][1]
    hist: dict[int, int] = {}
    for obj, size in _objects(p.source, n, P.DEFAULT_CAP):
        k = fn(obj, size)
        hist[k] = hist.get(k, 0) + 1
    return Histogram(n, hist)


def exact_distribution(cls: str, stat: str, n: int, method: str = "series") -> Histogram:
    """Exact counts by statistic value; ``method`` is "series" (fast) or "oracle"."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = pair(cls, stat)
    if method == "series":
        return _series_histogram(p, n)
    if method == "oracle":
        return _oracle_histogram(p, n)
    raise ValueError(f"unknown method {method!r}")


def exact_distributions(cls: str, stat: str, ns: Iterable[int]) -> dict[int, Histogram]:
    """Several sizes from one series expansion."""
    ns = sorted(set(ns))
    p = pair(cls, stat)
    top = ns[-1] if ns else 0
    return {n: _series_histogram(p, n, top) for n in ns}


def moments(h: Histogram) -> tuple[Fraction, Fraction]:
    total = h.total
    if not total:
        raise ValueError("empty histogram")
    m1 = Fraction(sum(k * c for k, c in h.counts.items()), total)
    m2 = Fraction(sum(k * k * c for k, c in h.counts.items()), total)
    return m1, m2 - m1 * m1


def closed_form_moments(cls: str, stat: str, n: int) -> tuple[Fraction, Fraction]:
    """Exact mean and variance for symmetric steps or vertices of grand Dyck paths, n >= 1."""
    p = pair(cls, stat)
    if p.cls != "grand_dyck" or p.stat not in ("ds", "sv"):
        raise UnsupportedPairError("closed-form moments exist for grand_dyck ds and sv only")
    if n < 1:
        raise ValueError("the closed forms hold for n >= 1")
    b = comb(2 * n, n)
    if p.stat == "ds":
        mean = Fraction(2 ** (2 * n - 1), b)
        var = Fraction(2 * n * (n - 1), 2 * n - 1) + mean - Fraction(4 ** (2 * n - 1), b * b)
    else:
        mean = Fraction(4 ** n, b) - 1
        var = 4 * n + 2 - Fraction(4 ** n, b) - Fraction(16 ** n, b * b)
    return mean, var


# -- limit laws --------------------------------------------------------------


@dataclass(frozen=True)
class LimitLaw:
    kind: str  # "rayleigh" or "half_normal"
    sigma: float

    def __post_init__(self):
        kind = self.kind.lower().replace("-", "_")
        if kind not in ("rayleigh", "half_normal"):
            raise ValueError(f"unknown law {self.kind!r}")
        if not self.sigma > 0:
            raise ValueError("sigma must be positive")
        object.__setattr__(self, "kind", kind)

    @classmethod
    def parse(cls, text: str) -> "LimitLaw":
        """"rayleigh:0.7071" or "half_normal:0.5"."""
        kind, _, sigma = text.partition(":")
        return cls(kind, float(sigma))

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        if self.kind == "rayleigh":
            return -math.expm1(-x * x / (2 * self.sigma ** 2))
        return math.erf(x / (self.sigma * math.sqrt(2)))

    def local(self, k: int, n: int) -> float:
        """Local-law approximation of Pr(X_n = k)."""
        s2n = self.sigma ** 2 * n
        if self.kind == "rayleigh":
            return k / s2n * math.exp(-k * k / (2 * s2n))
        return math.sqrt(2 / (math.pi * s2n)) * math.exp(-k * k / (2 * s2n))


LAWS = {
    ("grand_dyck", "ds"): LimitLaw("rayleigh", 1 / math.sqrt(2)),
    ("grand_dyck", "sv"): LimitLaw("rayleigh", math.sqrt(2)),
    ("grand_dyck", "ret"): LimitLaw("rayleigh", math.sqrt(2)),
    ("grand_dyck", "pho"): LimitLaw("rayleigh", 1 / (2 * math.sqrt(2))),
    ("partitions_square", "ds"): LimitLaw("rayleigh", 1 / math.sqrt(2)),
    ("partitions_minsq", "ds"): LimitLaw("rayleigh", 1 / math.sqrt(2)),
    ("partitions_square", "dsh"): LimitLaw("rayleigh", 1 / (2 * math.sqrt(2))),
    ("partitions_minsq", "dsh"): LimitLaw("rayleigh", 1 / (2 * math.sqrt(2))),
    ("bargraphs_ub", "ds"): LimitLaw("rayleigh", (3 - math.sqrt(5)) / (2 * 20 ** 0.25)),
    ("partitions_sp", "ds"): LimitLaw("half_normal", 0.5),
}


def default_law(cls: str, stat: str) -> LimitLaw:
    p = pair(cls, stat)
    try:
        return LAWS[p.cls, p.stat]
    except KeyError:
        raise UnsupportedPairError(f"no limit law recorded for {p.cls}/{p.stat}") from None


def kolmogorov_distance(h: Histogram, cdf: Callable[[float], float],
                        cdf_left: Callable[[float], float] | None = None,
                        scale: float | None = None) -> float:
    """sup_x |Pr(X/scale <= x) - cdf(x)|, checked on both sides of every jump.

    ``cdf_left`` gives left limits for a discontinuous reference; a continuous
    reference leaves it as ``cdf``.  Cumulative sums stay exact until the final
    conversion to float.
    """
    if scale is None:
        scale = math.sqrt(h.n)
    cdf_left = cdf_left or cdf
    total = h.total
    cum = 0
    worst = 0.0
    for k, c in h.counts.items():
        x = k / scale
        below = float(Fraction(cum, total))
        cum += c
        upto = float(Fraction(cum, total))
        worst = max(worst, abs(below - cdf_left(x)), abs(upto - cdf(x)))
    return worst


def step_cdf(h: Histogram, scale: float | None = None):
    """CDF of X/scale and its left limit, as a reference law for sanity checks."""
    if scale is None:
        scale = math.sqrt(h.n)
    pts = [(k / scale, c) for k, c in h.counts.items()]
    total = h.total

    def cdf(x):
        return float(Fraction(sum(c for p, c in pts if p <= x), total))

    def left(x):
        return float(Fraction(sum(c for p, c in pts if p < x), total))

    return cdf, left


def local_law_error(h: Histogram, law: LimitLaw) -> float:
    top = max(h.counts) if h.counts else 0
    return max(abs(float(h.probability(k)) - law.local(k, h.n)) for k in range(top + 1))


def limit_law_distance(cls: str, stat: str, n: int, law: LimitLaw | None = None,
                       h: Histogram | None = None) -> tuple[float, float]:
    """(Kolmogorov distance of X_n / sqrt(n) to the law, max local-law error)."""
    law = law or default_law(cls, stat)
    h = h or exact_distribution(cls, stat, n)
    return kolmogorov_distance(h, law.cdf), local_law_error(h, law)


def limit_law_table(cls: str, stat: str, ns: Iterable[int],
                    law: LimitLaw | None = None) -> list[dict]:
    law = law or default_law(cls, stat)
    hists = exact_distributions(cls, stat, ns)
    rows = []
    for n, h in hists.items():
        kd, le = limit_law_distance(cls, stat, n, law, h)
        mean, var = moments(h)
        rows.append({"n": n, "kolmogorov": kd, "local_law_max_err": le,
                     "mean_over_sqrt_n": float(mean) / math.sqrt(n)})
    return rows


def histograms_to_csv(hists: Iterable[Histogram]) -> str:
    out = "n,k,count,total\n"
    for h in hists:
        out += h.to_csv().split("\n", 1)[1]
    return out
