"""Named generating functions, built from their defining equations.

Each entry is constructed structurally (fixpoints and products of simpler
series) and, where a closed form with radicals exists, the closed form is
available separately through :func:`closed_form` so the two can be compared.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from . import paths as P
from .series import SeriesError, TruncatedSeries, monomial
from .statistics import STATISTICS

TS = TruncatedSeries


def _var(name: str, order: int, zdeg: int = 1, exp: int = 1) -> TS:
    return TS.var(name, order, exp=exp, zdeg=zdeg)


def _z(order: int, power: int = 1) -> TS:
    return TS.z(order, power)


def _one(order: int) -> TS:
    return TS.constant(1, order)


def fixpoint(step: Callable[[TS], TS], order: int) -> TS:
    """Solve X = step(X) when step gains at least one z-degree per application."""
    x = step(TS.zero(0))
    for k in range(1, order + 1):
        x = step(x.padded(k)).truncate(k)
    return x


def motzkin_f(xw: TS, yw: TS) -> TS:
    """F(xw, yw) with F = 1 + (x + y)F + xyF^2; xw and yw must vanish at z = 0."""
    order = min(xw.order, yw.order)
    s, p = xw + yw, xw * yw

    def step(f: TS) -> TS:
        k = f.order
        return 1 + s.truncate(k) * f + p.truncate(k) * f * f

    return fixpoint(step, order)


def grand_motzkin_g(xw: TS, yw: TS, s1=1, s2=1) -> TS:
    """G(xw, yw, s1, s2) = 1/(1 - s1 x - s2 y - 2xyF(x, y))."""
    f = motzkin_f(xw, yw)
    return (1 - xw * s1 - yw * s2 - 2 * xw * yw * f).reciprocal()


def catalan(order: int) -> TS:
    z = _z(order)
    return fixpoint(lambda c: 1 + z.truncate(c.order) * c * c, order)


def _s(order: int, name: str = "s") -> TS:
    return _var(name, order, zdeg=0)


def _gf_F(order):
    return motzkin_f(_var("x", order), _var("y", order))


def _gf_G(order):
    return grand_motzkin_g(_var("x", order), _var("y", order), _s(order, "s1"), _s(order, "s2"))


def _gf_J(order):
    z2 = _z(order, 2)
    return motzkin_f(z2, z2)


def _g_z2(order):
    z2 = _z(order, 2)
    s = _s(order)
    return grand_motzkin_g(z2, z2, s, s)


def _gf_ds_grand(order):
    z, s = _z(order), _s(order)
    return grand_motzkin_g(z, z, s, s)


def _gf_sv_grand(order):
    z, v = _z(order), _s(order, "v")
    f = motzkin_f(z, z)
    return (1 - 2 * v * z - 2 * v * z * z * f).reciprocal()


def _gf_joint_ds_sv(order):
    z, s, v = _z(order), _s(order), _s(order, "v")
    f = motzkin_f(z, z)
    return (1 - v * (2 * s * z + 2 * z * z * f)).reciprocal()


def _gf_ds_minsq(order):
    return (1 - _s(order) * _z(order)) * _gf_ds_grand(order)


def _gf_jtilde(order):
    z = _z(order)
    j = _gf_J(order)
    return (1 + z * z * j) / (1 - z - z ** 3 * j)


def _gf_k(order):
    return _z(order, 3) * _gf_jtilde(order) * _g_z2(order)


def _gf_psp(order):
    z, s = _z(order), _s(order)
    return 1 + (s * z * z + 2 * z ** 3 * _gf_jtilde(order)) * _g_z2(order)


def _gf_dsh_square(order):
    z = _z(order)
    return grand_motzkin_g(z, z, _s(order), 1)


def _gf_dsh_minsq(order):
    return (1 - _z(order)) * _gf_dsh_square(order)


def _gf_pho_grand(order):
    # grand Dyck paths with an arbitrary subset of height-one peaks marked by t = s - 1
    z = _z(order)
    t = _s(order) - 1
    grand = (1 - 4 * z).sqrt().reciprocal()
    return (1 - t * z * grand).reciprocal() * grand


def _gf_ub_xy(order):
    x, y = _var("x", order), _var("y", order)
    g = grand_motzkin_g(x * x, y, _s(order), 1)
    return y * (1 + x - y) * g - y


def _gf_ub_sp(order):
    return _gf_ub_xy(order).specialize("x", 1).specialize("y", 1)


def _gf_peakless(order):
    z = _z(order)
    return motzkin_f(z * z, z)


def _gf_ballot(order):
    c2 = catalan(order // 2).substitute_z(2, order=order)
    yz = _var("y", order)
    return c2 / (1 - yz * c2)


def _hm_weights(order):
    zy = TS.var("y", order, exp=1, zdeg=1)
    zy_inv = TS.var("y", order, exp=-1, zdeg=1, laurent=True)
    return zy_inv, zy


def _gf_hm(order):
    x, y = _hm_weights(order)
    return grand_motzkin_g(x, y)


def _gf_joint_ds_hm(order):
    x, y = _hm_weights(order)
    s = _s(order)
    return grand_motzkin_g(x, y, s, s)


def _gf_h_dyck(order):
    """Dyck paths by semilength (z) and midpoint height (y), from squared ballot numbers."""
    ballot = _gf_ballot(order)
    cs = [{} for _ in range(order + 1)]
    for n, m, c in ballot.terms():
        cs[n][m] = c * c
    return TS(cs, order)


def b_ab(a: int, b: int, order: int) -> TS:
    """Paths from height a to height b staying weakly above the axis, by length."""
    if a > b:
        return b_ab(b, a, order)
    c2 = catalan(order // 2).substitute_z(2, order=order)
    z = _z(order)
    zc = z * c2
    total = TS.zero(order)
    term = c2
    for _ in range(a + 1):
        total = total + term
        term = term * zc * zc
    return zc ** (b - a) * total


def b_uvz(order: int, cap: int | None = None) -> TS:
    """B(u, v, z) with u, v exponents up to ``cap`` (default ``order``) exact."""
    cap = order if cap is None else cap
    c2 = catalan(order // 2).substitute_z(2, order=order)
    u, v = _var("u", order), _var("v", order)
    touching = c2 / ((1 - u * c2) * (1 - v * c2))
    uv = _s(order, "u") * _s(order, "v")
    shift = TS.zero(order)
    p = _one(order)
    for _ in range(cap + 1):
        shift = shift + p
        p = p * uv
    return (touching * shift).truncate_var("u", cap).truncate_var("v", cap)


_BUILDERS: dict[str, Callable[[int], TS]] = {
    "F": _gf_F,
    "G": _gf_G,
    "CATALAN": catalan,
    "J": _gf_J,
    "DS_GRAND": _gf_ds_grand,
    "SV_GRAND": _gf_sv_grand,
    "JOINT_DS_SV": _gf_joint_ds_sv,
    "DS_SQUARE": _gf_ds_grand,
    "DS_MINSQ": _gf_ds_minsq,
    "PSP": _gf_psp,
    "JTILDE": _gf_jtilde,
    "K": _gf_k,
    "DSH_SQUARE": _gf_dsh_square,
    "DSH_MINSQ": _gf_dsh_minsq,
    "PHO_GRAND": _gf_pho_grand,
    "UB_XY": _gf_ub_xy,
    "UB_SP": _gf_ub_sp,
    "PEAKLESS": _gf_peakless,
    "BALLOT_B0b": _gf_ballot,
    "B_AB": None,
    "B_UVZ": b_uvz,
    "HM_GRAND": _gf_hm,
    "JOINT_DS_HM": _gf_joint_ds_hm,
    "H_DYCK": _gf_h_dyck,
}

GF_NAMES = tuple(_BUILDERS)

# what z counts and what each auxiliary variable marks
DESCRIPTIONS = {
    "F": "bicolored Motzkin paths; x marks d+h1, y marks u+h2, z marks length",
    "G": "bicolored grand Motzkin paths; as F, with s1, s2 marking H1, H2 on the axis",
    "CATALAN": "Catalan numbers",
    "J": "F(z^2, z^2)",
    "DS_GRAND": "grand Dyck paths by semilength; s marks symmetric steps",
    "SV_GRAND": "grand Dyck paths by semilength; v marks symmetric vertices",
    "JOINT_DS_SV": "grand Dyck paths; s marks symmetric steps, v symmetric vertices",
    "DS_SQUARE": "partitions in an n x n square by n; s marks ds in the square",
    "DS_MINSQ": "partitions by side of smallest containing square; s marks ds",
    "PSP": "partitions by semiperimeter; s marks ds",
    "JTILDE": "bicolored Motzkin paths, weight z^2 per step, z per futile step",
    "K": "bicolored grand Motzkin paths starting with U, semiperimeter weighting",
    "DSH_SQUARE": "partitions in an n x n square by n; s marks symmetric diagonal hooks",
    "DSH_MINSQ": "partitions by side of smallest square; s marks symmetric diagonal hooks",
    "PHO_GRAND": "grand Dyck paths by semilength; s marks peaks at height one",
    "UB_XY": "unimodal centered bargraphs; s marks ds, x marks E steps, y marks N steps",
    "UB_SP": "unimodal centered bargraphs by semiperimeter; s marks ds",
    "PEAKLESS": "uneven bicolored Motzkin paths by size, F(z^2, z)",
    "BALLOT_B0b": "paths from height 0 by length; y marks the final height",
    "B_AB": "paths from height a to height b above the axis, by length",
    "B_UVZ": "paths above the axis by length; u marks start height, v end height",
    "HM_GRAND": "grand Dyck paths by semilength; y marks midpoint height (Laurent)",
    "JOINT_DS_HM": "grand Dyck paths; s marks symmetric steps, y midpoint height",
    "H_DYCK": "Dyck paths by semilength; y marks midpoint height",
}


def gf_catalog(name: str, order: int = 64, method: str = "structural", **params) -> TS:
    """Expand a named generating function.

    ``method="closed"`` evaluates the radical closed form instead of the
    defining equations; it is faster at large orders and must agree.
    """
    if order < 0:
        raise SeriesError("order must be >= 0")
    if name not in _BUILDERS:
        raise ValueError(f"unknown generating function {name!r}; choose from {', '.join(GF_NAMES)}")
    if method == "closed" and (name in _CLOSED or name == "B_AB"):
        return closed_form(name, order, **params)
    if method not in ("structural", "closed"):
        raise ValueError(f"unknown method {method!r}")
    if name == "B_AB":
        return b_ab(int(params.get("a", 0)), int(params.get("b", 0)), order)
    if name == "B_UVZ":
        return b_uvz(order, params.get("cap"))
    return _BUILDERS[name](order)


# -- closed forms with radicals --------------------------------------------


def _closed_ds(order):
    z, s = _z(order), _s(order)
    return (2 * (1 - s) * z + (1 - 4 * z).sqrt()).reciprocal()


def _closed_sv(order):
    z, v = _z(order), _s(order, "v")
    return (1 - v + v * (1 - 4 * z).sqrt()).reciprocal()


def _closed_joint_ds_sv(order):
    z, s, v = _z(order), _s(order), _s(order, "v")
    return (1 - v + 2 * (1 - s) * v * z + v * (1 - 4 * z).sqrt()).reciprocal()


def _closed_g(order):
    x, y = _var("x", order), _var("y", order)
    s1, s2 = _s(order, "s1"), _s(order, "s2")
    root = ((1 - x - y) ** 2 - 4 * x * y).sqrt()
    return ((1 - s1) * x + (1 - s2) * y + root).reciprocal()


def _closed_catalan(order):
    # (1 - sqrt(1-4z)) / (2z)
    return ((1 - (1 - 4 * _z(order + 1)).sqrt()) / 2).shift(-1)


def _closed_psp(order):
    z, s = _z(order), _s(order)
    r = (1 - 4 * z * z).sqrt()
    num = z * z * (r - (1 - s) * (1 - 2 * z))
    return 1 + num / ((1 - 2 * z) * (2 * (1 - s) * z * z + r))


def _closed_jtilde(order):
    z = _z(order + 1)
    num = (1 - 4 * z * z).sqrt() - 1 + 2 * z
    return (num / (2 * (1 - 2 * z))).shift(-1)


def _closed_dsh(order):
    z, s = _z(order), _s(order)
    return ((1 - s) * z + (1 - 4 * z).sqrt()).reciprocal()


def _closed_dsh_minsq(order):
    return (1 - _z(order)) * _closed_dsh(order)


def _closed_ub_xy(order):
    x, y, s = _var("x", order), _var("y", order), _s(order)
    root = (((x + 1) ** 2 - y) * ((x - 1) ** 2 - y)).sqrt()
    return y * (1 + x - y) / ((1 - s) * x * x + root) - y


def _closed_ub_sp(order):
    z, s = _z(order), _s(order)
    root = (1 - 2 * z - z ** 2 - 2 * z ** 3 + z ** 4).sqrt()
    return z / ((1 - s) * z * z + root) - z


def _closed_peakless(order):
    z = _z(order + 3)
    root = (1 - 2 * z - z ** 2 - 2 * z ** 3 + z ** 4).sqrt()
    return ((1 - z - z * z - root) / 2).shift(-3)


def _closed_ballot(order):
    z, y = _z(order), _var("y", order)
    return 2 / (1 - 2 * y + (1 - 4 * z * z).sqrt())


def _closed_hm(order):
    x, y = _hm_weights(order)
    z = _z(order)
    return (((1 - x - y) ** 2 - 4 * z * z).sqrt()).reciprocal()


def _closed_joint_ds_hm(order):
    x, y = _hm_weights(order)
    z, s = _z(order), _s(order)
    root = ((1 - x - y) ** 2 - 4 * z * z).sqrt()
    return ((1 - s) * (x + y) + root).reciprocal()


def closed_b_ab(a: int, b: int, order: int) -> TS:
    """B^{(a,b)} from the reflection-principle count."""
    from math import comb

    a, b = min(a, b), max(a, b)

    def c(n, k):
        return comb(n, k) if 0 <= k <= n else 0

    vals = [0] * (order + 1)
    for n in range(order + 1):
        if (n - a - b) % 2 == 0:
            vals[n] = c(n, (n - b + a) // 2) - c(n, (n - b - a - 2) // 2)
    return TS.from_univariate(vals, order)


def _closed_hm_sum(order):
    from math import comb
    terms = {}
    for n in range(order + 1):
        for k in range(n + 1):
            terms[(n, monomial(y=n - 2 * k))] = comb(n, k) ** 2
    return TS.from_terms(terms, order, laurent=["y"])


_CLOSED: dict[str, Callable[[int], TS]] = {
    "G": _closed_g,
    "CATALAN": _closed_catalan,
    "DS_GRAND": _closed_ds,
    "SV_GRAND": _closed_sv,
    "JOINT_DS_SV": _closed_joint_ds_sv,
    "DS_SQUARE": _closed_ds,
    "DS_MINSQ": lambda n: (1 - _s(n) * _z(n)) * _closed_ds(n),
    "PSP": _closed_psp,
    "JTILDE": _closed_jtilde,
    "DSH_SQUARE": _closed_dsh,
    "DSH_MINSQ": _closed_dsh_minsq,
    "PHO_GRAND": _closed_dsh,
    "UB_XY": _closed_ub_xy,
    "UB_SP": _closed_ub_sp,
    "PEAKLESS": _closed_peakless,
    "BALLOT_B0b": _closed_ballot,
    "HM_GRAND": _closed_hm,
    "HM_GRAND_SUM": _closed_hm_sum,
    "JOINT_DS_HM": _closed_joint_ds_hm,
}


def closed_form(name: str, order: int = 64, **params) -> TS:
    if name == "B_AB":
        return closed_b_ab(int(params.get("a", 0)), int(params.get("b", 0)), order)
    try:
        return _CLOSED[name](order)
    except KeyError:
        raise ValueError(f"no closed form recorded for {name!r}") from None


def b_uvz_closed_residual(order: int, cap: int) -> TS:
    """(1-uv) B (1 + uv - 2(u+v)z + (1-uv) sqrt(1-4z^2)) - 2, trimmed to exact exponents."""
    b = b_uvz(order, cap)
    z = _z(order)
    u0, v0 = _s(order, "u"), _s(order, "v")
    uv = u0 * v0
    other = 1 + uv - 2 * (u0 + v0) * z + (1 - uv) * (1 - 4 * z * z).sqrt()
    r = (1 - uv) * b * other - 2
    keep = cap - 2
    return r.truncate_var("u", keep).truncate_var("v", keep)


# -- brute-force oracles -----------------------------------------------------

DEFAULT_VARIABLE = {
    "ds_path": "s", "sv": "v", "ret": "r", "pho": "s", "hm": "y",
    "ds_square": "s", "ds_partition": "s", "dsh": "s", "durfee": "d",
    "ds_bargraph": "s", "sp_partition": "p", "sp_bargraph": "p",
}


def _objects(source, size: int, cap: int):
    """(object, size) pairs for a path family, partition mode class, or 'bargraph'."""
    if isinstance(source, P.PathFamily):
        return [(w, size) for w in P.enumerate_words(source, size, cap)]
    if source in ("bargraph", "UB"):
        if size < 2:
            return []
        return [(b, size) for b in P.enumerate_unimodal_centered_bargraphs(size)]
    if isinstance(source, type) and source in (P.InSquare, P.BySemiperimeter, P.ByMinSquare):
        return [(lam, size) for lam in P.enumerate_partitions(source(size))]
    raise ValueError(f"unsupported source {source!r}")


def brute_force_gf(source, statistics: Iterable[str] | Mapping[str, str], order: int,
                   cap: int = P.DEFAULT_CAP) -> TS:
    """Sum over all objects of size <= order of z^size times a monomial in the statistics."""
    if isinstance(statistics, Mapping):
        stat_vars = dict(statistics)
    else:
        stat_vars = {name: DEFAULT_VARIABLE.get(name, name) for name in statistics}
    fns = {}
    for name, var in stat_vars.items():
        if callable(name):
            fns[var] = lambda obj, n, f=name: f(obj)
        else:
            fns[var] = STATISTICS[name][1] if name in STATISTICS else _unknown(name)
    terms: dict = {}
    for n in range(order + 1):
        for obj, size in _objects(source, n, cap):
            m = monomial({var: fn(obj, size) for var, fn in fns.items()})
            terms[(n, m)] = terms.get((n, m), 0) + 1
    laurent = [v for (n, m) in terms for v, e in m if e < 0]
    return TS.from_terms(terms, order, laurent=set(laurent))


def _unknown(name):
    raise ValueError(f"unknown statistic {name!r}")
