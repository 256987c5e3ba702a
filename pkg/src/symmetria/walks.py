"""Quarter-plane walks with steps E, W, NW, SE and their generating functions.

Walks start at the origin and stay in the first quadrant.  An NW step that
leaves the x-axis comes in two colours.  Through the folding bijection these
walks, when they end on the x-axis, encode Dyck paths: steps lying on the
x-axis are symmetric steps and vertices on the x-axis (endpoint excluded) are
symmetric vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .catalog import b_uvz, catalan, gf_catalog
from .series import TruncatedSeries, diagonal, monomial

TS = TruncatedSeries

# (dx, dy) for each step
E, W, NW, SE = (1, 0), (-1, 0), (-1, 1), (1, -1)
MOVES = (E, W, NW, SE)


@dataclass(frozen=True)
class WalkWeighting:
    """Which statistic the third coordinate k of a walk state records.

    ``s_weight_on_axis`` counts steps lying on the x-axis; ``v_weight_from_axis``
    counts steps starting on the x-axis.  With neither flag k stays 0.
    ``colored`` gives NW steps leaving the x-axis two colours.
    """

    s_weight_on_axis: bool = False
    v_weight_from_axis: bool = False
    colored: bool = True

    def __post_init__(self):
        if self.s_weight_on_axis and self.v_weight_from_axis:
            raise ValueError("at most one statistic can be tracked per run")

    @classmethod
    def for_mode(cls, mode: str | None, colored: bool = True) -> "WalkWeighting":
        if mode == "ds":
            return cls(s_weight_on_axis=True, colored=colored)
        if mode == "sv":
            return cls(v_weight_from_axis=True, colored=colored)
        if mode is None:
            return cls(colored=colored)
        raise ValueError(f"unknown walk mode {mode!r}")

    @property
    def variable(self) -> str | None:
        if self.s_weight_on_axis:
            return "s"
        if self.v_weight_from_axis:
            return "v"
        return None


WalkStateTable = dict  # (i, j, k) -> count


def _step_layer(layer: WalkStateTable, w: WalkWeighting) -> WalkStateTable:
    out: WalkStateTable = {}
    get = out.get
    for (i, j, k), c in layer.items():
        for dx, dy in MOVES:
            x, y = i + dx, j + dy
            if x < 0 or y < 0:
                continue
            mult = 2 if (w.colored and j == 0 and (dx, dy) == NW) else 1
            if w.s_weight_on_axis:
                k2 = k + (j == 0 and y == 0)
            elif w.v_weight_from_axis:
                k2 = k + (j == 0)
            else:
                k2 = k
            key = (x, y, k2)
            out[key] = get(key, 0) + mult * c
    return out


@lru_cache(maxsize=32)
def walk_layers(n: int, weighting: WalkWeighting = WalkWeighting()) -> tuple:
    """Tables for lengths 0..n."""
    if n < 0:
        raise ValueError("length must be >= 0")
    layers = [{(0, 0, 0): 1}]
    for _ in range(n):
        layers.append(_step_layer(layers[-1], weighting))
    return tuple(layers)


def walk_dp(n: int, weighting: WalkWeighting | str | None = None) -> WalkStateTable:
    if not isinstance(weighting, WalkWeighting):
        weighting = WalkWeighting.for_mode(weighting)
    return dict(walk_layers(n, weighting)[n])


def x_axis_histogram(n: int, mode: str) -> dict[int, int]:
    """Statistic histogram over walks of length n ending on the x-axis."""
    hist: dict[int, int] = {}
    for (i, j, k), c in walk_dp(n, mode).items():
        if j == 0:
            hist[k] = hist.get(k, 0) + c
    return dict(sorted(hist.items()))


def R_series(order: int, mode: str | None = "ds", colored: bool = True) -> TS:
    """R(x, y, s|v, z) assembled from the walk tables; x, y are auxiliary variables."""
    w = WalkWeighting.for_mode(mode, colored)
    var = w.variable
    layers = walk_layers(order, w)
    cs = []
    for layer in layers:
        co = {}
        for (i, j, k), c in layer.items():
            m = monomial({"x": i, "y": j, **({var: k} if var else {})})
            co[m] = co.get(m, 0) + c
        cs.append(co)
    return TS(cs, order)


def dyck_generating_function(order: int, mode: str = "ds") -> TS:
    """D(s, z) = R(1, 0, s, z) or its symmetric-vertex analogue."""
    return R_series(order, mode).specialize("y", 0).specialize("x", 1)


def _aux(name: str, order: int) -> TS:
    return TS.var(name, order, zdeg=0)


def feq_residual(mode: str = "ds", order: int = 12, R: TS | None = None) -> TS:
    """Left minus right side of the kernel equation for R; zero when R is correct."""
    if R is None:
        R = R_series(order, mode)
    order = R.order
    x, y, z = _aux("x", order), _aux("y", order), TS.z(order)
    t = _aux("s" if mode == "ds" else "v", order)
    R0y = R.specialize("x", 0)
    Rx0 = R.specialize("y", 0)
    R00 = Rx0.specialize("x", 0)
    kernel = x * y - z * (y + x * x) * (1 + y)
    lhs = kernel * R
    if mode == "ds":
        rx0 = z * (y * y - x * x + (t - 1) * y * (x * x + 1))
        r00 = z * y * (y + t - 1)
    elif mode == "sv":
        rx0 = z * (y * y - x * x + (t - 1) * y * (x * x + 1 + 2 * y))
        r00 = z * y * (y + (t - 1) * (1 + 2 * y))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rhs = x * y - z * y * (1 + y) * R0y + rx0 * Rx0 - r00 * R00
    return lhs - rhs


def _compare(name: str, got: list, expected: list) -> dict:
    order = len(expected) - 1
    for k, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            return {"name": name, "order": order, "status": "mismatch",
                    "first_mismatch": {"index": k, "got": a, "expected": b}}
    return {"name": name, "order": order, "status": "ok"}


def _catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def R_specializations(order: int = 12) -> list[dict]:
    """Check the known specializations of R(x, y, 1, z) coefficient by coefficient."""
    R = R_series(order, None)
    at = {}
    for xv in (0, 1):
        for yv in (0, 1):
            at[xv, yv] = R.specialize("x", xv).specialize("y", yv).univariate()

    def even_only(f):
        return [f(k // 2) if k % 2 == 0 else 0 for k in range(order + 1)]

    reports = [
        _compare("R(0,0,1,z) = C_n^2 at z^2n", at[0, 0],
                 even_only(lambda n: _catalan_number(n) ** 2)),
        _compare("R(1,1,1,z) = binom(n, n//2)^2", at[1, 1],
                 [comb(n, n // 2) ** 2 for n in range(order + 1)]),
        _compare("R(0,1,1,z) = 2 C_n binom(2n,n) - C_n^2 at z^2n", at[0, 1],
                 even_only(lambda n: 2 * _catalan_number(n) * comb(2 * n, n)
                           - _catalan_number(n) ** 2)),
        _compare("R(1,0,1,z) = C_n", at[1, 0],
                 [_catalan_number(n) for n in range(order + 1)]),
    ]
    midpoint = R.specialize("y", 0).rename("x", "y")
    h = h_series(order, "ballot")
    diff = midpoint.first_difference(h)
    reports.append({"name": "R(x,0,1,z) = H(x,z)", "order": order,
                    "status": "ok" if diff is None else "mismatch",
                    **({} if diff is None else {"first_mismatch": {"zdeg": diff[0],
                                                                   "monomial": dict(diff[1])}})})
    return sorted(reports, key=lambda r: r["name"])


def h_series(order: int = 12, method: str = "ballot") -> TS:
    """H(y, z): Dyck paths by semilength and midpoint height, by one of three routes."""
    if method == "ballot":
        return gf_catalog("H_DYCK", order)
    if method == "walk":
        return R_series(order, None).specialize("y", 0).rename("x", "y")
    if method == "diagonal":
        return _h_diagonal(order)
    if method == "ballot_uvz":
        return _h_from_b_uvz(order)
    raise ValueError(f"unknown method {method!r}")


def _h_diagonal(order: int) -> TS:
    """diag over z1 = z, z2 = w of C(z1^2)C(z2^2) / (1 - y z1 z2 C(z1^2)C(z2^2))."""
    c_z = catalan(order // 2).substitute_z(2, order=order)
    c_w = c_z.z_to_var("w", order)
    a = c_z * c_w
    yzw = TS.var("y", order, zdeg=1) * _aux("w", order)
    x = (yzw * a).truncate_var("w", order)
    total = TS.constant(1, order)
    p = TS.constant(1, order)
    for _ in range(order):
        p = (p * x).truncate_var("w", order)
        total = total + p
    return diagonal((a * total).truncate_var("w", order), "w")


def _h_from_b_uvz(order: int) -> TS:
    # ballot numbers from B(0, y, z), then squared coefficientwise
    b = b_uvz(order, cap=order).truncate_var("u", 0).rename("v", "y")
    cs = [{} for _ in range(order + 1)]
    for n, m, c in b.terms():
        cs[n][m] = c * c
    return TS(cs, order)


def gouyou_beauchamps_counts(n_max: int, end: str = "x-axis") -> list[int]:
    """Uncoloured walks of each length ending on the x-axis, or anywhere."""
    w = WalkWeighting(colored=False)
    out = []
    for layer in walk_layers(n_max, w):
        out.append(sum(c for (i, j, k), c in layer.items() if end == "any" or j == 0))
    return out
