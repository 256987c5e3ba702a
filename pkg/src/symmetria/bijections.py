"""Explicit bijections between paths, partitions and walks, with inverses."""

from __future__ import annotations

from .paths import (
    BICOLORED_GRAND_MOTZKIN, DYCK, GRAND_DYCK, GRAND_PEAKLESS_MOTZKIN, PEAKLESS_MOTZKIN,
    UNEVEN_BICOLORED_GRAND_MOTZKIN, UNEVEN_BICOLORED_MOTZKIN, VALLEY_FREE_MOTZKIN, WQ1, WQ2,
    WQ3, Partition, PathWord, Step, validate,
)
from .statistics import WrongFamilyError, hooks

U, D, H, H1, H2 = Step.U, Step.D, Step.H, Step.H1, Step.H2
FLIP = {U: D, D: U}


class NotInDomainError(ValueError):
    pass


def _require(w: PathWord, *families) -> None:
    if w.family not in families:
        raise WrongFamilyError(f"expected {'/'.join(map(str, families))}, got {w.family}")
    if not validate(w):
        raise NotInDomainError(f"{w} is not a valid {w.family} word")


def halves(P: PathWord) -> tuple[tuple[Step, ...], tuple[Step, ...]]:
    """Left half and the mirror image of the right half, both read left to right."""
    s = P.steps
    n = len(s) // 2
    left = s[:n]
    right_mirrored = tuple(FLIP[x] for x in reversed(s[n:]))
    return left, right_mirrored


def _from_halves(left, right_mirrored) -> tuple[Step, ...]:
    return tuple(left) + tuple(FLIP[x] for x in reversed(right_mirrored))


# -- grand Dyck <-> bicolored grand Motzkin ------------------------------------

_PHI = {(U, D): U, (D, U): D, (D, D): H1, (U, U): H2}
_PHI_INV = {v: k for k, v in _PHI.items()}


def phi(P: PathWord) -> PathWord:
    _require(P, GRAND_DYCK, DYCK)
    left, right = halves(P)
    return PathWord(BICOLORED_GRAND_MOTZKIN, tuple(_PHI[lr] for lr in zip(left, right)))


def phi_inv(M: PathWord) -> PathWord:
    _require(M, BICOLORED_GRAND_MOTZKIN)
    pairs = [_PHI_INV[x] for x in M.steps]
    return PathWord(GRAND_DYCK, _from_halves([p[0] for p in pairs], [p[1] for p in pairs]))


def height_zero_counts(M: PathWord) -> tuple[int, int]:
    """(h1^0, h2^0): horizontal steps of each colour lying on the x-axis."""
    h = M.heights()
    h1 = sum(1 for i, x in enumerate(M.steps) if x is H1 and h[i] == 0)
    h2 = sum(1 for i, x in enumerate(M.steps) if x is H2 and h[i] == 0)
    return h1, h2


def axis_vertices(M: PathWord) -> int:
    return sum(1 for y in M.heights() if y == 0)


_DOUBLE = {U: (U, U), D: (D, D), H1: (U, D), H2: (D, U)}
_UNDOUBLE = {v: k for k, v in _DOUBLE.items()}


def sv_to_ret(P: PathWord) -> PathWord:
    """Bijection G_n -> G_n carrying symmetric vertices to returns."""
    M = phi(P)
    return PathWord(GRAND_DYCK, tuple(x for st in M.steps for x in _DOUBLE[st]))


def sv_to_ret_inv(Q: PathWord) -> PathWord:
    _require(Q, GRAND_DYCK)
    s = Q.steps
    M = PathWord(BICOLORED_GRAND_MOTZKIN, tuple(_UNDOUBLE[s[i], s[i + 1]] for i in range(0, len(s), 2)))
    return phi_inv(M)


# -- partitions in a square <-> grand Dyck -------------------------------------


def partial_n(lam: Partition, n: int) -> PathWord:
    t = lam.padded(n)
    steps: list[Step] = []
    prev = 0
    for i in range(n - 1, -1, -1):
        steps += [D] * (t[i] - prev) + [U]
        prev = t[i]
    steps += [D] * (n - prev)
    return PathWord(GRAND_DYCK, tuple(steps))


def partial_n_inv(P: PathWord) -> Partition:
    _require(P, GRAND_DYCK, DYCK)
    parts = []
    d = 0
    for st in P.steps:
        if st is D:
            d += 1
        else:
            parts.append(d)
    return Partition(tuple(x for x in reversed(parts) if x))


def psi(lam: Partition, n: int) -> PathWord:
    """Bijection from partitions in an n x n square to G_n carrying dsh to pho.

    The empty partition maps to D^n U^n.
    """
    if not lam.fits(n):
        raise ValueError(f"{lam} does not fit in a {n}x{n} square")
    hk = hooks(lam)
    if not hk:
        return PathWord(GRAND_DYCK, (D,) * n + (U,) * n)
    arms = [a for a, _ in hk]
    legs = [l for _, l in hk]
    delta = len(hk)
    steps = [D] * arms[-1] + [U] * (legs[-1] + 1)
    for i in range(delta - 2, -1, -1):
        steps += [D] * (arms[i] - arms[i + 1]) + [U] * (legs[i] - legs[i + 1])
    steps += [D] * (n - arms[0]) + [U] * (n - 1 - legs[0])
    return PathWord(GRAND_DYCK, tuple(steps))


def psi_inv(P: PathWord) -> Partition:
    _require(P, GRAND_DYCK, DYCK)
    n = len(P.steps) // 2
    s = P.steps
    if s == (D,) * n + (U,) * n:
        return Partition(())
    runs = []
    for st in s:
        if runs and runs[-1][0] is st:
            runs[-1][1] += 1
        else:
            runs.append([st, 1])
    if runs[0][0] is U:
        runs.insert(0, [D, 0])
    if runs[-1][0] is D:
        runs.append([U, 0])
    # runs alternate D,U,D,U,...: (D^{c_0} U^{d_0}) ... (D^{c_delta} U^{d_delta})
    cs = [runs[i][1] for i in range(0, len(runs), 2)]
    ds = [runs[i][1] for i in range(1, len(runs), 2)]
    delta = len(cs) - 1
    arms = [0] * delta
    legs = [0] * delta
    arms[delta - 1] = cs[0]
    legs[delta - 1] = ds[0] - 1
    for j in range(1, delta):
        i = delta - 1 - j
        arms[i] = arms[i + 1] + cs[j]
        legs[i] = legs[i + 1] + ds[j]
    rows = [0] * (max(legs) + delta + 1)
    for i in range(delta):
        rows[i] += arms[i] + 1
        for r in range(i + 1, i + 1 + legs[i]):
            rows[r] += 1
    return Partition(tuple(r for r in rows if r))


# -- peakless / valley-free / uneven bicolored Motzkin -------------------------


def _runs_adjust(steps, grow_after: Step, shrink_after: Step):
    """Lengthen H-runs between grow_after..other and shorten those between shrink_after..other."""
    out: list[Step] = []
    i = 0
    n = len(steps)
    prev = None
    adjacent = False
    while i < n:
        if steps[i] is H:
            j = i
            while j < n and steps[j] is H:
                j += 1
            run = j - i
            nxt = steps[j] if j < n else None
            if prev is grow_after and nxt is shrink_after:
                run += 1
            elif prev is shrink_after and nxt is grow_after:
                run -= 1
            out += [H] * run
            i = j
            adjacent = False
        else:
            if adjacent and prev is grow_after and steps[i] is shrink_after:
                out.append(H)
            elif adjacent and prev is shrink_after and steps[i] is grow_after:
                raise NotInDomainError("forbidden factor in input")
            out.append(steps[i])
            prev = steps[i]
            adjacent = True
            i += 1
    return out


def mu(M: PathWord) -> PathWord:
    """Peakless Motzkin path of length n+1 -> valley-free Motzkin path of length n."""
    _require(M, PEAKLESS_MOTZKIN)
    if not M.steps:
        raise NotInDomainError("mu is defined on nonempty paths")
    if all(x is H for x in M.steps):
        return PathWord(VALLEY_FREE_MOTZKIN, M.steps[1:])
    out = _runs_adjust(M.steps, D, U)
    return PathWord(VALLEY_FREE_MOTZKIN, tuple(out))


def mu_inv(V: PathWord) -> PathWord:
    _require(V, VALLEY_FREE_MOTZKIN)
    if all(x is H for x in V.steps):
        return PathWord(PEAKLESS_MOTZKIN, V.steps + (H,))
    out = _runs_adjust(V.steps, U, D)
    return PathWord(PEAKLESS_MOTZKIN, tuple(out))


def _matching_up(steps, heights, d_index: int) -> int:
    """Index of the U step matched with the D step at d_index."""
    level = heights[d_index + 1]
    for j in range(d_index - 1, -1, -1):
        if steps[j] is U and heights[j] == level:
            return j
    raise NotInDomainError("unmatched D step")


def theta(V: PathWord) -> PathWord:
    """Valley-free Motzkin path of length n -> uneven bicolored Motzkin path of size n."""
    _require(V, VALLEY_FREE_MOTZKIN)
    s = list(V.steps)
    h = V.heights()
    drop = set()
    to_h1 = set()
    for i, st in enumerate(s):
        if st is not D:
            continue
        if i + 1 < len(s) and s[i + 1] is H:
            drop.add(i + 1)
        else:
            to_h1.add(_matching_up(s, h, i))
            drop.add(i)
    out = []
    for i, st in enumerate(s):
        if i in drop:
            continue
        if i in to_h1:
            out.append(H1)
        elif st is H:
            out.append(H2)
        else:
            out.append(st)
    return PathWord(UNEVEN_BICOLORED_MOTZKIN, tuple(out))


def theta_inv(B: PathWord) -> PathWord:
    _require(B, UNEVEN_BICOLORED_MOTZKIN)
    mid: list[Step] = []
    for st in B.steps:
        if st is H2:
            mid.append(H)
        elif st is D:
            mid += [D, H]
        else:
            mid.append(st)
    h = [0]
    for st in mid:
        h.append(h[-1] + (1 if st is U else -1 if st is D else 0))
    inserts: dict[int, int] = {}
    for p, st in enumerate(mid):
        if st is not H1:
            continue
        level = h[p]
        q = next((q for q in range(p + 1, len(mid)) if mid[q] is D and h[q] == level),
                 len(mid))
        inserts[q] = inserts.get(q, 0) + 1
    out: list[Step] = []
    for i in range(len(mid) + 1):
        out += [D] * inserts.get(i, 0)
        if i < len(mid):
            out.append(U if mid[i] is H1 else mid[i])
    return PathWord(VALLEY_FREE_MOTZKIN, tuple(out))


def _reflect(steps):
    return tuple(FLIP.get(x, x) for x in steps)


def _split_grand(steps):
    """Split at returns into blocks strictly above, and maximal stretches not above, the axis."""
    blocks = []
    h = 0
    cur: list[Step] = []
    above = False
    for st in steps:
        if h == 0 and st is U:
            if cur:
                blocks.append(("below", tuple(cur)))
            cur = [st]
            above = True
        else:
            cur.append(st)
        h += 1 if st is U else -1 if st is D else 0
        if above and h == 0:
            blocks.append(("above", tuple(cur)))
            cur = []
            above = False
    if cur:
        blocks.append(("below", tuple(cur)))
    return blocks


def big_theta(M: PathWord) -> PathWord:
    """Peakless grand Motzkin path of length n -> uneven bicolored grand Motzkin path of size n."""
    _require(M, GRAND_PEAKLESS_MOTZKIN)
    out: list[Step] = []
    for kind, blk in _split_grand(M.steps):
        if kind == "above":
            inner = blk[1:-1]
            if not inner:
                raise NotInDomainError("empty block above the axis")
            image = theta(mu(PathWord(PEAKLESS_MOTZKIN, inner)))
            out += [U] + list(image.steps) + [D]
        else:
            image = theta(PathWord(VALLEY_FREE_MOTZKIN, _reflect(blk)))
            out += _reflect(image.steps)
    return PathWord(UNEVEN_BICOLORED_GRAND_MOTZKIN, tuple(out))


def big_theta_inv(B: PathWord) -> PathWord:
    _require(B, UNEVEN_BICOLORED_GRAND_MOTZKIN)
    out: list[Step] = []
    for kind, blk in _split_grand(B.steps):
        if kind == "above":
            inner = PathWord(UNEVEN_BICOLORED_MOTZKIN, blk[1:-1])
            image = mu_inv(theta_inv(inner))
            out += [U] + list(image.steps) + [D]
        else:
            image = theta_inv(PathWord(UNEVEN_BICOLORED_MOTZKIN, _reflect(blk)))
            out += _reflect(image.steps)
    return PathWord(GRAND_PEAKLESS_MOTZKIN, tuple(out))


# -- Dyck paths <-> quarter-plane walks ----------------------------------------

_TO_WQ1 = {(U, U): Step.NE, (U, D): Step.NW, (D, U): Step.SE, (D, D): Step.SW}
_FROM_WQ1 = {v: k for k, v in _TO_WQ1.items()}
_SWAP = {Step.NE: Step.NE, Step.SW: Step.SW, Step.NW: Step.SE, Step.SE: Step.NW}


def dyck_to_wq1(P: PathWord) -> PathWord:
    """Pairs the left half with the mirrored right half; y tracks the left half."""
    _require(P, DYCK)
    left, right = halves(P)
    return PathWord(WQ1, tuple(_TO_WQ1[lr] for lr in zip(left, right)))


def wq1_to_dyck(W: PathWord) -> PathWord:
    _require(W, WQ1)
    pairs = [_FROM_WQ1[x] for x in W.steps]
    return PathWord(DYCK, _from_halves([p[0] for p in pairs], [p[1] for p in pairs]))


def wq1_fold_wq2(W: PathWord) -> PathWord:
    """Fold along y = x; the colour of an SE step leaving the diagonal records the side."""
    _require(W, WQ1)
    out = []
    for st, (x, y) in zip(W.steps, W.points()):
        above = y > x
        if x == y and st in (Step.SE, Step.NW):
            out.append(Step.SE_color1 if st is Step.SE else Step.SE_color2)
        elif above:
            out.append(_SWAP[st])
        else:
            out.append(st)
    return PathWord(WQ2, tuple(out))


def wq2_unfold_wq1(W: PathWord) -> PathWord:
    _require(W, WQ2)
    out = []
    above = False
    for st, (x, y) in zip(W.steps, W.points()):
        if x == y:
            above = st is Step.SE_color2
            out.append(Step.NW if above else (Step.SE if st is Step.SE_color1 else st))
        else:
            out.append(_SWAP[st] if above else st)
    return PathWord(WQ1, tuple(out))


_SHEAR = {Step.NE: Step.E, Step.SW: Step.W, Step.NW: Step.SE, Step.SE: Step.NW,
          Step.SE_color1: Step.NW_color1, Step.SE_color2: Step.NW_color2}
_UNSHEAR = {v: k for k, v in _SHEAR.items()}


def wq2_shear_wq3(W: PathWord) -> PathWord:
    """Apply (x, y) -> (y, (x - y)/2): the diagonal becomes the x-axis."""
    _require(W, WQ2)
    return PathWord(WQ3, tuple(_SHEAR[x] for x in W.steps))


def wq3_unshear_wq2(W: PathWord) -> PathWord:
    _require(W, WQ3)
    return PathWord(WQ2, tuple(_UNSHEAR[x] for x in W.steps))


def dyck_to_wq3(P: PathWord) -> PathWord:
    return wq2_shear_wq3(wq1_fold_wq2(dyck_to_wq1(P)))


def wq3_to_dyck(W: PathWord) -> PathWord:
    return wq1_to_dyck(wq2_unfold_wq1(wq3_unshear_wq2(W)))


def axis_steps(W: PathWord) -> int:
    """Steps of a WQ3 walk lying entirely on the x-axis."""
    pts = W.points()
    return sum(1 for i in range(len(W.steps)) if pts[i][1] == 0 and pts[i + 1][1] == 0)


def diagonal_steps(W: PathWord) -> int:
    pts = W.points()
    return sum(1 for i in range(len(W.steps))
               if pts[i][0] == pts[i][1] and pts[i + 1][0] == pts[i + 1][1])


def axis_vertices_before_end(W: PathWord) -> int:
    return sum(1 for x, y in W.points()[:-1] if y == 0)


BIJECTIONS = {
    "phi": phi, "phi_inv": phi_inv, "sv_to_ret": sv_to_ret, "sv_to_ret_inv": sv_to_ret_inv,
    "partial_n": partial_n, "partial_n_inv": partial_n_inv, "psi": psi, "psi_inv": psi_inv,
    "mu": mu, "mu_inv": mu_inv, "theta": theta, "theta_inv": theta_inv,
    "big_theta": big_theta, "big_theta_inv": big_theta_inv,
    "dyck_to_wq1": dyck_to_wq1, "wq1_fold_wq2": wq1_fold_wq2, "wq2_shear_wq3": wq2_shear_wq3,
    "dyck_to_wq3": dyck_to_wq3, "wq3_to_dyck": wq3_to_dyck,
}
