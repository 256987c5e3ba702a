"""Symmetry statistics on grand Dyck paths, partitions and bargraphs."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .paths import (
    DYCK, GRAND_DYCK, Bargraph, Partition, PathWord, Step,
)


class WrongFamilyError(TypeError):
    pass


_DYCKISH = (DYCK, GRAND_DYCK)


def _check(P: PathWord, allowed=_DYCKISH) -> list[int]:
    if P.family not in allowed:
        names = "/".join(f.name for f in allowed)
        raise WrongFamilyError(f"expected a {names} path, got {P.family}")
    if len(P.steps) % 2:
        raise ValueError("path has odd length")
    return P.heights()


def ds_path(P: PathWord) -> int:
    """Number of positions i <= n whose step mirrors step 2n+1-i about x = n."""
    h = _check(P)
    n = len(P.steps) // 2
    # segment i spans (i-1, h[i-1])..(i, h[i]); its partner mirrored spans
    # (i-1, h[2n+1-i])..(i, h[2n-i])
    return sum(1 for i in range(1, n + 1)
               if h[i - 1] == h[2 * n + 1 - i] and h[i] == h[2 * n - i])


def sv(P: PathWord) -> int:
    """Symmetric vertices in the first half, the midpoint excluded."""
    h = _check(P)
    n = len(P.steps) // 2
    return sum(1 for j in range(n) if h[j] == h[2 * n - j])


def ret(P: PathWord) -> int:
    h = _check(P)
    return sum(1 for y in h[1:] if y == 0)


def pho(P: PathWord) -> int:
    """Peaks UD whose apex is at height 1."""
    h = _check(P)
    s = P.steps
    return sum(1 for i in range(len(s) - 1)
               if s[i] is Step.U and s[i + 1] is Step.D and h[i + 1] == 1)


def hm(P: PathWord) -> int:
    h = _check(P)
    return h[len(P.steps) // 2]


def ds_square(lam: Partition, n: int) -> int:
    t = lam.padded(n)
    tc = lam.conjugate().padded(n)
    return sum(1 for a, b in zip(t, tc) if a == b)


def ds_partition(lam: Partition) -> int:
    conj = lam.conjugate().parts
    return sum(1 for a, b in zip(lam.parts, conj) if a == b)


def durfee(lam: Partition) -> int:
    return lam.durfee()


def hooks(lam: Partition) -> list[tuple[int, int]]:
    """(arm, leg) of each diagonal hook, outermost first."""
    conj = lam.conjugate().parts
    return [(lam.parts[i] - i - 1, conj[i] - i - 1) for i in range(lam.durfee())]


def dsh(lam: Partition) -> int:
    return sum(1 for a, l in hooks(lam) if a == l)


def sp_partition(lam: Partition) -> int:
    return lam.semiperimeter


def ds_bargraph(B: Bargraph) -> int:
    a = B.columns
    k = len(a)
    return sum(1 for i in range(k // 2) if a[i] == a[k - 1 - i])


def sp_bargraph(B: Bargraph) -> int:
    return B.semiperimeter


# name -> (object kind, function taking (object, size))
def _grand_dyck_height_blocks(n: int, chunk: int = 1 << 20):
    """Height matrices (one row per word) covering every grand Dyck word of semilength n."""
    length = 2 * n
    masks = np.arange(1 << length, dtype=np.uint32)
    pop = np.zeros_like(masks)
    for b in range(length):
        pop += (masks >> b) & 1
    masks = masks[pop == n]
    shifts = np.arange(length, dtype=np.uint32)
    for lo in range(0, len(masks), chunk):
        bits = ((masks[lo:lo + chunk, None] >> shifts) & 1).astype(np.int8)
        h = np.zeros((bits.shape[0], length + 1), dtype=np.int8)
        np.cumsum(2 * bits - 1, axis=1, out=h[:, 1:])
        yield h


def grand_dyck_histograms(n: int) -> dict[str, dict[int, int]]:
    """ds and sv histograms over all C(2n, n) grand Dyck words, by direct height comparison.

    Same definitions as ``ds_path`` and ``sv`` applied to whole arrays of
    words; meant for exhaustive checks at sizes where per-object code is slow.
    """
    if not 0 <= n <= 13:
        raise ValueError("n must be in 0..13")
    ds_counts = np.zeros(n + 1, dtype=np.int64)
    sv_counts = np.zeros(n + 1, dtype=np.int64)
    m = 2 * n
    for h in _grand_dyck_height_blocks(n):
        # vertex j in the first half against vertex 2n - j
        outer = h[:, 0:n] == h[:, m:n:-1]
        inner = h[:, 1:n + 1] == h[:, m - 1:n - 1:-1]
        ds_counts += np.bincount((outer & inner).sum(axis=1), minlength=n + 1)
        sv_counts += np.bincount(outer.sum(axis=1), minlength=n + 1)
    return {name: {k: int(c) for k, c in enumerate(arr) if c}
            for name, arr in (("ds", ds_counts), ("sv", sv_counts))}


STATISTICS: dict[str, tuple[str, Callable]] = {
    "ds_path": ("path", lambda P, n: ds_path(P)),
    "sv": ("path", lambda P, n: sv(P)),
    "ret": ("path", lambda P, n: ret(P)),
    "pho": ("path", lambda P, n: pho(P)),
    "hm": ("path", lambda P, n: hm(P)),
    "ds_square": ("partition", lambda lam, n: ds_square(lam, n)),
    "ds_partition": ("partition", lambda lam, n: ds_partition(lam)),
    "dsh": ("partition", lambda lam, n: dsh(lam)),
    "sp_partition": ("partition", lambda lam, n: sp_partition(lam)),
    "durfee": ("partition", lambda lam, n: durfee(lam)),
    "ds_bargraph": ("bargraph", lambda B, n: ds_bargraph(B)),
    "sp_bargraph": ("bargraph", lambda B, n: sp_bargraph(B)),
}


def statistic(name: str) -> Callable:
    try:
        return STATISTICS[name][1]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}") from None
