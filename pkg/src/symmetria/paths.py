"""Lattice path families, partitions and bargraphs, with exhaustive enumeration.

Every path family is described by a small state machine: a start state, the
legal moves out of each state, an acceptance test for the final state and a
weight per step.  Validation simulates the machine; enumeration is a
depth-first search that only follows moves from which an accepting
completion exists (completion counts are memoised, which also gives exact
counts before anything is materialised).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Sequence

DEFAULT_CAP = 10**8


class EnumerationLimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured object cap."""


class Step(str, enum.Enum):
    U = "U"
    D = "D"
    H = "H"
    H1 = "H1"
    H2 = "H2"
    NE = "NE"
    NW = "NW"
    SE = "SE"
    SW = "SW"
    E = "E"
    W = "W"
    N = "N"
    S = "S"
    NW_color1 = "NW_color1"
    NW_color2 = "NW_color2"
    SE_color1 = "SE_color1"
    SE_color2 = "SE_color2"

    def __str__(self) -> str:
        return self.value


STEP_ORDER = {s: i for i, s in enumerate(Step)}

# vertical displacement of the one-dimensional steps
RISE = {Step.U: 1, Step.D: -1, Step.H: 0, Step.H1: 0, Step.H2: 0}

VECTOR = {
    Step.NE: (1, 1), Step.NW: (-1, 1), Step.SE: (1, -1), Step.SW: (-1, -1),
    Step.E: (1, 0), Step.W: (-1, 0), Step.N: (0, 1), Step.S: (0, -1),
    Step.NW_color1: (-1, 1), Step.NW_color2: (-1, 1),
    Step.SE_color1: (1, -1), Step.SE_color2: (1, -1),
}

_TAGS = sorted((s.value for s in Step), key=len, reverse=True)


def parse_steps(text: str | Iterable) -> tuple[Step, ...]:
    """Parse ``"UDDU"``, ``"H1 H2 U"`` or an iterable of tags into steps."""
    if not isinstance(text, str):
        return tuple(Step(t) if not isinstance(t, Step) else t for t in text)
    if any(ch.isspace() for ch in text.strip()):
        return tuple(Step(t) for t in text.split())
    out = []
    i = 0
    while i < len(text):
        for tag in _TAGS:
            if text.startswith(tag, i):
                out.append(Step(tag))
                i += len(tag)
                break
        else:
            raise ValueError(f"unknown step at {text[i:]!r}")
    return tuple(out)


def format_steps(steps: Sequence[Step]) -> str:
    if all(len(s.value) == 1 for s in steps):
        return "".join(s.value for s in steps)
    return " ".join(s.value for s in steps)


Move = tuple  # (Step, weight, new_state)


@dataclass(frozen=True)
class PathFamily:
    """A family of step sequences defined by a state machine.

    ``budget(size)`` converts a family size into the total step weight, or
    returns None when no word of that size exists.  ``size_of`` inverts it.
    """

    name: str
    params: tuple = ()
    alphabet: tuple = field(default=(), compare=False)
    start: Hashable = field(default=None, compare=False)
    moves: Callable[[Hashable], Sequence[Move]] = field(default=None, compare=False, repr=False)
    accept: Callable[[Hashable], bool] = field(default=None, compare=False, repr=False)
    budget: Callable[[int], int | None] = field(default=None, compare=False, repr=False)
    size_of: Callable[[int], int | None] = field(default=None, compare=False, repr=False)
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __str__(self) -> str:
        if self.params:
            return f"{self.name}({','.join(map(str, self.params))})"
        return self.name

    def completions(self, state: Hashable, remaining: int) -> int:
        """Number of accepted continuations from ``state`` using exactly ``remaining`` weight."""
        key = (state, remaining)
        memo = self._memo
        if key in memo:
            return memo[key]
        total = 1 if remaining == 0 and self.accept(state) else 0
        if remaining > 0:
            for _, w, nxt in self.moves(state):
                if w <= remaining:
                    total += self.completions(nxt, remaining - w)
        memo[key] = total
        return total

    def count(self, size: int) -> int:
        b = self.budget(size)
        if b is None:
            return 0
        return _deep(self.completions, self.start, b)

    def trace(self, steps: Sequence[Step]) -> list | None:
        """States visited by ``steps`` (start included), or None if a step is illegal."""
        state = self.start
        states = [state]
        for st in steps:
            for tag, _, nxt in self.moves(state):
                if tag is st:
                    state = nxt
                    break
            else:
                return None
            states.append(state)
        return states


def _deep(fn, state, remaining):
    # recursion depth equals the number of steps
    import sys

    limit = sys.getrecursionlimit()
    if remaining > limit // 4:
        sys.setrecursionlimit(max(limit, 4 * remaining + 1000))
    return fn(state, remaining)


def _weight_budget(size: int) -> int | None:
    return size if size >= 0 else None


def _semilength_budget(size: int) -> int | None:
    return 2 * size if size >= 0 else None


def _half(total: int) -> int | None:
    return total // 2 if total % 2 == 0 else None


def _ident(total: int) -> int:
    return total


def _height_family(name, steps, floor, params=(), start=0, end=0, weights=None,
                   forbid_after=None, semilength=False):
    """A one-dimensional family: state is (height, previous step)."""
    weights = weights or {}
    forbid_after = forbid_after or {}
    ordered = tuple(sorted(steps, key=STEP_ORDER.get))

    def moves(state):
        h, prev = state
        out = []
        banned = forbid_after.get(prev, ())
        for st in ordered:
            if st in banned:
                continue
            nh = h + RISE[st]
            if floor is not None and nh < floor:
                continue
            out.append((st, weights.get(st, 1), (nh, st)))
        return out

    return PathFamily(
        name=name, params=params, alphabet=ordered, start=(start, None), moves=moves,
        accept=lambda state: state[0] == end,
        budget=_semilength_budget if semilength else _weight_budget,
        size_of=_half if semilength else _ident,
    )


UD = (Step.U, Step.D)
UDH = (Step.U, Step.D, Step.H)
UDHH = (Step.U, Step.D, Step.H1, Step.H2)
UNEVEN = {Step.H1: 2, Step.D: 2}

DYCK = _height_family("Dyck", UD, 0, semilength=True)
GRAND_DYCK = _height_family("GrandDyck", UD, None, semilength=True)
MOTZKIN = _height_family("Motzkin", UDH, 0)
GRAND_MOTZKIN = _height_family("GrandMotzkin", UDH, None)
BICOLORED_MOTZKIN = _height_family("BicoloredMotzkin", UDHH, 0)
BICOLORED_GRAND_MOTZKIN = _height_family("BicoloredGrandMotzkin", UDHH, None)
PEAKLESS_MOTZKIN = _height_family("PeaklessMotzkin", UDH, 0, forbid_after={Step.U: (Step.D,)})
GRAND_PEAKLESS_MOTZKIN = _height_family("GrandPeaklessMotzkin", UDH, None,
                                        forbid_after={Step.U: (Step.D,)})
VALLEY_FREE_MOTZKIN = _height_family("ValleyFreeMotzkin", UDH, 0,
                                     forbid_after={Step.D: (Step.U,)})
UNEVEN_BICOLORED_MOTZKIN = _height_family("UnevenBicoloredMotzkin", UDHH, 0, weights=UNEVEN)
UNEVEN_BICOLORED_GRAND_MOTZKIN = _height_family("UnevenBicoloredGrandMotzkin", UDHH, None,
                                                weights=UNEVEN)

_BALLOT: dict = {}


def BallotPath(a: int, b: int) -> PathFamily:
    """U/D paths from height a to height b that never go below the x-axis."""
    if a < 0 or b < 0:
        raise ValueError("ballot path heights must be nonnegative")
    if (a, b) not in _BALLOT:
        _BALLOT[(a, b)] = _height_family("BallotPath", UD, 0, params=(a, b), start=a, end=b)
    return _BALLOT[(a, b)]


def _wq1_moves(state):
    x, y = state
    out = []
    for st in (Step.NE, Step.NW, Step.SE, Step.SW):
        dx, dy = VECTOR[st]
        if x + dx >= 0 and y + dy >= 0:
            out.append((st, 1, (x + dx, y + dy)))
    return out


def _wq2_moves(state):
    x, y = state
    out = []
    for st in (Step.NE, Step.NW, Step.SE, Step.SW):
        dx, dy = VECTOR[st]
        nx, ny = x + dx, y + dy
        if not (nx >= ny >= 0):
            continue
        if st is Step.SE and x == y:
            out.append((Step.SE_color1, 1, (nx, ny)))
            out.append((Step.SE_color2, 1, (nx, ny)))
        else:
            out.append((st, 1, (nx, ny)))
    return sorted(out, key=lambda m: STEP_ORDER[m[0]])


def _wq3_moves(state):
    x, y = state
    out = []
    for st in (Step.E, Step.W, Step.NW, Step.SE):
        dx, dy = VECTOR[st]
        nx, ny = x + dx, y + dy
        if nx < 0 or ny < 0:
            continue
        if st is Step.NW and y == 0:
            out.append((Step.NW_color1, 1, (nx, ny)))
            out.append((Step.NW_color2, 1, (nx, ny)))
        else:
            out.append((st, 1, (nx, ny)))
    return sorted(out, key=lambda m: STEP_ORDER[m[0]])


WQ1 = PathFamily("WQ1", (), (Step.NE, Step.NW, Step.SE, Step.SW), (0, 0), _wq1_moves,
                 lambda s: s[0] == s[1], _weight_budget, _ident)
WQ2 = PathFamily("WQ2", (), (Step.NE, Step.NW, Step.SE, Step.SW, Step.SE_color1, Step.SE_color2),
                 (0, 0), _wq2_moves, lambda s: s[0] == s[1], _weight_budget, _ident)
WQ3 = PathFamily("WQ3", (), (Step.NW, Step.SE, Step.E, Step.W, Step.NW_color1, Step.NW_color2),
                 (0, 0), _wq3_moves, lambda s: s[1] == 0, _weight_budget, _ident)

FAMILIES = {f.name: f for f in (
    DYCK, GRAND_DYCK, MOTZKIN, GRAND_MOTZKIN, BICOLORED_MOTZKIN, BICOLORED_GRAND_MOTZKIN,
    PEAKLESS_MOTZKIN, GRAND_PEAKLESS_MOTZKIN, VALLEY_FREE_MOTZKIN, UNEVEN_BICOLORED_MOTZKIN,
    UNEVEN_BICOLORED_GRAND_MOTZKIN, WQ1, WQ2, WQ3)}


def family(name: str) -> PathFamily:
    """Look up a family by name; ``BallotPath(a,b)`` is accepted too."""
    if name.startswith("BallotPath"):
        a, b = name[name.index("(") + 1:name.index(")")].split(",")
        return BallotPath(int(a), int(b))
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown path family {name!r}") from None


@dataclass(frozen=True)
class PathWord:
    family: PathFamily
    steps: tuple

    def __post_init__(self):
        if not isinstance(self.steps, tuple) or not all(isinstance(s, Step) for s in self.steps):
            object.__setattr__(self, "steps", parse_steps(self.steps))

    @classmethod
    def _trusted(cls, family: PathFamily, steps: tuple) -> "PathWord":
        # steps already parsed by the enumerator
        w = object.__new__(cls)
        object.__setattr__(w, "family", family)
        object.__setattr__(w, "steps", steps)
        return w

    def __str__(self) -> str:
        return format_steps(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def step_count(self) -> int:
        return len(self.steps)

    @property
    def weight(self) -> int:
        states = self.family.trace(self.steps)
        if states is None:
            raise ValueError(f"{self} is not a word of {self.family}")
        total = 0
        for st, state in zip(self.steps, states):
            total += next(w for tag, w, _ in self.family.moves(state) if tag is st)
        return total

    @property
    def size(self) -> int:
        s = self.family.size_of(self.weight)
        if s is None:
            raise ValueError(f"{self} has no integral size in {self.family}")
        return s

    def heights(self, start: int = 0) -> list[int]:
        """Heights of the vertices of a one-dimensional path."""
        if self.family.params and self.family.name == "BallotPath":
            start = self.family.params[0]
        cached = self.__dict__.get("_heights")
        if cached is None or cached[0] != start:
            cached = (start, list(itertools.accumulate((RISE[s] for s in self.steps), initial=start)))
            object.__setattr__(self, "_heights", cached)
        return list(cached[1])

    def points(self) -> list[tuple[int, int]]:
        """Vertices of a two-dimensional walk starting at the origin."""
        pts = [(0, 0)]
        for s in self.steps:
            dx, dy = VECTOR[s]
            x, y = pts[-1]
            pts.append((x + dx, y + dy))
        return pts


def word(fam: PathFamily | str, steps) -> PathWord:
    if isinstance(fam, str):
        fam = family(fam)
    return PathWord(fam, parse_steps(steps))


def validate(w: PathWord) -> bool:
    fam = w.family
    states = fam.trace(w.steps)
    if states is None or not fam.accept(states[-1]):
        return False
    return fam.size_of(w.weight) is not None


def count(fam: PathFamily, size: int) -> int:
    return fam.count(size)


def iter_words(fam: PathFamily, size: int) -> Iterator[PathWord]:
    """Lazily yield the words of ``fam`` of the given size in lexicographic step order."""
    b = fam.budget(size)
    if b is None or fam.count(size) == 0:
        return
    viable: dict = {}

    def options(state, remaining):
        key = (state, remaining)
        opts = viable.get(key)
        if opts is None:
            opts = viable[key] = [(tag, nxt, remaining - w) for tag, w, nxt in fam.moves(state)
                                  if w <= remaining and fam.completions(nxt, remaining - w)]
        return opts

    steps: list = []
    stack = [iter(options(fam.start, b))]
    if b == 0:
        yield PathWord._trusted(fam, ())
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if steps:
                steps.pop()
            continue
        tag, state, remaining = nxt
        steps.append(tag)
        if remaining == 0 and fam.accept(state):
            yield PathWord._trusted(fam, tuple(steps))
        stack.append(iter(options(state, remaining)))


def enumerate_words(fam: PathFamily | str, size: int, cap: int = DEFAULT_CAP) -> list[PathWord]:
    if isinstance(fam, str):
        fam = family(fam)
    if size < 0:
        raise ValueError("size must be >= 0")
    total = fam.count(size)
    if total > cap:
        raise EnumerationLimitError(f"{fam} size {size} has {total} objects (cap {cap})")
    return list(iter_words(fam, size))


def enumerate_ballot_paths(a: int, b: int, n: int, cap: int = DEFAULT_CAP) -> list[PathWord]:
    return enumerate_words(BallotPath(a, b), n, cap)


# -- partitions ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        p = tuple(self.parts)
        object.__setattr__(self, "parts", p)
        if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        return Partition(tuple(sum(1 for x in self.parts if x >= i) for i in range(1, self.first + 1)))

    @property
    def semiperimeter(self) -> int:
        return self.first + len(self.parts)

    @property
    def min_square(self) -> int:
        return max(self.first, len(self.parts))

    def fits(self, n: int) -> bool:
        return len(self.parts) <= n and self.first <= n

    def padded(self, n: int) -> tuple[int, ...]:
        if not self.fits(n):
            raise ValueError(f"{self} does not fit in a {n}x{n} square")
        return self.parts + (0,) * (n - len(self.parts))

    def durfee(self) -> int:
        return sum(1 for i, x in enumerate(self.parts, 1) if x >= i)


@dataclass(frozen=True)
class InSquare:
    n: int


@dataclass(frozen=True)
class BySemiperimeter:
    n: int


@dataclass(frozen=True)
class ByMinSquare:
    m: int


def _box_partitions(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of at most ``rows`` positive parts, each <= cols."""
    def rec(prefix, bound, left):
        yield tuple(prefix)
        if left == 0:
            return
        for x in range(1, bound + 1):
            prefix.append(x)
            yield from rec(prefix, x, left - 1)
            prefix.pop()
    yield from rec([], cols, rows)


def enumerate_partitions(mode) -> list[Partition]:
    if isinstance(mode, InSquare):
        if mode.n < 0:
            raise ValueError("n must be >= 0")
        out = [Partition(p) for p in _box_partitions(mode.n, mode.n)]
    elif isinstance(mode, BySemiperimeter):
        n = mode.n
        out = []
        # first part a, number of parts n - a
        for a in range(1, n):
            k = n - a
            for rest in _box_partitions(k - 1, a):
                if len(rest) == k - 1:
                    out.append(Partition((a,) + rest))
        if n == 0:
            out.append(Partition(()))
    elif isinstance(mode, ByMinSquare):
        m = mode.m
        out = [Partition(p) for p in _box_partitions(m, m)
               if max(p[0] if p else 0, len(p)) == m]
    else:
        raise TypeError(f"unknown partition mode {mode!r}")
    return sorted(out)


# -- bargraphs ----------------------------------------------------------------


@dataclass(frozen=True)
class Bargraph:
    columns: tuple

    def __post_init__(self):
        c = tuple(self.columns)
        object.__setattr__(self, "columns", c)
        if not c or any(a < 1 for a in c):
            raise ValueError(f"not a bargraph: {c}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.columns)) + ")"

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return max(self.columns)

    @property
    def semiperimeter(self) -> int:
        return self.width + self.height

    def boundary(self) -> tuple[str, ...]:
        """Upper boundary as N/E/S letters from the origin back to the x-axis."""
        out = []
        h = 0
        for a in self.columns:
            out.extend("N" * (a - h) if a > h else "S" * (h - a))
            out.append("E")
            h = a
        out.extend("S" * h)
        return tuple(out)

    def is_centered_unimodal(self) -> bool:
        a = self.columns
        k = len(a)
        lo, hi = (k + 1) // 2, (k + 2) // 2
        left, right = a[:lo], a[hi - 1:]
        return (all(left[i] <= left[i + 1] for i in range(len(left) - 1))
                and all(right[i] >= right[i + 1] for i in range(len(right) - 1)))


def _monotone(length: int, top: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations_with_replacement(range(1, top + 1), length)


def enumerate_unimodal_centered_bargraphs(sp: int) -> list[Bargraph]:
    if sp < 2:
        raise ValueError("semiperimeter must be >= 2")
    out = []
    for k in range(1, sp):
        m = sp - k
        if k % 2:
            j = k // 2
            for left in _monotone(j, m):
                for right in _monotone(j, m):
                    out.append(Bargraph(left + (m,) + tuple(reversed(right))))
        else:
            j = k // 2
            for left in _monotone(j, m):
                for right in _monotone(j, m):
                    if max(left[-1], right[-1]) == m:
                        out.append(Bargraph(left + tuple(reversed(right))))
    return sorted(out, key=lambda b: b.columns)
