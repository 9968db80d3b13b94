"""Tilings (dissections) of a convex n-gon by non-crossing diagonals.

Vertices are labelled 1..n clockwise.  A tiling is stored as its sorted
tuple of diagonals ``(i, j)`` with ``i < j``; that tuple is also the
canonical key used for ordering and set semantics.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .partitions import INVALID, MaybePartition, Partition, minus

__all__ = [
    "Tiling",
    "Census",
    "diagonals_of",
    "crosses",
    "iter_dissections",
    "enumerate_tilings",
    "enumerate_tilings_naive",
    "shape_of",
    "ff_of",
    "flip_neighbors",
    "flip_classes",
    "census",
    "shape_table_dp",
    "count_shape_dp",
    "shape_table_enum",
    "parse_tiling",
]

Diagonal = tuple[int, int]


def diagonals_of(n: int) -> list[Diagonal]:
    """All diagonals of the n-gon in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1) if (i, j) != (1, n)]


def crosses(d: Diagonal, e: Diagonal) -> bool:
    (a, b), (c, dd) = sorted((d, e))
    return a < c < b < dd


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got n={n}")


@dataclass(frozen=True, order=True)
class Tiling:
    n: int
    diagonals: tuple[Diagonal, ...] = ()
    _tiles: Optional[tuple[tuple[int, ...], ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        _check_n(self.n)
        diags = tuple(sorted((min(d), max(d)) for d in self.diagonals))
        object.__setattr__(self, "diagonals", diags)
        if len(set(diags)) != len(diags):
            raise ValueError("repeated diagonal")
        for i, j in diags:
            if not (1 <= i and j <= self.n and j - i >= 2 and (i, j) != (1, self.n)):
                raise ValueError(f"({i},{j}) is not a diagonal of the {self.n}-gon")
        for d, e in combinations(diags, 2):
            if crosses(d, e):
                raise ValueError(f"diagonals {d} and {e} cross")

    @classmethod
    def _trusted(cls, n: int, diagonals: tuple[Diagonal, ...], tiles=None) -> Tiling:
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "diagonals", diagonals)
        object.__setattr__(obj, "_tiles", tiles)
        return obj

    def __hash__(self):
        return hash((self.n, self.diagonals))

    def __str__(self) -> str:
        return f"n={self.n};" + ",".join(f"[{i},{j}]" for i, j in self.diagonals)

    @cached_property
    def tiles(self) -> tuple[tuple[int, ...], ...]:
        """Tiles as sorted vertex tuples, one per diagonal plus the one on edge (1, n).

        Every tile's smallest and largest vertex span either a diagonal or the
        edge (1, n); the tile is recovered by walking from the small end towards
        the large end, always jumping as far as a chord allows.
        """
        if self._tiles is not None:
            return self._tiles
        n = self.n
        nbrs: dict[int, list[int]] = {v: [v + 1] for v in range(1, n)}
        for i, j in self.diagonals:
            nbrs[i].append(j)
        out = []
        for i, j in ((1, n),) + self.diagonals:
            pts = [i]
            cur = i
            while cur != j:
                lim = j - 1 if cur == i else j
                cur = max(w for w in nbrs[cur] if w <= lim)
                pts.append(cur)
            out.append(tuple(pts))
        return tuple(sorted(out))

    @cached_property
    def _sides(self) -> dict[Diagonal, tuple[int, int]]:
        """Each diagonal mapped to the indices of the two tiles it separates."""
        inner: dict[Diagonal, int] = {}
        outer: dict[Diagonal, int] = {}
        for k, pts in enumerate(self.tiles):
            inner[(pts[0], pts[-1])] = k
            for a, b in zip(pts, pts[1:]):
                if b - a >= 2:
                    outer[(a, b)] = k
        return {d: (inner[d], outer[d]) for d in self.diagonals}

    @property
    def dim(self) -> int:
        return self.n - 3 - len(self.diagonals)


def shape_of(t: Tiling) -> Partition:
    """Part ``k - 2`` for every k-gonal tile."""
    return Partition(len(pts) - 2 for pts in t.tiles)


def ff_of(t: Tiling) -> tuple[Partition, Partition]:
    """(ff⁺, ff): triangle counts of the maximal triangulated regions, and that minus a column."""
    tri = [k for k, pts in enumerate(t.tiles) if len(pts) == 3]
    if not tri:
        return Partition(), Partition()
    parent = {k: k for k in tri}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for a, b in t._sides.values():
        if a in parent and b in parent:
            parent[find(a)] = find(b)
    ffp = Partition(Counter(find(k) for k in tri).values())
    return ffp, minus(ffp)


def flip_neighbors(t: Tiling) -> list[Tiling]:
    """Tilings one flip away: swap a diagonal shared by two triangles for the other one."""
    out = []
    tiles = t.tiles
    for d, (a, b) in t._sides.items():
        if len(tiles[a]) == 3 and len(tiles[b]) == 3:
            (k,) = set(tiles[a]) - set(d)
            (l,) = set(tiles[b]) - set(d)
            new = tuple(sorted([e for e in t.diagonals if e != d] + [(min(k, l), max(k, l))]))
            out.append(Tiling._trusted(t.n, new))
    out.sort()
    return out


def iter_dissections(n: int) -> Iterator[tuple[list[Diagonal], list[tuple[int, ...]]]]:
    """Yield ``(diagonals, tiles)`` for every tiling of the n-gon exactly once.

    The tile on a pending base edge ``(a, b)`` is picked by choosing which of
    the vertices strictly between ``a`` and ``b`` it uses; every gap of two or
    more between consecutive chosen vertices becomes a diagonal with a new
    pending sub-polygon behind it.  Order is not lexicographic; the lists are
    reused between yields, so copy them if kept.
    """
    _check_n(n)
    diags: list[Diagonal] = []
    tiles: list[tuple[int, ...]] = []

    def walk(pending: list[Diagonal]):
        if not pending:
            yield diags, tiles
            return
        a, b = pending[-1]
        rest = pending[:-1]
        inner = range(a + 1, b)
        for k in range(1, b - a):
            for mids in combinations(inner, k):
                pts = (a,) + mids + (b,)
                subs = [(x, y) for x, y in zip(pts, pts[1:]) if y - x >= 2]
                diags.extend(subs)
                tiles.append(pts)
                yield from walk(rest + subs)
                tiles.pop()
                del diags[len(diags) - len(subs):]

    yield from walk([(1, n)])


def enumerate_tilings(n: int, shape_filter: Optional[Partition] = None) -> list[Tiling]:
    """Every tiling of the n-gon, sorted by diagonal list; optionally only one shape."""
    out = []
    for diags, tiles in iter_dissections(n):
        if shape_filter is not None:
            if Partition(len(p) - 2 for p in tiles) != shape_filter:
                continue
        out.append(Tiling._trusted(n, tuple(sorted(diags)), tuple(sorted(tiles))))
    out.sort()
    return out


def enumerate_tilings_naive(n: int) -> list[Tiling]:
    """Subset filter over all diagonal sets; slow, used only to cross-check small n."""
    _check_n(n)
    diags = diagonals_of(n)
    out = []
    for k in range(0, max(n - 3, 0) + 1):
        for subset in combinations(diags, k):
            if all(not crosses(d, e) for d, e in combinations(subset, 2)):
                out.append(Tiling._trusted(n, subset))
    out.sort()
    return out


def parse_tiling(text: str) -> Tiling:
    """Parse the text form ``"n=6;[1,3],[3,6]"``."""
    head, _, body = text.strip().partition(";")
    if not head.startswith("n="):
        raise ValueError(f"bad tiling {text!r}")
    n = int(head[2:])
    pairs = re.findall(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]", body)
    return Tiling(n, tuple((int(a), int(b)) for a, b in pairs))


def _classes_of(members: Iterable[Tiling]) -> list[list[Tiling]]:
    pool = set(members)
    seen: set[Tiling] = set()
    classes = []
    for start in sorted(pool):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            for nb in flip_neighbors(queue.popleft()):
                if nb not in seen:
                    seen.add(nb)
                    comp.append(nb)
                    queue.append(nb)
        comp.sort()
        classes.append(comp)
    classes.sort(key=lambda c: c[0])
    return classes


def flip_classes(n: int, lam: Partition) -> list[list[Tiling]]:
    """Flip-equivalence classes of the tilings of shape ``lam``, each sorted, ordered by first member."""
    if Partition(lam).weight != n - 2:
        raise ValueError(f"shape {lam} does not have weight n-2 = {n - 2}")
    return _classes_of(enumerate_tilings(n, Partition(lam)))


@dataclass
class Census:
    """Counts of tilings and flip classes by shape and by ff-fiber."""

    n: int
    a: dict[Partition, int]
    ae: dict[Partition, int]
    a_fiber: dict[tuple[Partition, Partition], int]
    ae_fiber: dict[tuple[Partition, Partition], int]

    @property
    def total(self) -> int:
        return sum(self.a.values())


def census(n: int, shapes: Optional[Iterable[Partition]] = None) -> Census:
    """Full census of the n-gon by enumeration and flip-class search.

    Classes are found per shape; ``ff`` is read off each class's first member
    since it is constant on classes.
    """
    _check_n(n)
    by_shape: dict[Partition, list[Tiling]] = {}
    for t in enumerate_tilings(n):
        by_shape.setdefault(shape_of(t), []).append(t)
    if shapes is not None:
        wanted = {Partition(s) for s in shapes}
        by_shape = {k: v for k, v in by_shape.items() if k in wanted}
    a, ae, a_fib, ae_fib = {}, {}, {}, {}
    for lam in sorted(by_shape, reverse=True):
        members = by_shape[lam]
        a[lam] = len(members)
        for t in members:
            key = (lam, ff_of(t)[1])
            a_fib[key] = a_fib.get(key, 0) + 1
        classes = _classes_of(members)
        ae[lam] = len(classes)
        for c in classes:
            key = (lam, ff_of(c[0])[1])
            ae_fib[key] = ae_fib.get(key, 0) + 1
    return Census(n, a, ae, a_fib, ae_fib)


def _merge(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(x + y, reverse=True))


def _convolve(f: dict, g: dict) -> dict:
    out: dict = {}
    for s1, c1 in f.items():
        for s2, c2 in g.items():
            key = _merge(s1, s2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


@lru_cache(maxsize=None)
def _hanging(m: int) -> dict[tuple[int, ...], int]:
    """Shape counts for an m-gon attached along one edge (m = 2 is a bare edge)."""
    if m == 2:
        return {(): 1}
    out: dict[tuple[int, ...], int] = {}
    for k in range(3, m + 1):
        for s, c in _sides(k - 1, m - 1).items():
            key = _merge(s, (k - 2,))
            out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=None)
def _sides(r: int, edges: int) -> dict[tuple[int, ...], int]:
    """Shape counts for ``r`` consecutive tile sides carrying ``edges`` boundary edges in total."""
    if r == 0:
        return {(): 1} if edges == 0 else {}
    out: dict[tuple[int, ...], int] = {}
    for s in range(2, edges - (r - 1) + 2):
        for key, c in _convolve(_hanging(s), _sides(r - 1, edges - (s - 1))).items():
            out[key] = out.get(key, 0) + c
    return out


def shape_table_dp(n: int) -> dict[Partition, int]:
    """a_n(λ) for every λ, by dynamic programming on the tile holding edge (1, n)."""
    _check_n(n)
    return {Partition(k): v for k, v in sorted(_hanging(n).items(), reverse=True)}


def count_shape_dp(n: int, lam: MaybePartition) -> int:
    """a_n(λ); zero for INVALID shapes, wrong weights, or n below 3."""
    if lam is INVALID or n < 3:
        return 0
    return _hanging(n).get(tuple(lam), 0)


def shape_table_enum(n: int) -> dict[Partition, int]:
    """a_n(λ) by streaming enumeration; independent of the DP."""
    counts: Counter = Counter()
    for _, tiles in iter_dissections(n):
        counts[tuple(sorted((len(p) - 2 for p in tiles), reverse=True))] += 1
    return {Partition(k): v for k, v in sorted(counts.items(), reverse=True)}

