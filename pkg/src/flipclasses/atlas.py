"""The associahedron as a cell complex on tilings, and its symmetries.

Tilings of the n-gon are the cells of K_{n-1}: a tiling with ``d`` diagonals
is a cell of dimension ``n - 3 - d``, and a cell's faces are the tilings
containing its diagonals.  Nothing is stored beyond the tilings themselves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .partitions import (
    Partition,
    fill_up,
    format_partition,
    minus,
    partitions_of,
    plus,
    triangulation_count,
)
from .tilings import Tiling, enumerate_tilings, flip_neighbors, iter_dissections, shape_of

__all__ = [
    "cell_dim",
    "faces",
    "f_vector",
    "euler_char",
    "rotate",
    "reflect",
    "group_maps",
    "isometry_orbits",
    "VertexProfile",
    "facet_type",
    "vertex_profiles",
    "profile_classes",
    "CellType",
    "CellComplexSummary",
    "classification_table",
]


def cell_dim(t: Tiling) -> int:
    """Dimension of the cell of ``t``; checked against |sh(t)⁻|."""
    d = t.n - 3 - len(t.diagonals)
    sh = shape_of(t)
    assert d == (minus(sh).weight if sh else 0), (t, d, sh)
    return d


def faces(t: Tiling) -> list[Tiling]:
    """Codimension-one faces: tilings with exactly one more diagonal."""
    have = set(t.diagonals)
    out = []
    for i in range(1, t.n + 1):
        for j in range(i + 2, t.n + 1):
            if (i, j) == (1, t.n) or (i, j) in have:
                continue
            if all(not (a < i < b < j or i < a < j < b) for a, b in t.diagonals):
                out.append(Tiling._trusted(t.n, tuple(sorted(t.diagonals + ((i, j),)))))
    return sorted(out)


def f_vector(n: int) -> list[int]:
    """Cell counts f_0..f_{n-3} of K_{n-1}."""
    if n < 4:
        raise ValueError("f_vector needs n >= 4")
    f = [0] * (n - 2)
    for diags, _ in iter_dissections(n):
        f[n - 3 - len(diags)] += 1
    return f


def euler_char(n: int) -> int:
    return sum((-1) ** i * fi for i, fi in enumerate(f_vector(n)))


def rotate(t: Tiling, k: int = 1) -> Tiling:
    """Relabel vertex i as i + k (mod n)."""
    n = t.n
    moved = []
    for i, j in t.diagonals:
        a, b = (i - 1 + k) % n + 1, (j - 1 + k) % n + 1
        moved.append((min(a, b), max(a, b)))
    return Tiling._trusted(n, tuple(sorted(moved)))


def reflect(t: Tiling) -> Tiling:
    """Relabel vertex i as n + 1 - i."""
    n = t.n
    return Tiling._trusted(n, tuple(sorted((n + 1 - j, n + 1 - i) for i, j in t.diagonals)))


def group_maps(n: int, group: str) -> list[Callable[[Tiling], Tiling]]:
    """The maps of the ``trivial``, ``cyclic`` or ``dihedral`` group acting on n-gon tilings."""
    rots = [lambda t, k=k: rotate(t, k) for k in range(n)]
    if group == "trivial":
        return [lambda t: t]
    if group == "cyclic":
        return rots
    if group == "dihedral":
        return rots + [lambda t, k=k: rotate(reflect(t), k) for k in range(n)]
    raise ValueError(f"unknown group {group!r}")


def isometry_orbits(
    n: int,
    group: str = "dihedral",
    dim_filter: Optional[int] = None,
    tilings: Optional[Iterable[Tiling]] = None,
) -> list[list[Tiling]]:
    """Orbits of the group on tilings, each sorted; orbits ordered by their least member."""
    pool = list(tilings) if tilings is not None else enumerate_tilings(n)
    if dim_filter is not None:
        pool = [t for t in pool if n - 3 - len(t.diagonals) == dim_filter]
    maps = group_maps(n, group)
    seen: set[Tiling] = set()
    orbits = []
    for t in sorted(pool):
        if t in seen:
            continue
        orbit = sorted({g(t) for g in maps})
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def facet_type(n: int, d: tuple[int, int]) -> tuple[int, int]:
    """Sizes of the two polygons a diagonal cuts the n-gon into, smaller first."""
    i, j = d
    a = j - i + 1
    return tuple(sorted((a, n + 2 - a)))


def facet_vertices(n: int, d: tuple[int, int]) -> int:
    """How many vertices the facet of diagonal ``d`` has (a 5 marks a pentagonal face of K5)."""
    a, b = facet_type(n, d)
    return triangulation_count(a) * triangulation_count(b)


@dataclass(frozen=True)
class VertexProfile:
    vertex: Tiling
    facet_shapes: tuple[tuple[int, int], ...]
    neighbor_refinement: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def key(self):
        return (self.facet_shapes, self.neighbor_refinement)

    @property
    def facet_gons(self) -> tuple[int, ...]:
        return tuple(sorted((triangulation_count(a) * triangulation_count(b) for a, b in self.facet_shapes), reverse=True))


def _facets_of(t: Tiling) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(facet_type(t.n, d) for d in t.diagonals))


def vertex_profiles(n: int) -> list[VertexProfile]:
    """Facet-type multiset of every triangulation, refined once by its flip neighbours' multisets."""
    if n < 5:
        raise ValueError("vertex profiles need n >= 5")
    verts = enumerate_tilings(n, Partition([1] * (n - 2)))
    out = []
    for v in verts:
        nbr = tuple(sorted(_facets_of(w) for w in flip_neighbors(v)))
        out.append(VertexProfile(v, _facets_of(v), nbr))
    return out


def profile_classes(profiles: list[VertexProfile]) -> list[list[Tiling]]:
    """Vertices grouped by identical profile, each class sorted, classes by least member."""
    groups: dict = {}
    for p in profiles:
        groups.setdefault(p.key, []).append(p.vertex)
    return sorted((sorted(g) for g in groups.values()), key=lambda c: c[0])


@dataclass
class CellType:
    dim: int
    mu: Partition
    lam: Optional[Partition]
    count: int = 0
    product: tuple[int, ...] = ()
    representatives: list[Tiling] = field(default_factory=list)

    @property
    def possible(self) -> bool:
        return self.lam is not None

    @property
    def product_label(self) -> str:
        if not self.possible:
            return "impossible"
        parts = Counter(self.product)
        return " x ".join(f"K{k}" + (f"^{c}" if c > 1 else "") for k, c in sorted(parts.items(), reverse=True))


@dataclass
class CellComplexSummary:
    n: int
    f_vector: list[int]
    euler: int
    cells: list[CellType]

    def cells_by_dim_mu(self) -> dict[tuple[int, Partition], CellType]:
        return {(c.dim, c.mu): c for c in self.cells}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "f_vector": self.f_vector,
            "euler": self.euler,
            "cells": [
                {
                    "dim": c.dim,
                    "mu": format_partition(c.mu),
                    "lambda": format_partition(c.lam) if c.possible else None,
                    "possible": c.possible,
                    "count": c.count,
                    "product": list(c.product),
                    "product_label": c.product_label,
                    "representatives": [str(t) for t in c.representatives],
                }
                for c in self.cells
            ],
        }

    def to_markdown(self) -> str:
        cols = self.cells
        def row(label, cells):
            return "| " + label + " | " + " | ".join(cells) + " |"
        lines = [
            row("dim", [str(c.dim) for c in cols]),
            "|" + "---|" * (len(cols) + 1),
            row("μ", [format_partition(c.mu) or "0" for c in cols]),
            row("λ", [format_partition(c.lam) if c.possible else "-" for c in cols]),
            row("type", [c.product_label for c in cols]),
            row("cells", [str(c.count) for c in cols]),
        ]
        depth = max((len(c.representatives) for c in cols), default=0)
        for k in range(depth):
            lines.append(row("rep" if k == 0 else "", [str(c.representatives[k]) if k < len(c.representatives) else "" for c in cols]))
        return "\n".join(lines) + "\n"


def classification_table(n: int) -> CellComplexSummary:
    """Cells of K_{n-1} by dimension i and μ ⊢ i, with λ = fill(μ⁺, n-2) and dihedral representatives."""
    if n < 4:
        raise ValueError("classification table needs n >= 4")
    cells = []
    for i in range(n - 3, -1, -1):
        for mu in partitions_of(i):
            mp = plus(mu)
            if mp.weight > n - 2:
                cells.append(CellType(i, mu, None))
                continue
            lam = fill_up(mp, n - 2)
            members = enumerate_tilings(n, lam)
            reps = [orb[0] for orb in isometry_orbits(n, "dihedral", tilings=members)]
            cells.append(CellType(i, mu, lam, len(members), tuple(k + 1 for k in lam), reps))
    return CellComplexSummary(n, f_vector(n), euler_char(n), cells)
