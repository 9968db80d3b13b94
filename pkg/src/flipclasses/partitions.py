"""Integer partitions and the small calculus built on them.

Partitions are stored as non-increasing tuples of positive parts.  The
exponential form ``(1^m1, 2^m2, ...)`` is only ever a derived view.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Iterable, Iterator, Union

__all__ = [
    "Partition",
    "INVALID",
    "NegOnes",
    "MaybePartition",
    "normalize",
    "plus",
    "minus",
    "combine",
    "fill_up",
    "wreath",
    "partitions_of",
    "partitions_up_to",
    "models_fiber",
    "binom",
    "catalan",
    "triangulation_count",
    "class_size",
    "parse_partition",
    "format_partition",
]


class Partition(tuple):
    """An integer partition, canonically a non-increasing tuple of positive parts.

    Zeros are dropped and parts sorted on construction, so ``Partition([1, 0, 3])``
    is ``(3, 1)``.  Being a tuple, it hashes and compares like one.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts!r}")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def m(self, i: int) -> int:
        """Number of parts equal to ``i``."""
        return self.count(i)

    @property
    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return dict(sorted(out.items()))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        if not self:
            return "∅"
        return "(" + ",".join(map(str, self)) + ")"


class _Invalid:
    """Result of removing more 1-parts than a partition has."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INVALID"

    def __reduce__(self):
        return (_Invalid, ())

    def __bool__(self) -> bool:
        return False


INVALID = _Invalid()
MaybePartition = Union[Partition, _Invalid]


@dataclass(frozen=True)
class NegOnes:
    """The formal term ``1^{-a}``: remove ``a`` parts equal to 1."""

    a: int

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("NegOnes needs a >= 0")


def normalize(raw: Iterable[int]) -> Partition:
    return Partition(raw)


def plus(mu: Partition) -> Partition:
    """Add a leading column to the Young diagram: every part grows by one."""
    return Partition(p + 1 for p in mu)


def minus(mu: Partition) -> Partition:
    """Remove the first column of the Young diagram (``mu`` must be non-empty)."""
    if not mu:
        raise ValueError("minus is undefined on the empty partition")
    return Partition(p - 1 for p in mu)


def combine(lam: MaybePartition, other: Partition | NegOnes) -> MaybePartition:
    """Multiset union, or removal of 1-parts when ``other`` is a :class:`NegOnes`."""
    if lam is INVALID:
        return INVALID
    if isinstance(other, NegOnes):
        ones = lam.m(1)
        if ones < other.a:
            return INVALID
        return Partition(lam[: len(lam) - other.a])
    if other is INVALID:
        return INVALID
    return Partition(tuple(lam) + tuple(other))


def fill_up(gamma: Partition, m: int) -> Partition:
    """Pad ``gamma`` with 1-parts up to weight ``m``; heavier partitions pass through."""
    w = gamma.weight
    if w <= m:
        return Partition(tuple(gamma) + (1,) * (m - w))
    return gamma


def wreath(lam: Partition, mu: Partition) -> MaybePartition:
    """``lam ∪ mu⁺ ∪ 1^{-|mu⁺|}``: trade triangles of ``lam`` for the tiles ``mu⁺``."""
    mp = plus(mu)
    return combine(combine(lam, mp), NegOnes(mp.weight))


def _partitions(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(m: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(m, m))


def partitions_of(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return list(_partitions_cached(m))


def partitions_up_to(w: int) -> list[Partition]:
    """Partitions of 0, 1, ..., w, by weight then reverse-lexicographic."""
    return [p for m in range(w + 1) for p in partitions_of(m)]


def _compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def models_fiber(mu: Partition, s: int) -> list[tuple[Partition, ...]]:
    """All ``s``-tuples of partitions whose union is ``mu⁺``.

    Ordered so that tuples compare decreasingly as tuples of tuples; for
    ``mu = (2,1)`` and ``s = 2`` that is ((3,2),∅), ((3),(2)), ((2),(3)), (∅,(3,2)).
    """
    if s < 1:
        raise ValueError("arity must be >= 1")
    target = plus(mu).multiplicities
    values = list(target)
    per_value = [list(_compositions(target[v], s)) for v in values]
    out = []
    for choice in product(*per_value):
        comps = []
        for slot in range(s):
            parts: list[int] = []
            for v, split in zip(values, choice):
                parts.extend([v] * split[slot])
            comps.append(Partition(parts))
        out.append(tuple(comps))
    out.sort(key=lambda g: tuple(tuple(c) for c in g), reverse=True)
    return out


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan index must be >= 0")
    return comb(2 * k, k) // (k + 1)


def triangulation_count(m: int) -> int:
    """Number of triangulations of a convex ``m``-gon."""
    if m < 3:
        raise ValueError("need a polygon with at least 3 vertices")
    return catalan(m - 2)


def class_size(nu: Partition) -> int:
    """Size of every flip class whose maximal triangulated regions are ``nu⁺`` (plus singletons).

    A region counted by part ``k`` of ``nu`` is a (k+3)-gon, triangulated freely.
    """
    return prod(triangulation_count(k + 3) for k in nu)


_EXP_TERM = re.compile(r"^(\d+)\^(\d+)$")


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,2,1"``, ``""``/``"0"`` (empty) or exponential ``"1^2 2^3"``."""
    text = text.strip()
    if text in ("", "0", "∅"):
        return Partition()
    if "^" in text:
        parts: list[int] = []
        for tok in text.replace(",", " ").split():
            hit = _EXP_TERM.match(tok)
            if hit:
                parts.extend([int(hit.group(1))] * int(hit.group(2)))
            elif tok.isdigit():
                parts.append(int(tok))
            else:
                raise ValueError(f"bad partition term {tok!r}")
        return Partition(parts)
    try:
        return Partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p))
