"""Closed-form class counts and the overcount identities behind them.

Every quantity here is an exact integer (or an exact ``Fraction`` for the
brute-force overcount quotient).  Shape counts ``a_n(λ)`` come from
:func:`flipclasses.tilings.count_shape_dp`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import prod

from .partitions import (
    INVALID,
    Partition,
    binom,
    combine,
    fill_up,
    models_fiber,
    partitions_of,
    partitions_up_to,
    plus,
    wreath,
)
from .tilings import Tiling, count_shape_dp, enumerate_tilings, ff_of, flip_classes

__all__ = [
    "pi_coeff",
    "theorem_terms",
    "theorem_rhs",
    "euler_F",
    "of_factor",
    "of_terms",
    "of_table",
    "OFTable",
    "column_sum",
    "of_product_identity",
    "b_count",
    "b_set",
    "of_bruteforce",
    "fan",
]


def _pi_first(lam: Partition, mu: Partition) -> int:
    return prod(binom(lam.m(s + 1) + mu.m(s), mu.m(s)) for s in set(mu))


def _pi_second(lam: Partition, mu: Partition) -> int:
    mp = plus(mu)
    both = combine(lam, mp)
    return prod(binom(both.m(s), mp.m(s)) for s in set(mp) if s >= 2)


def pi_coeff(lam: Partition, mu: Partition) -> int:
    """Number of ways to mark tiles of sizes ``mu⁺`` among the tiles of ``lam ≀ mu``.

    Both product forms are evaluated; a disagreement is a bug, not an input error.
    """
    first, second = _pi_first(lam, mu), _pi_second(lam, mu)
    assert first == second, (lam, mu, first, second)
    return first


def theorem_terms(n: int, lam: Partition) -> list[tuple[Partition, int, int]]:
    """The non-zero ``(mu, Π^λ_μ, a_n(λ≀μ))`` terms of the alternating class-count sum.

    The empty ``mu`` is always included, even when ``lam`` has no 1-parts.
    """
    lam = Partition(lam)
    if lam.weight != n - 2:
        raise ValueError(f"shape {lam} does not have weight n-2 = {n - 2}")
    out = []
    for m in range(0, max(lam.m(1) - 1, 0) + 1):
        for mu in partitions_of(m):
            w = wreath(lam, mu)
            if w is INVALID:
                continue
            out.append((mu, pi_coeff(lam, mu), count_shape_dp(n, w)))
    return out


def theorem_rhs(n: int, lam: Partition) -> int:
    """Predicted number of flip classes of tilings of the n-gon with shape ``lam``."""
    return sum((-1) ** mu.weight * pi * a for mu, pi, a in theorem_terms(n, lam))


def euler_F(r: int) -> int:
    """Alternating sum over ρ of a_{r+3}(fill(ρ⁺, r+1)); equals 1 for every r."""
    if r < 0:
        raise ValueError("r must be >= 0")
    total = 0
    for m in range(r + 1):
        for rho in partitions_of(m):
            total += (-1) ** m * count_shape_dp(r + 3, fill_up(plus(rho), r + 1))
    return total


def _capped_fibers(mu: Partition, caps: tuple[int, ...]):
    """Tuples in the ``len(caps)``-fiber of ``mu`` whose i-th component weighs at most ``caps[i]``.

    Same order as :func:`models_fiber`; the tuples it skips all give zero terms.
    """
    need = sorted(plus(mu).multiplicities.items(), reverse=True)
    s = len(caps)
    out = []

    def place(k, room, comps):
        if k == len(need):
            out.append(tuple(Partition(c) for c in comps))
            return
        v, count = need[k]

        def spread(i, left, room, comps):
            if i == s - 1:
                if v * left <= room[i]:
                    yield room[:i] + (room[i] - v * left,), comps[:i] + (comps[i] + (v,) * left,)
                return
            for take in range(min(left, room[i] // v), -1, -1):
                yield from spread(
                    i + 1, left - take,
                    room[:i] + (room[i] - v * take,) + room[i + 1:],
                    comps[:i] + (comps[i] + (v,) * take,) + comps[i + 1:],
                )

        for room2, comps2 in spread(0, count, room, comps):
            place(k + 1, room2, comps2)

    place(0, tuple(caps), tuple(() for _ in caps))
    out.sort(key=lambda g: tuple(tuple(c) for c in g), reverse=True)
    return out


def of_terms(mu: Partition, nu: Partition, full: bool = False) -> list[tuple[tuple[Partition, ...], int]]:
    """Each ``gamma`` in the ``l(ν)``-fiber of ``mu`` with its product of filled region counts.

    By default only tuples whose components fit their regions (|γ^i| <= ν_i + 1)
    are listed, since every other product has a zero factor; ``full=True``
    walks the whole fiber.
    """
    mu, nu = Partition(mu), Partition(nu)
    if not nu:
        return [((), 1)] if not mu else []
    if full:
        fiber = models_fiber(mu, len(nu))
    elif plus(mu).weight > sum(k + 1 for k in nu):
        return []
    else:
        fiber = _capped_fibers(mu, tuple(k + 1 for k in nu))
    return [
        (gamma, prod(count_shape_dp(k + 3, fill_up(g, k + 1)) for k, g in zip(nu, gamma)))
        for gamma in fiber
    ]


def of_factor(mu: Partition, nu: Partition) -> int:
    """Overcount factor OF_{μ,ν} as a sum over the ``l(ν)``-fiber of ``mu``."""
    return sum(v for _, v in of_terms(mu, nu))


@dataclass
class OFTable:
    rows: list[Partition]
    cols: list[Partition]
    entries: dict[tuple[Partition, Partition], int]
    terms: dict[tuple[Partition, Partition], list] = field(default_factory=dict)

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.entries[key]


def of_table(max_col_weight: int, max_row_weight: int | None = None) -> OFTable:
    """OF_{μ,ν} for all ν with |ν| ≤ max_col_weight and μ with |μ| ≤ max_row_weight."""
    if max_row_weight is None:
        max_row_weight = max_col_weight
    rows = partitions_up_to(max_row_weight)
    cols = partitions_up_to(max_col_weight)
    entries, terms = {}, {}
    for mu in rows:
        for nu in cols:
            ts = [t for t in of_terms(mu, nu) if t[1]]
            terms[(mu, nu)] = ts
            entries[(mu, nu)] = sum(v for _, v in ts)
    return OFTable(rows, cols, entries, terms)


def column_sum(nu: Partition) -> int:
    """Σ_μ (-1)^{|μ|} OF_{μ,ν}, cut off at |μ| = |ν| + l(ν); later rows vanish."""
    nu = Partition(nu)
    bound = nu.weight + nu.length
    return sum((-1) ** mu.weight * of_factor(mu, nu) for mu in partitions_up_to(bound))


def of_product_identity(nu: Partition, M: int) -> tuple[int, int]:
    """(signed column sum through |μ| = M, Π_i F_{ν_i})."""
    nu = Partition(nu)
    if M < nu.weight + nu.length:
        raise ValueError("truncation bound must be at least |ν| + l(ν)")
    lhs = sum((-1) ** mu.weight * of_factor(mu, nu) for mu in partitions_up_to(M))
    return lhs, prod(euler_F(r) for r in nu)


def b_count(n: int, lam: Partition, mu: Partition) -> int:
    """|B^λ_μ| = Π^λ_μ · a_n(λ≀μ), zero when λ≀μ is not a partition."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != n - 2:
        raise ValueError(f"shape {lam} does not have weight n-2 = {n - 2}")
    w = wreath(lam, mu)
    if w is INVALID:
        return 0
    return pi_coeff(lam, mu) * count_shape_dp(n, w)


def fan(pts: tuple[int, ...], apex: str = "low") -> list[tuple[int, int]]:
    """Diagonals of the fan triangulation of a tile from its lowest (or highest) vertex."""
    pts = tuple(sorted(pts))
    if apex == "low":
        return [(pts[0], v) for v in pts[2:-1]]
    return [(v, pts[-1]) for v in pts[1:-2]]


def _markings(tiles, sizes: Partition):
    """Every way to choose tiles realising the multiset of tile sizes ``sizes``.

    ``sizes`` holds partition parts (tile size minus 2).
    """
    by_part: dict[int, list] = {}
    for pts in tiles:
        by_part.setdefault(len(pts) - 2, []).append(pts)
    per = [list(combinations(by_part.get(p, []), c)) for p, c in sizes.multiplicities.items()]
    for pick in product(*per):
        yield [pts for group in pick for pts in group]


def b_set(n: int, lam: Partition, mu: Partition, apex: str = "low") -> list[Tiling]:
    """The multiset B^λ_μ, built literally: tile with shape λ≀μ, mark tiles of sizes μ⁺, fan them."""
    lam, mu = Partition(lam), Partition(mu)
    w = wreath(lam, mu)
    if w is INVALID:
        return []
    out = []
    for t in enumerate_tilings(n, w):
        for marked in _markings(t.tiles, plus(mu)):
            extra = [d for pts in marked for d in fan(pts, apex)]
            out.append(Tiling(n, t.diagonals + tuple(extra)))
    return out


def of_bruteforce(lam: Partition, mu: Partition, nu: Partition, n: int, apex: str = "low") -> Fraction:
    """|ff⁻¹(ν) ∩ B^λ_μ| / ae_{λ,ν}, counted tiling by tiling."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    classes = [c for c in flip_classes(n, lam) if ff_of(c[0])[1] == nu]
    if not classes:
        raise ValueError(f"no flip classes of shape {lam} in fiber {nu} for n={n}")
    hits = sum(1 for t in b_set(n, lam, mu, apex) if ff_of(t)[1] == nu)
    return Fraction(hits, len(classes))

