"""Exhaustive verification sweeps.

Each sweep returns ``{"check": name, "instances": k, "failures": [...]}``.
Work is split into independent tasks that may run in a process pool;
results come back in task order, so the worker count never changes the
output.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from .atlas import euler_char
from .identities import column_sum, euler_F, of_bruteforce, of_factor, of_product_identity, theorem_rhs
from .partitions import Partition, format_partition, partitions_of, partitions_up_to
from .tilings import ff_of, flip_classes

__all__ = [
    "run_tasks",
    "verify_theorem",
    "verify_euler",
    "verify_columns",
    "verify_of",
    "of_instances",
]


def run_tasks(fn: Callable, tasks: Iterable, jobs: int = 1) -> list:
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, *zip(*tasks)))


def _report(check: str, results: list[tuple[int, list[dict]]]) -> dict:
    failures = [f for _, fs in results for f in fs]
    return {"check": check, "instances": sum(k for k, _ in results), "failures": failures}


def _theorem_task(n: int, lam: Partition) -> tuple[int, list[dict]]:
    rhs = theorem_rhs(n, lam)
    classes = len(flip_classes(n, lam))
    if rhs == classes:
        return 1, []
    return 1, [{"n": n, "lambda": format_partition(lam), "formula": rhs, "classes": classes}]


def verify_theorem(max_n: int, jobs: int = 1) -> dict:
    """Closed-form class count against flip-class search for every shape, 3 <= n <= max_n."""
    tasks = [(n, lam) for n in range(3, max_n + 1) for lam in partitions_of(n - 2)]
    return _report("theorem", run_tasks(_theorem_task, tasks, jobs))


def _euler_task(kind: str, k: int) -> tuple[int, list[dict]]:
    value = euler_char(k) if kind == "euler_char" else euler_F(k)
    key = "n" if kind == "euler_char" else "r"
    return 1, ([] if value == 1 else [{"kind": kind, key: k, "value": value, "expected": 1}])


def verify_euler(max_n: int, jobs: int = 1) -> dict:
    """Euler characteristic of K_{n-1} for 4 <= n <= max_n, and F_r for r <= max_n - 3."""
    tasks = [("euler_char", n) for n in range(4, max_n + 1)]
    tasks += [("F", r) for r in range(0, max_n - 2)]
    return _report("euler", run_tasks(_euler_task, tasks, jobs))


def _column_task(nu: Partition) -> tuple[int, list[dict]]:
    fails = []
    cs = column_sum(nu)
    if cs != 1:
        fails.append({"kind": "column_sum", "nu": format_partition(nu), "value": cs, "expected": 1})
    lhs, rhs = of_product_identity(nu, nu.weight + nu.length)
    if lhs != rhs:
        fails.append({"kind": "of_product", "nu": format_partition(nu), "signed_sum": lhs, "product_F": rhs})
    return 2, fails


def verify_columns(max_weight: int, jobs: int = 1) -> dict:
    """Signed column sums of the OF table, and their product-of-F form, for 1 <= |ν| <= max_weight."""
    tasks = [(nu,) for nu in partitions_up_to(max_weight) if nu]
    return _report("columns", run_tasks(_column_task, tasks, jobs))


def of_instances(n: int, lam: Partition) -> list[tuple[Partition, Partition, object, int]]:
    """``(mu, nu, brute force, formula)`` for every admissible (μ, ν) at this shape.

    ν ranges over fibers holding at least one flip class of shape λ; μ over
    every partition with |μ| <= m_1(λ) (larger μ cannot be placed).
    """
    fibers = sorted({ff_of(c[0])[1] for c in flip_classes(n, lam)}, key=lambda p: (p.weight, tuple(-x for x in p)))
    out = []
    for nu in fibers:
        for mu in partitions_up_to(lam.m(1)):
            out.append((mu, nu, of_bruteforce(lam, mu, nu, n), of_factor(mu, nu)))
    return out


def _of_task(n: int, lam: Partition) -> tuple[int, list[dict]]:
    rows = of_instances(n, lam)
    fails = [
        {"n": n, "lambda": format_partition(lam), "mu": format_partition(mu), "nu": format_partition(nu),
         "bruteforce": str(bf), "formula": of}
        for mu, nu, bf, of in rows
        if bf != of
    ]
    return len(rows), fails


def verify_of(max_n: int, jobs: int = 1) -> dict:
    """Brute-force overcount quotients against the closed form, for all shapes with 3 <= n <= max_n."""
    tasks = [(n, lam) for n in range(3, max_n + 1) for lam in partitions_of(n - 2)]
    return _report("of", run_tasks(_of_task, tasks, jobs))

