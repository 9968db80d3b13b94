"""JSON and CSV forms of censuses and OF tables.

Partitions are always written in comma form (``"2,1,1"``; the empty
partition is ``""``).
"""

from __future__ import annotations

import csv
import io

from .identities import OFTable
from .partitions import Partition, format_partition
from .tilings import Census

__all__ = ["census_to_dict", "census_to_csv", "of_table_to_dict", "of_table_to_csv", "rows_to_csv"]


def _part_key(p: Partition):
    return (p.weight, tuple(-x for x in p))


def census_to_dict(c: Census, fibers: bool = True) -> dict:
    shapes = []
    for lam in sorted(c.a, reverse=True):
        entry = {"lambda": format_partition(lam), "a": c.a[lam], "ae": c.ae[lam]}
        if fibers:
            nus = sorted((nu for (l, nu) in c.a_fiber if l == lam), key=_part_key)
            entry["fibers"] = [
                {"nu": format_partition(nu), "a": c.a_fiber[(lam, nu)], "ae": c.ae_fiber[(lam, nu)]}
                for nu in nus
            ]
        shapes.append(entry)
    return {"n": c.n, "shapes": shapes}


def rows_to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def census_to_csv(c: Census, fibers: bool = True) -> str:
    """Columns n, lambda, nu, a, ae; shape totals carry nu = ``*``."""
    rows = []
    for s in census_to_dict(c, fibers)["shapes"]:
        rows.append([c.n, s["lambda"], "*", s["a"], s["ae"]])
        for f in s.get("fibers", []):
            rows.append([c.n, s["lambda"], f["nu"], f["a"], f["ae"]])
    return rows_to_csv(["n", "lambda", "nu", "a", "ae"], rows)


def of_table_to_dict(t: OFTable, with_terms: bool = False) -> dict:
    out = {
        "rows": [format_partition(m) for m in t.rows],
        "cols": [format_partition(v) for v in t.cols],
        "entries": [[t.entries[(m, v)] for v in t.cols] for m in t.rows],
    }
    if with_terms:
        out["terms"] = [
            {
                "mu": format_partition(m),
                "nu": format_partition(v),
                "terms": [{"gamma": [format_partition(g) for g in gamma], "value": val} for gamma, val in t.terms[(m, v)]],
            }
            for m in t.rows
            for v in t.cols
            if t.terms.get((m, v))
        ]
    return out


def of_table_to_csv(t: OFTable) -> str:
    d = of_table_to_dict(t)
    return rows_to_csv(["mu\\nu"] + d["cols"], [[r] + e for r, e in zip(d["rows"], d["entries"])])
