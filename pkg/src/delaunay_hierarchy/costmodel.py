"""Analytic operation-count model for walk, jump-and-walk and hierarchy location.

Costs are in arithmetic operations per location. ``k`` in the hierarchy
formulas is the number of levels above the one walked at the bottom.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

WALK_STEP = 6.2


@dataclass(frozen=True)
class CostParams:
    alpha: float = 40.0
    beta: float = 1.0
    k: float = 0.0

    def __post_init__(self):
        if not self.alpha > 1:
            raise ValueError("alpha must be > 1")
        if not self.beta > 0:
            raise ValueError("beta must be > 0")
        if self.k < 0:
            raise ValueError("k must be >= 0")


def c_walk(n: float) -> float:
    return 17 + WALK_STEP * math.sqrt(n)


def c0(n: float, alpha: float, ceil: bool = True) -> float:
    levels = math.log2(n) / math.log2(alpha)
    if ceil:
        levels = math.ceil(levels)
    return (32 + WALK_STEP * math.sqrt(alpha)) * levels


def c_msz(n: float, beta: float = 1.0) -> float:
    return 17 + n ** (1.0 / 3.0) * (WALK_STEP / math.sqrt(beta) + 5 * beta)


def c_k(n: float, k: float, alpha: float) -> float:
    return c_walk(n / alpha ** k) + 15 * k + k * c_walk(alpha)


def c_star_k(n: float, k: float, alpha: float, beta: float = 1.0) -> float:
    return c_msz(n / alpha ** k, beta) + 15 * k + k * c_walk(alpha)


def first_crossover(better, worse, start: int = 1, stop: int = 10 ** 7):
    """Smallest integer n in [start, stop) with better(n) < worse(n), or None."""
    for n in range(start, stop):
        if better(n) < worse(n):
            return n
    return None


def crossovers(alpha: float = 40.0, beta: float = 1.0, stop: int = 100_000) -> dict:
    """First n where each cheaper-at-scale method overtakes the other.

    Keys use formula indices (k = levels above the bottom walk). Plots that
    number curves by levels in use call these c*_1<c_1, c_2<c_1 and c_2<c*_1.
    """
    c1 = lambda n: c_k(n, 1, alpha)
    cm = lambda n: c_msz(n, beta)
    return {
        "c_msz<c_walk": first_crossover(cm, c_walk, 1, stop),
        "c_1<c_walk": first_crossover(c1, c_walk, 1, stop),
        "c_1<c_msz": first_crossover(c1, cm, 1, stop),
    }


def best_alpha(n: float, lo: int = 2, hi: int = 200, ceil: bool = False) -> int:
    return min(range(lo, hi + 1), key=lambda a: c0(n, a, ceil))


def table(ns, alpha: float = 40.0, beta: float = 1.0, max_k: int = 3) -> list:
    rows = []
    for n in ns:
        row = {"n": n, "c_walk": c_walk(n), "c0": c0(n, alpha) if n >= 2 else 0.0,
               "c_msz": c_msz(n, beta)}
        for k in range(1, max_k + 1):
            row[f"c_{k}"] = c_k(n, k, alpha)
        for k in range(1, max_k + 1):
            row[f"c_star_{k}"] = c_star_k(n, k, alpha, beta)
        rows.append(row)
    return rows


def emit_csv(rows) -> str:
    buf = io.StringIO()
    if not rows:
        return ""
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (f"{v:.6f}" if isinstance(v, float) else v) for k, v in r.items()})
    return buf.getvalue()
