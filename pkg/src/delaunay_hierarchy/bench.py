"""Build benchmarks over the four location methods."""
from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import dataclass, field
from enum import Enum

from .datasets import DatasetSpec, generate
from .hierarchy import Hierarchy, HierarchyConfig
from .trace import COUNTER_NAMES, LocateTrace


class Method(Enum):
    WALK = "walk"
    MSZ = "msz"
    HIERARCHY = "hierarchy"
    HIERARCHY_MSZ = "hierarchy-msz"


@dataclass(frozen=True)
class MethodConfig:
    method: Method
    alpha: float = 30.0
    beta: float = 1.0
    min_hierarchy_size: int = 20
    min_msz_size: int = 20
    rng_seed: int = 0

    def hierarchy_config(self) -> HierarchyConfig:
        one_level = self.method in (Method.WALK, Method.MSZ)
        uses_msz = self.method in (Method.MSZ, Method.HIERARCHY_MSZ)
        return HierarchyConfig(
            alpha=self.alpha,
            max_levels=1 if one_level else None,
            min_hierarchy_size=self.min_hierarchy_size,
            min_msz_size=self.min_msz_size if uses_msz else math.inf,
            beta=self.beta,
            rng_seed=self.rng_seed,
        )


class BenchValidationError(RuntimeError):
    pass


@dataclass
class BenchRow:
    distribution: str
    n: int
    method: str
    build_time: float
    counters: dict              # mean per insertion
    peak_triangles: int
    levels_used: int
    repeats: int = 1
    timed_out: bool = False


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)


CSV_FIELDS = (["distribution", "n", "method", "repeats", "build_time", "timed_out",
               "peak_triangles", "levels_used"]
              + [f"mean_{c}" for c in COUNTER_NAMES] + ["mean_levels_descended"])


def build(points, config: HierarchyConfig, deadline: float | None = None):
    """Insert points in order; returns (hierarchy, trace, inserted, peak triangles, timed_out)."""
    h = Hierarchy(config)
    trace = LocateTrace()
    peak = 0
    for i, p in enumerate(points):
        h.insert(p, trace)
        if (i & 255) == 0:
            peak = max(peak, h.total_finite_triangles())
            if deadline is not None and time.perf_counter() > deadline:
                return h, trace, i + 1, peak, True
    peak = max(peak, h.total_finite_triangles())
    return h, trace, len(points), peak, False


def run_bench(points, method: MethodConfig, distribution: str = "points",
              shuffle: bool = False, shuffle_seed: int = 0, repeats: int = 1,
              timeout: float | None = None, validate: bool = True) -> BenchReport:
    pts = list(points)
    if shuffle:
        random.Random(shuffle_seed).shuffle(pts)
    report = BenchReport()
    cfg = method.hierarchy_config()
    times = []
    trace = None
    for _ in range(repeats):
        start = time.perf_counter()
        deadline = None if timeout is None else start + timeout
        h, trace, inserted, peak, timed_out = build(pts, cfg, deadline)
        times.append(time.perf_counter() - start)
        if timed_out:
            break
        if validate:
            problems = h.levels[0].validate()
            if problems:
                raise BenchValidationError(f"{distribution}/{method.method.value}: {problems[:3]}")
    ops = max(inserted, 1)
    means = {c: v / ops for c, v in trace.totals().as_dict().items()}
    means["levels_descended"] = trace.levels_descended / ops
    report.rows.append(BenchRow(distribution, len(h), method.method.value, min(times),
                                means, peak, len(h.levels), len(times), timed_out))
    return report


def run_dataset(spec: DatasetSpec, method: MethodConfig, **kw) -> BenchReport:
    return run_bench(generate(spec), method, distribution=spec.kind.value, **kw)


def emit_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in report.rows:
        w.writerow([r.distribution, r.n, r.method, r.repeats, f"{r.build_time:.6f}",
                    int(r.timed_out), r.peak_triangles, r.levels_used]
                   + [f"{r.counters[c]:.6f}" for c in COUNTER_NAMES]
                   + [f"{r.counters['levels_descended']:.6f}"])
    return buf.getvalue()
