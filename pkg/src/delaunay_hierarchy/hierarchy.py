"""Multi-level Delaunay hierarchy for point location.

Level 0 triangulates every site; each site of level i also belongs to level
i+1 with probability 1/alpha. A query is located from the top: at each level
we turn around the entry vertex, walk the segment towards the query, and pick
that level's nearest vertex, which becomes the entry vertex one level down.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .predicates import Point, make_point
from .trace import LevelCounters, LocateTrace
from .triangulation import DuplicatePoint, Phase3Mode, Triangulation


class EmptyStructure(LookupError):
    pass


class UnknownHandle(KeyError):
    pass


@dataclass
class HierarchyConfig:
    alpha: float = 30.0
    max_levels: int | None = None
    min_hierarchy_size: int = 20
    min_msz_size: float = 20
    beta: float = 1.0
    phase3_mode: Phase3Mode = Phase3Mode.MODIFIED
    rng_seed: int = 0

    def __post_init__(self):
        if not self.alpha > 1:
            raise ValueError("alpha must be > 1")
        if not self.beta > 0:
            raise ValueError("beta must be > 0")
        if self.max_levels is not None and self.max_levels < 1:
            raise ValueError("max_levels must be >= 1")


@dataclass
class SiteRecord:
    point: Point
    top_level: int
    stamp: int
    refs: list = field(default_factory=list)


@dataclass
class LocateResult:
    triangles: list        # containing triangle per located level (None if degenerate)
    nearest: list          # nearest vertex per located level (None where not computed)
    entry_level: int
    trace: LocateTrace

    @property
    def triangle(self):
        return self.triangles[0]


def msz_sample_size(m: int, beta: float) -> int:
    r = round(m ** (1.0 / 3.0))
    cube = r if r ** 3 == m else m ** (1.0 / 3.0)
    return max(1, min(m, math.ceil(beta * cube)))


class Hierarchy:
    def __init__(self, config: HierarchyConfig | None = None):
        self.config = config or HierarchyConfig()
        self.levels = [Triangulation()]
        self.sites = {}
        self._next_handle = 0
        self._stamp = 0
        self._level_rng = random.Random(self.config.rng_seed)
        self._msz_rng = random.Random(f"msz-{self.config.rng_seed}")
        self._start = None
        self._msz_level = -1
        self._msz_built_at = 0
        self._msz_vertices = []
        self._msz_members = set()
        self._msz_dirty = True

    def __len__(self) -> int:
        return len(self.sites)

    # ------------------------------------------------------------------
    # sampling

    def draw_top_level(self, rng: random.Random | None = None) -> int:
        """Geometric level: P(l) = (1 - 1/alpha) * alpha**-l, capped by max_levels."""
        rng = rng or self._level_rng
        cap = math.inf if self.config.max_levels is None else self.config.max_levels - 1
        p = 1.0 / self.config.alpha
        level = 0
        while level < cap and rng.random() < p:
            level += 1
        return level

    def level_sizes(self) -> list:
        return [T.n for T in self.levels]

    def entry_level(self) -> int:
        for i in range(len(self.levels) - 1, 0, -1):
            if self.levels[i].n >= self.config.min_hierarchy_size:
                return i
        return 0

    # ------------------------------------------------------------------
    # jump-and-walk sample

    def _msz_enabled(self, level: int) -> bool:
        return self.levels[level].n >= self.config.min_msz_size

    def _msz_sample(self, level: int) -> list:
        m = self.levels[level].n
        if (self._msz_dirty or level != self._msz_level
                or m >= 2 * self._msz_built_at or 2 * m <= self._msz_built_at):
            verts = self.levels[level].vertices()
            k = msz_sample_size(m, self.config.beta)
            self._msz_vertices = self._msz_rng.sample(verts, k)
            self._msz_members = set(self._msz_vertices)
            self._msz_level = level
            self._msz_built_at = m
            self._msz_dirty = False
        return self._msz_vertices

    def rebuild_msz_sample(self, level: int) -> list:
        self._msz_dirty = True
        return self._msz_sample(level)

    def msz_start(self, q, level: int, counters: LevelCounters | None = None) -> int:
        """Nearest member of the level's random sample, by brute force."""
        T = self.levels[level]
        sample = self._msz_sample(level)
        qx, qy = q[0], q[1]
        x, y, st = T.x, T.y, T.vstamp
        best = None
        bk = None
        for v in sample:
            dx, dy = x[v] - qx, y[v] - qy
            k = (dx * dx + dy * dy, st[v])
            if bk is None or k < bk:
                best, bk = v, k
        if counters is not None:
            counters.distance_computations += len(sample)
        return best

    # ------------------------------------------------------------------
    # location

    def locate(self, q, trace: LocateTrace | None = None,
               nearest_at_base: bool = False) -> LocateResult:
        if not self.sites:
            raise EmptyStructure("hierarchy is empty")
        trace = trace if trace is not None else LocateTrace()
        mode = self.config.phase3_mode
        s = self.entry_level()
        if self._msz_enabled(s):
            v = self.msz_start(q, s, trace.level(s))
        else:
            v = self.sites[self._start].refs[s]
        tris = [None] * (s + 1)
        near = [None] * (s + 1)
        qx, qy = q[0], q[1]
        for i in range(s, -1, -1):
            T = self.levels[i]
            c = trace.level(i)
            if i < s:
                v = self.sites[self.levels[i + 1].vsite[v]].refs[i]
            want = i > 0 or nearest_at_base
            if T.dim < 2:
                t = None
                vi = T.nearest_linear(q, c) if want else None
            elif T.x[v] == qx and T.y[v] == qy:
                t = T.vtri[v]
                vi = v
            else:
                t = T.turn_around(v, q, c)
                t = T.straight_walk(t, v, q, c)
                vi = T.nearest_from_triangle(t, q, mode, c) if want else None
            tris[i] = t
            near[i] = vi
            v = vi
        trace.levels_descended += s + 1
        trace.operations += 1
        return LocateResult(tris, near, s, trace)

    def nearest_neighbor(self, q, trace: LocateTrace | None = None):
        """Handle of the nearest site (exact in EXACT phase-3 mode)."""
        res = self.locate(q, trace, nearest_at_base=True)
        return self.levels[0].vsite[res.nearest[0]]

    # ------------------------------------------------------------------
    # updates

    def insert(self, q, trace: LocateTrace | None = None, level: int | None = None):
        """Insert a point and return its site handle.

        A point equal to an existing site returns that site's handle and
        leaves the structure untouched. ``level`` forces the top level
        instead of drawing it.
        """
        p = make_point(q[0], q[1])
        trace = trace if trace is not None else LocateTrace()
        h = self._next_handle
        stamp = self._stamp
        T0 = self.levels[0]
        res = None
        try:
            if not self.sites or T0.dim < 2:
                v0 = T0.insert(p, stamp, h, counters=trace.level(0))
            else:
                res = self.locate(p, trace)
                v0 = T0.insert_located(p, res.triangles[0], stamp, h, trace.level(0))
        except DuplicatePoint as dup:
            return T0.vsite[dup.vertex]
        self._next_handle += 1
        self._stamp += 1
        top = self.draw_top_level() if level is None else level
        if self.config.max_levels is not None:
            top = min(top, self.config.max_levels - 1)
        rec = SiteRecord(p, top, stamp, [v0])
        self.sites[h] = rec
        for i in range(1, top + 1):
            if i >= len(self.levels):
                self.levels.append(Triangulation())
            T = self.levels[i]
            c = trace.level(i)
            t = res.triangles[i] if res is not None and i < len(res.triangles) else None
            if t is not None and T.dim == 2:
                rec.refs.append(T.insert_located(p, t, stamp, h, c))
            else:
                rec.refs.append(T.insert(p, stamp, h, self._start_vertex(i), c))
        if self._start is None or top >= len(self.levels) - 1:
            self._start = h
        return h

    def _start_vertex(self, level: int):
        T = self.levels[level]
        if T.dim < 2:
            return None
        if self._start is not None:
            rec = self.sites[self._start]
            if rec.top_level >= level:
                return rec.refs[level]
        return None

    def remove(self, h) -> None:
        try:
            rec = self.sites.pop(h)
        except KeyError:
            raise UnknownHandle(h) from None
        for i in range(rec.top_level + 1):
            v = rec.refs[i]
            if i == self._msz_level and v in self._msz_members:
                self._msz_dirty = True
            self.levels[i].delete_vertex(v)
        while len(self.levels) > 1 and self.levels[-1].n == 0:
            self.levels.pop()
        if self._start == h:
            self._start = None
            if self.sites:
                top = self.levels[-1]
                v = max(top.vertices(), key=lambda u: top.vstamp[u])
                self._start = top.vsite[v]

    # ------------------------------------------------------------------
    # inspection

    def total_finite_triangles(self) -> int:
        return sum(T.n_finite_tris for T in self.levels)

    def validate(self, full: bool = False) -> list:
        problems = []
        for i, T in enumerate(self.levels):
            problems.extend(f"level {i}: {msg}" for msg in T.validate(full))
        prev = None
        for i, T in enumerate(self.levels):
            pts = {T.point(v) for v in T.vertices()}
            if prev is not None and not pts <= prev:
                problems.append(f"level {i} is not a subset of level {i - 1}")
            prev = pts
        for h, rec in self.sites.items():
            if len(rec.refs) != rec.top_level + 1:
                problems.append(f"site {h} has {len(rec.refs)} refs for top level {rec.top_level}")
                continue
            for i, v in enumerate(rec.refs):
                T = self.levels[i]
                if not T.is_live_vertex(v) or T.vsite[v] != h or T.point(v) != rec.point:
                    problems.append(f"site {h} ref at level {i} is stale")
        for i, T in enumerate(self.levels):
            expect = sum(1 for r in self.sites.values() if r.top_level >= i)
            if T.n != expect:
                problems.append(f"level {i} holds {T.n} sites, directory says {expect}")
        return problems

    def dump(self) -> str:
        """Text snapshot: each level's triangle dump, then the site directory."""
        out = []
        for i, T in enumerate(self.levels):
            out.append(f"# level {i} sites={T.n}")
            d = T.dump()
            if d:
                out.append(d)
        out.append("# sites")
        for h in sorted(self.sites):
            rec = self.sites[h]
            out.append(f"{h} {rec.point.x} {rec.point.y} {rec.top_level}")
        return "\n".join(out)
