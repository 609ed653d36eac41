"""Predicate and visit counters collected while locating and inserting."""
from __future__ import annotations

from dataclasses import dataclass, field, fields


@dataclass
class LevelCounters:
    phase1_orientation_tests: int = 0
    phase2_orientation_tests: int = 0
    phase2_crossings: int = 0
    phase3_visits: int = 0
    distance_computations: int = 0
    incircle_tests: int = 0

    @property
    def orientation_tests(self) -> int:
        return self.phase1_orientation_tests + self.phase2_orientation_tests

    def add(self, other: "LevelCounters") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def as_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["orientation_tests"] = self.orientation_tests
        return d


COUNTER_NAMES = [f.name for f in fields(LevelCounters)] + ["orientation_tests"]


@dataclass
class LocateTrace:
    """Per-level counters; a trace may be reused to accumulate many operations."""
    levels: list = field(default_factory=list)
    levels_descended: int = 0
    operations: int = 0

    def level(self, i: int) -> LevelCounters:
        while len(self.levels) <= i:
            self.levels.append(LevelCounters())
        return self.levels[i]

    def totals(self) -> LevelCounters:
        total = LevelCounters()
        for lc in self.levels:
            total.add(lc)
        return total

    def merge(self, other: "LocateTrace") -> None:
        for i, lc in enumerate(other.levels):
            self.level(i).add(lc)
        self.levels_descended += other.levels_descended
        self.operations += other.operations
