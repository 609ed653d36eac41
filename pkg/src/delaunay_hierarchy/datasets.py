"""The five benchmark point distributions, on 24-bit integer coordinates.

Curves are sampled with a real parameterization and rounded to the nearest
integer point; points that collide after rounding are dropped, so a curve
dataset may hold slightly fewer than ``n`` points.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .predicates import COORD_BOUND, Point, make_point

R = COORD_BOUND
ELLIPSE_AXES = (R, R // 2)      # 2:1, spanning the box horizontally
ELLIPSE2_CURVE_FRACTION = 0.95


class Kind(Enum):
    RANDOM = "random"
    ELLIPSE = "ellipse"
    ELLIPSE2 = "ellipse2"
    CIRCLE = "circle"
    PARABOLA = "parabola"


@dataclass(frozen=True)
class DatasetSpec:
    kind: Kind
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))


def _square(rng):
    return rng.randint(-R, R), rng.randint(-R, R)


def _ellipse(rng, a=ELLIPSE_AXES[0], b=ELLIPSE_AXES[1]):
    t = rng.uniform(0.0, 2.0 * math.pi)
    return round(a * math.cos(t)), round(b * math.sin(t))


def _circle(rng):
    return _ellipse(rng, R, R)


def _parabola(rng):
    x = rng.randint(-R, R)
    return x, round(x * x / R) - R // 2


def generate_labeled(spec: DatasetSpec) -> list:
    """(point, on_curve) pairs after dedupe; on_curve is False only for the square part of ELLIPSE2."""
    rng = random.Random(f"{spec.kind.value}-{spec.seed}")
    out = []
    seen = set()
    for _ in range(spec.n):
        if spec.kind is Kind.RANDOM:
            xy, curve = _square(rng), False
        elif spec.kind is Kind.ELLIPSE:
            xy, curve = _ellipse(rng), True
        elif spec.kind is Kind.ELLIPSE2:
            if rng.random() < ELLIPSE2_CURVE_FRACTION:
                xy, curve = _ellipse(rng), True
            else:
                xy, curve = _square(rng), False
        elif spec.kind is Kind.CIRCLE:
            xy, curve = _circle(rng), True
        else:
            xy, curve = _parabola(rng), True
        if xy in seen:
            continue
        seen.add(xy)
        out.append((make_point(*xy), curve))
    return out


def generate(spec: DatasetSpec) -> list:
    return [p for p, _ in generate_labeled(spec)]


def write_points(path, points) -> None:
    with open(path, "w") as fh:
        fh.write(format_points(points))


def format_points(points) -> str:
    return "".join(f"{p[0]} {p[1]}\n" for p in points)


def parse_points(text: str) -> list:
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'x y', got {line!r}")
        pts.append(make_point(int(parts[0]), int(parts[1])))
    return pts


def read_points(path) -> list:
    return parse_points(Path(path).read_text())
