"""Exact geometric predicates on integer points.

Coordinates are bounded by 2**24 in absolute value, so every predicate is
evaluated exactly with Python integers. Orientation and squared distance are
degree 2 polynomials in the coordinates; the in-circle test is degree 4.
"""
from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple

COORD_BOUND = 1 << 24


class CoordinateOutOfRange(ValueError):
    pass


class Point(NamedTuple):
    x: int
    y: int


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class CirclePosition(IntEnum):
    OUTSIDE = -1
    COCIRCULAR = 0
    INSIDE = 1


def make_point(x, y) -> Point:
    """Validate and build a point. This is the only place the bound is checked."""
    if int(x) != x or int(y) != y:
        raise CoordinateOutOfRange(f"non-integer coordinates ({x}, {y})")
    x, y = int(x), int(y)
    if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
        raise CoordinateOutOfRange(f"({x}, {y}) outside [-2**24, 2**24]")
    return Point(x, y)


def orient2d(a, b, c) -> int:
    """Twice the signed area of abc (positive when counterclockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def incircle_det(a, b, c, d) -> int:
    """Positive iff d lies inside the circle through the ccw triangle abc."""
    adx = a[0] - d[0]
    ady = a[1] - d[1]
    bdx = b[0] - d[0]
    bdy = b[1] - d[1]
    cdx = c[0] - d[0]
    cdy = c[1] - d[1]
    return ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
            + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
            + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def orientation(a, b, c) -> Orientation:
    return Orientation(_sign(orient2d(a, b, c)))


def in_circle(a, b, c, d) -> CirclePosition:
    """Position of d relative to the circumcircle of the ccw triangle abc.

    Raises ValueError (when assertions are enabled) if abc is not ccw.
    """
    if __debug__ and orient2d(a, b, c) <= 0:
        raise ValueError("in_circle requires a counterclockwise triangle")
    return CirclePosition(_sign(incircle_det(a, b, c, d)))


def squared_distance(a, b) -> int:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def angle_acute_at(w, q, w2) -> bool:
    """True iff the angle q-w-w2 is strictly smaller than a right angle."""
    return (q[0] - w[0]) * (w2[0] - w[0]) + (q[1] - w[1]) * (w2[1] - w[1]) > 0
