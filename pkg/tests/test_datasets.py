import math

import pytest

from delaunay_hierarchy.datasets import (
    DatasetSpec, Kind, format_points, generate, generate_labeled, parse_points,
    read_points, write_points,
)
from delaunay_hierarchy.predicates import COORD_BOUND, CoordinateOutOfRange


@pytest.mark.parametrize("kind", list(Kind))
def test_bound_and_determinism(kind):
    spec = DatasetSpec(kind, 500, seed=3)
    pts = generate(spec)
    assert pts == generate(spec)
    assert len(set(pts)) == len(pts) <= 500
    assert all(abs(x) <= COORD_BOUND and abs(y) <= COORD_BOUND for x, y in pts)
    assert format_points(pts) == format_points(generate(DatasetSpec(kind.value, 500, 3)))


def test_random_small():
    pts = generate(DatasetSpec(Kind.RANDOM, 5, seed=1))
    assert len(pts) == 5
    assert pts != generate(DatasetSpec(Kind.RANDOM, 5, seed=2))


def test_circle_rounding_band():
    r = COORD_BOUND
    pts = generate(DatasetSpec(Kind.CIRCLE, 10_000, seed=0))
    assert max(abs(x * x + y * y - r * r) for x, y in pts) <= 3 * r


def test_ellipse_on_curve():
    a, b = COORD_BOUND, COORD_BOUND // 2
    pts = generate(DatasetSpec(Kind.ELLIPSE, 2000, seed=0))
    assert max(abs((x / a) ** 2 + (y / b) ** 2 - 1) for x, y in pts) < 1e-6


def test_parabola_on_curve():
    pts = generate(DatasetSpec(Kind.PARABOLA, 2000, seed=0))
    for x, y in pts:
        assert abs(y + COORD_BOUND // 2 - x * x / COORD_BOUND) <= 0.5


def test_ellipse2_split():
    labeled = generate_labeled(DatasetSpec(Kind.ELLIPSE2, 10_000, seed=0))
    n = len(labeled)
    on_curve = sum(1 for _, c in labeled if c)
    sigma = math.sqrt(n * 0.95 * 0.05)
    assert abs(on_curve - 0.95 * n) <= 3 * sigma


def test_invalid_spec():
    with pytest.raises(ValueError):
        DatasetSpec(Kind.RANDOM, 0)
    with pytest.raises(ValueError):
        DatasetSpec("spiral", 10)


def test_point_file_roundtrip(tmp_path):
    pts = generate(DatasetSpec(Kind.RANDOM, 50, seed=4))
    path = tmp_path / "pts.txt"
    write_points(path, pts)
    assert read_points(path) == pts


def test_parse_comments_and_errors():
    assert parse_points("# header\n1 2\n\n-3 4  # trailing\n") == [(1, 2), (-3, 4)]
    with pytest.raises(ValueError):
        parse_points("1 2 3\n")
    with pytest.raises(CoordinateOutOfRange):
        parse_points(f"{COORD_BOUND + 1} 0\n")
