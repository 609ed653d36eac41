"""Dynamic planar Delaunay triangulation with a randomized multi-level location hierarchy."""
from .datasets import DatasetSpec, Kind, generate, read_points, write_points
from .hierarchy import (EmptyStructure, Hierarchy, HierarchyConfig, SiteRecord,
                        UnknownHandle, msz_sample_size)
from .predicates import (CirclePosition, CoordinateOutOfRange, Orientation, Point,
                         angle_acute_at, in_circle, make_point, orientation,
                         squared_distance)
from .trace import LevelCounters, LocateTrace
from .triangulation import DuplicatePoint, Phase3Mode, Triangulation

__all__ = [
    "CirclePosition", "CoordinateOutOfRange", "DatasetSpec", "DuplicatePoint",
    "EmptyStructure", "Hierarchy", "HierarchyConfig", "Kind", "LevelCounters",
    "LocateTrace", "Orientation", "Phase3Mode", "Point", "SiteRecord", "Triangulation",
    "UnknownHandle", "angle_acute_at", "generate", "in_circle", "make_point",
    "msz_sample_size", "orientation", "read_points", "squared_distance", "write_points",
]
