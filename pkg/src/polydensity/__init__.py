"""Exact disk/polygon intersection areas and distance distributions.

The hot disk/triangle kernel is compiled with Cython when available and
falls back to an identical pure-Python implementation otherwise; see
:func:`backend`.
"""

from polydensity import _backend
from polydensity.circular_regions import Lens, major_lens_area, minor_lens_area
from polydensity.disk_polygon import (OracleReport, disk_polygon_area, disk_polygon_areas,
                                      grid_oracle, monte_carlo_oracle)
from polydensity.disk_triangle import (CaseGapWarning, IntersectionCode, InternalCaseGap,
                                       canonicalize_case, classify, disk_triangle_area,
                                       point_in_triangle)
from polydensity.distance_distribution import (BallSource, DensityGrid, DiskSource,
                                               DistanceDistribution, PolygonSource, SegmentSource,
                                               cdf_ball_source, cdf_disk_source, cdf_polygon,
                                               cdf_segment_source, density_of, density_polygon,
                                               distribution_of, rectangle_center_reference)
from polydensity.geom_core import (Circle, EpsilonPolicy, Point2, Point3, Segment, Triangle,
                                   distance, reduce_to_plane, same_half_space,
                                   segment_circle_intersections, triangle_area)
from polydensity.polygon import (Polygon, Triangulation, boundary_distances, crossing_number,
                                 generate_star_polygon, polygon_area, triangulate)

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active kernel: ``"compiled"`` or ``"pure"``."""
    return _backend.name()
