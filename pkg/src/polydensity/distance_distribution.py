"""Distribution of the distance from a fixed point to a uniform point of a set.

For a source set S and a point P the CDF is ``F(d) = |D(P, d) ∩ S| / |S|``
with ``|.|`` the area (length for a segment, volume for a ball). Densities
are central differences of F on an equally spaced grid strictly inside the
support.
"""

from __future__ import annotations

import io
import math
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from polydensity.disk_polygon import disk_polygon_areas
from polydensity.geom_core import (DEFAULT_EPS, DegenerateSegment, EpsilonPolicy, Point2, Point3,
                                   PointLike, as_point2, as_point3)
from polydensity.polygon import Polygon, Triangulation, boundary_distances, segment_distances, triangulate

_trapezoid = getattr(np, "trapezoid", None) or np.trapz


# ---------------------------------------------------------------------------
# source sets


@dataclass(frozen=True)
class PolygonSource:
    polygon: Polygon
    triangulation: Triangulation | None = field(default=None, compare=False)

    kind = "polygon"


@dataclass(frozen=True)
class DiskSource:
    center: Point2
    rho: float

    kind = "disk"

    def __post_init__(self):
        object.__setattr__(self, "center", as_point2(self.center))
        if not self.rho > 0:
            raise ValueError("rho must be positive")


@dataclass(frozen=True)
class BallSource:
    center: Point3
    rho: float

    kind = "ball"

    def __post_init__(self):
        object.__setattr__(self, "center", as_point3(self.center))
        if not self.rho > 0:
            raise ValueError("rho must be positive")


@dataclass(frozen=True)
class SegmentSource:
    a: Point2
    b: Point2

    kind = "segment"

    def __post_init__(self):
        object.__setattr__(self, "a", as_point2(self.a))
        object.__setattr__(self, "b", as_point2(self.b))
        if math.hypot(self.b.x - self.a.x, self.b.y - self.a.y) <= DEFAULT_EPS.geometry(
                max(abs(v) for v in (*self.a, *self.b))):
            raise DegenerateSegment("segment endpoints coincide")


Source = Union[PolygonSource, DiskSource, BallSource, SegmentSource, Polygon]


# ---------------------------------------------------------------------------
# closed-form CDFs (vectorized over d)


def _two_disk_area(c: float, r1: np.ndarray, r2: float) -> np.ndarray:
    """Area of the intersection of disks with radii ``r1`` and ``r2`` at center distance ``c``."""
    r1 = np.asarray(r1, dtype=float)
    out = np.where(c >= r1 + r2, 0.0, math.pi * np.minimum(r1, r2) ** 2)
    lens = (c < r1 + r2) & (c > np.abs(r1 - r2))
    if lens.any():
        a = r1[lens]
        ca = np.clip((c * c + a * a - r2 * r2) / (2 * c * a), -1.0, 1.0)
        cb = np.clip((c * c + r2 * r2 - a * a) / (2 * c * r2), -1.0, 1.0)
        k = (-c + a + r2) * (c + a - r2) * (c - a + r2) * (c + a + r2)
        out[lens] = a * a * np.arccos(ca) + r2 * r2 * np.arccos(cb) - 0.5 * np.sqrt(np.maximum(k, 0.0))
    return out


def _two_ball_volume(c: float, r1: np.ndarray, r2: float) -> np.ndarray:
    r1 = np.asarray(r1, dtype=float)
    out = np.where(c >= r1 + r2, 0.0, 4.0 / 3.0 * math.pi * np.minimum(r1, r2) ** 3)
    lens = (c < r1 + r2) & (c > np.abs(r1 - r2))
    if lens.any():
        a = r1[lens]
        out[lens] = (math.pi * (a + r2 - c) ** 2
                     * (c * c + 2 * c * (a + r2) - 3 * (a - r2) ** 2) / (12 * c))
    return out


def _as_radii(d) -> tuple[np.ndarray, bool]:
    arr = np.asarray(d, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def _finish(values: np.ndarray, scalar: bool):
    values = np.clip(values, 0.0, 1.0)
    return float(values[0]) if scalar else values


def cdf_disk_source(center: PointLike, rho: float, p: PointLike, d):
    c0, q = as_point2(center), as_point2(p)
    r, scalar = _as_radii(d)
    c = math.hypot(q.x - c0.x, q.y - c0.y)
    pos = np.maximum(r, 0.0)
    return _finish(_two_disk_area(c, pos, rho) / (math.pi * rho * rho), scalar)


def cdf_ball_source(center, rho: float, p, d):
    c0, q = as_point3(center), as_point3(p)
    r, scalar = _as_radii(d)
    c = math.dist(tuple(c0), tuple(q))
    pos = np.maximum(r, 0.0)
    return _finish(_two_ball_volume(c, pos, rho) / (4.0 / 3.0 * math.pi * rho ** 3), scalar)


def cdf_segment_source(a: PointLike, b: PointLike, p: PointLike, d):
    """Fraction of the segment within distance ``d`` of ``p``: a quadratic-root interval in t."""
    src = SegmentSource(a, b)
    q = as_point2(p)
    r, scalar = _as_radii(d)
    dx, dy = src.b.x - src.a.x, src.b.y - src.a.y
    wx, wy = q.x - src.a.x, q.y - src.a.y
    aa = dx * dx + dy * dy
    bb = wx * dx + wy * dy
    cc = wx * wx + wy * wy - np.maximum(r, 0.0) ** 2
    disc = bb * bb - aa * cc
    root = np.sqrt(np.maximum(disc, 0.0))
    t0 = np.clip((bb - root) / aa, 0.0, 1.0)
    t1 = np.clip((bb + root) / aa, 0.0, 1.0)
    return _finish(np.where(disc >= 0.0, t1 - t0, 0.0), scalar)


def cdf_polygon(s: Polygon, p: PointLike, d, tri: Triangulation | None = None,
                eps: EpsilonPolicy = DEFAULT_EPS, threads: int = 1):
    r, scalar = _as_radii(d)
    pos = r > 0
    areas = np.zeros(len(r))
    if pos.any():
        areas[pos] = disk_polygon_areas(s, p, r[pos], tri, eps, threads)
    return _finish(areas / s.area, scalar)


# ---------------------------------------------------------------------------
# distributions and density grids


@dataclass(frozen=True)
class DistanceDistribution:
    dmin: float
    dmax: float
    source_kind: str
    cdf_many: Callable[[np.ndarray], np.ndarray] = field(repr=False, compare=False)

    def cdf(self, d):
        r, scalar = _as_radii(d)
        return _finish(self.cdf_many(r), scalar)

    __call__ = cdf


@dataclass(frozen=True)
class DensityGrid:
    points: np.ndarray
    values: np.ndarray
    elapsed: float
    dmin: float
    dmax: float
    threads: int = 1

    def __len__(self) -> int:
        return len(self.points)

    def integral(self) -> float:
        """Trapezoid integral of the sampled density."""
        return float(_trapezoid(self.values, self.points))

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("x,density\n")
        for x, v in zip(self.points, self.values):
            buf.write(f"{x:.17g},{v:.17g}\n")
        buf.write(f"# dmin={self.dmin:.17g}\n# dmax={self.dmax:.17g}\n")
        buf.write(f"# elapsed_s={self.elapsed:.17g}\n")
        return buf.getvalue()

    def write_csv(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_csv())


def _segment_support(src: SegmentSource, q: Point2) -> tuple[float, float]:
    a = np.array([[src.a.x, src.a.y]])
    b = np.array([[src.b.x, src.b.y]])
    dmin = float(segment_distances(np.array([[q.x, q.y]]), a, b)[0])
    dmax = max(math.dist(tuple(q), tuple(src.a)), math.dist(tuple(q), tuple(src.b)))
    return dmin, dmax


def distribution_of(source: Source, p, eps: EpsilonPolicy = DEFAULT_EPS,
                    threads: int = 1) -> DistanceDistribution:
    if isinstance(source, Polygon):
        source = PolygonSource(source)
    if isinstance(source, PolygonSource):
        s = source.polygon
        tri = source.triangulation or triangulate(s)
        q = as_point2(p)
        dmin, dmax = boundary_distances(q, s)
        return DistanceDistribution(dmin, dmax, "polygon",
                                    lambda r: cdf_polygon(s, q, r, tri, eps, threads))
    if isinstance(source, DiskSource):
        q = as_point2(p)
        c = math.dist(tuple(q), tuple(source.center))
        return DistanceDistribution(max(c - source.rho, 0.0), c + source.rho, "disk",
                                    lambda r: cdf_disk_source(source.center, source.rho, q, r))
    if isinstance(source, BallSource):
        q = as_point3(p)
        c = math.dist(tuple(q), tuple(source.center))
        return DistanceDistribution(max(c - source.rho, 0.0), c + source.rho, "ball",
                                    lambda r: cdf_ball_source(source.center, source.rho, q, r))
    if isinstance(source, SegmentSource):
        q = as_point2(p)
        dmin, dmax = _segment_support(source, q)
        return DistanceDistribution(dmin, dmax, "segment",
                                    lambda r: cdf_segment_source(source.a, source.b, q, r))
    raise TypeError(f"unsupported source {type(source).__name__}")


def grid_abscissae(dmin: float, dmax: float, np_: int) -> tuple[np.ndarray, float]:
    """``x_i = dmin + i (dmax - dmin) / (np + 1)``, ``i = 1..np``, and the spacing."""
    step = (dmax - dmin) / (np_ + 1)
    return dmin + step * np.arange(1, np_ + 1), step


def density_of(source: Source, p, np_: int, eps: EpsilonPolicy = DEFAULT_EPS,
               threads: int = 1) -> DensityGrid:
    """Central-difference density with half-step ``h = (dmax - dmin) / (2 (np + 1))``.

    The CDF is evaluated once at the ``np + 1`` half-way points between
    consecutive abscissae (and the outer half-steps), so each estimate is
    ``(F(x_i + h) - F(x_i - h)) / (2 h)``. The elapsed time covers the whole
    call, triangulation included.
    """
    if np_ < 2:
        raise ValueError("np must be at least 2")
    start = time.perf_counter()
    dist = distribution_of(source, p, eps, threads)
    x, step = grid_abscissae(dist.dmin, dist.dmax, np_)
    edges = dist.dmin + step * (np.arange(np_ + 1) + 0.5)
    f = dist.cdf_many(edges)
    values = np.maximum(np.diff(f) / step, 0.0)
    elapsed = time.perf_counter() - start
    return DensityGrid(x, values, elapsed, dist.dmin, dist.dmax, threads)


def density_polygon(s: Polygon, p: PointLike, np_: int, eps: EpsilonPolicy = DEFAULT_EPS,
                    threads: int = 1) -> DensityGrid:
    return density_of(PolygonSource(s), p, np_, eps, threads)


# ---------------------------------------------------------------------------
# rectangle reference


def _half_sides(L: float, alpha: float) -> tuple[float, float]:
    if not (L > 0 and 0 < alpha <= 1):
        raise ValueError("need L > 0 and 0 < alpha <= 1")
    return L / 2.0, alpha * L / 2.0


def rectangle_center_reference(L: float, alpha: float, x):
    """Exact density of the distance from the center of an ``L`` by ``alpha L`` rectangle.

    The circle of radius x centered in the rectangle keeps the angle
    ``2 pi - 4 acos(b/x) - 4 acos(a/x)`` (terms present once x exceeds the
    half-side), so ``f(x) = x * angle / (4 a b)``.
    """
    a, b = _half_sides(L, alpha)
    r, scalar = _as_radii(x)
    out = np.zeros(len(r))
    pos = r > 0
    xs = r[pos]
    with np.errstate(divide="ignore"):
        angle = (4.0 * np.arcsin(np.minimum(b / xs, 1.0))
                 - 4.0 * np.arccos(np.minimum(a / xs, 1.0)))
    out[pos] = np.maximum(xs * angle / (4.0 * a * b), 0.0)
    return float(out[0]) if scalar else out


def rectangle_center_cdf(L: float, alpha: float, x):
    """Exact CDF for the centered point: disk area minus edge caps plus corner overlaps."""
    a, b = _half_sides(L, alpha)
    r, scalar = _as_radii(x)
    x2 = np.maximum(r, 0.0) ** 2
    xs = np.sqrt(x2)

    def cap(h):
        inside = xs > h
        safe = np.where(inside, xs, 1.0)
        val = x2 * np.arccos(np.minimum(h / safe, 1.0)) - h * np.sqrt(np.maximum(x2 - h * h, 0.0))
        return np.where(inside, val, 0.0)

    def g(u):
        safe = np.where(xs > 0, xs, 1.0)
        return 0.5 * (u * np.sqrt(np.maximum(x2 - u * u, 0.0))
                      + x2 * np.arcsin(np.clip(u / safe, -1.0, 1.0)))

    corner_on = x2 > a * a + b * b
    u_hi = np.sqrt(np.maximum(x2 - b * b, a * a))
    corner = np.where(corner_on, g(u_hi) - g(a) - b * (u_hi - a), 0.0)
    area = math.pi * x2 - 2.0 * cap(b) - 2.0 * cap(a) + 4.0 * corner
    return _finish(area / (4.0 * a * b), scalar)
