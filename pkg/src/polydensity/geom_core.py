"""Planar primitives, distances, the half-space predicate and segment/circle contacts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from polydensity import _backend


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateLine(GeometryError):
    pass


class DegenerateSegment(GeometryError):
    pass


class InvalidNormal(GeometryError):
    pass


def _finite(*values: float) -> None:
    if not all(math.isfinite(v) for v in values):
        raise GeometryError(f"non-finite coordinate in {values}")


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        _finite(self.x, self.y)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y


@dataclass(frozen=True, slots=True)
class Point3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for f in ("x", "y", "z"):
            object.__setattr__(self, f, float(getattr(self, f)))
        _finite(self.x, self.y, self.z)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y
        yield self.z


PointLike = Union[Point2, Sequence[float]]


def as_point2(p: PointLike) -> Point2:
    return p if isinstance(p, Point2) else Point2(*p)


def as_point3(p) -> Point3:
    return p if isinstance(p, Point3) else Point3(*p)


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point2
    b: Point2

    def __post_init__(self):
        object.__setattr__(self, "a", as_point2(self.a))
        object.__setattr__(self, "b", as_point2(self.b))

    @property
    def length(self) -> float:
        return distance(self.a, self.b)


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point2(self.center))
        r = float(self.radius)
        if not (math.isfinite(r) and r > 0.0):
            raise GeometryError(f"circle radius must be positive and finite, got {self.radius}")
        object.__setattr__(self, "radius", r)

    @property
    def area(self) -> float:
        return math.pi * self.radius * self.radius


@dataclass(frozen=True, slots=True)
class Triangle:
    a: Point2
    b: Point2
    c: Point2

    def __post_init__(self):
        for f in ("a", "b", "c"):
            object.__setattr__(self, f, as_point2(getattr(self, f)))

    def __iter__(self) -> Iterator[Point2]:
        yield self.a
        yield self.b
        yield self.c

    @property
    def area(self) -> float:
        return triangle_area(self.a, self.b, self.c)

    def flat(self) -> tuple[float, float, float, float, float, float]:
        return (self.a.x, self.a.y, self.b.x, self.b.y, self.c.x, self.c.y)


@dataclass(frozen=True, slots=True)
class EpsilonPolicy:
    """Relative tolerances; absolute values are ``eps * max(scale, 1)``.

    The scale is the circle radius for circle queries and the largest
    coordinate magnitude for purely linear ones.
    """

    eps_on_circle: float = 1e-9
    eps_geometry: float = 1e-11

    def __post_init__(self):
        if not (self.eps_on_circle > 0 and self.eps_geometry > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.eps_on_circle < self.eps_geometry:
            raise ValueError("eps_on_circle must be at least eps_geometry")

    def on_circle(self, scale: float) -> float:
        return self.eps_on_circle * max(abs(scale), 1.0)

    def geometry(self, scale: float) -> float:
        return self.eps_geometry * max(abs(scale), 1.0)


DEFAULT_EPS = EpsilonPolicy()


def distance(p: PointLike, q: PointLike) -> float:
    p, q = as_point2(p), as_point2(q)
    return math.hypot(q.x - p.x, q.y - p.y)


def triangle_area(a: PointLike, b: PointLike, c: PointLike) -> float:
    a, b, c = as_point2(a), as_point2(b), as_point2(c)
    return 0.5 * abs(a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))


def same_half_space(c: PointLike, p: PointLike, a: PointLike, b: PointLike,
                    eps: EpsilonPolicy = DEFAULT_EPS) -> int:
    """1 if ``c`` and ``p`` are not strictly separated by the line through ``a`` and ``b``.

    Near-vertical lines compare abscissae; otherwise the signed vertical
    offsets from the line are multiplied. Offsets within tolerance count as
    lying on the line, hence on the same side.
    """
    c, p, a, b = as_point2(c), as_point2(p), as_point2(a), as_point2(b)
    tol = eps.geometry(max(abs(v) for v in (*a, *b, *c, *p)))
    if distance(a, b) <= tol:
        raise DegenerateLine("line points coincide")
    if abs(a.x - b.x) <= tol:
        return 1 if (a.x - p.x) * (a.x - c.x) >= 0.0 else 0
    slope = (b.y - a.y) / (b.x - a.x)
    op = p.y - (a.y + slope * (p.x - a.x))
    oc = c.y - (a.y + slope * (c.x - a.x))
    # vertical offsets become perpendicular distances after dividing by the secant
    scale = math.sqrt(1.0 + slope * slope)
    if abs(op) / scale <= tol or abs(oc) / scale <= tol:
        return 1
    return 1 if op * oc >= 0.0 else 0


def segment_circle_intersections(s: Segment, k: Circle,
                                 eps: EpsilonPolicy = DEFAULT_EPS) -> list[Point2]:
    """Contacts of a closed segment with a circle, ordered from ``s.a``.

    An endpoint within the on-circle tolerance counts as a contact; a
    tangency within that tolerance yields exactly one point. Points are
    snapped onto the circle.
    """
    tol_on = eps.on_circle(k.radius)
    tol = eps.geometry(k.radius)
    if s.length <= tol:
        raise DegenerateSegment("segment endpoints coincide")
    n, x1, y1, x2, y2 = _backend.kernel().side_contacts(
        s.a.x, s.a.y, s.b.x, s.b.y, k.center.x, k.center.y, k.radius, tol_on, tol)
    return [Point2(x1, y1), Point2(x2, y2)][:n]


def plane_basis(normal: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Two orthonormal vectors spanning the plane with the given unit normal."""
    n = np.asarray(normal, dtype=float)
    helper = np.zeros(3)
    helper[int(np.argmin(np.abs(n)))] = 1.0
    u = np.cross(n, helper)
    u /= np.linalg.norm(u)
    return u, np.cross(n, u)


def reduce_to_plane(p, plane_origin, plane_normal, r: float,
                    eps: EpsilonPolicy = DEFAULT_EPS) -> tuple[Point2, float] | None:
    """Project a ball onto a plane: in-plane center and radius of the cut disk.

    Returns ``None`` when the ball misses the plane. In-plane coordinates use
    :func:`plane_basis` with ``plane_origin`` as origin.
    """
    p, o = as_point3(p), as_point3(plane_origin)
    n = np.asarray(plane_normal, dtype=float)
    if n.shape != (3,) or abs(float(np.linalg.norm(n)) - 1.0) > eps.geometry(1.0):
        raise InvalidNormal("plane normal must have unit length")
    if not r > 0:
        raise GeometryError("radius must be positive")
    rel = np.array([p.x - o.x, p.y - o.y, p.z - o.z])
    h = abs(float(rel @ n))
    tol_on = eps.on_circle(r)
    if h > r + tol_on:
        return None
    u, v = plane_basis(n)
    foot = Point2(float(rel @ u), float(rel @ v))
    radius = math.sqrt(max(r * r - h * h, 0.0)) if h < r - tol_on else 0.0
    return foot, radius
