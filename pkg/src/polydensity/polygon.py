"""Simple polygons: validation, containment, distances, triangulation, generation."""

from __future__ import annotations

import io
import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from polydensity.geom_core import DEFAULT_EPS, EpsilonPolicy, Point2, PointLike, Triangle, as_point2


class PolygonError(ValueError):
    pass


class TooFewVertices(PolygonError):
    pass


class NotSimple(PolygonError):
    pass


class PolygonFormatError(PolygonError):
    """Malformed polygon file."""


def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _segments_intersect(p, q, a, b) -> np.ndarray:
    """Closed-segment intersection of segment pq against arrays of segments ab."""
    d1 = _orient(a[:, 0], a[:, 1], b[:, 0], b[:, 1], p[0], p[1])
    d2 = _orient(a[:, 0], a[:, 1], b[:, 0], b[:, 1], q[0], q[1])
    d3 = _orient(p[0], p[1], q[0], q[1], a[:, 0], a[:, 1])
    d4 = _orient(p[0], p[1], q[0], q[1], b[:, 0], b[:, 1])
    proper = (d1 * d2 < 0) & (d3 * d4 < 0)

    def on(ux, uy, vx, vy, wx, wy, d):
        return ((d == 0) & (np.minimum(ux, vx) <= wx) & (wx <= np.maximum(ux, vx))
                & (np.minimum(uy, vy) <= wy) & (wy <= np.maximum(uy, vy)))

    touch = (on(a[:, 0], a[:, 1], b[:, 0], b[:, 1], p[0], p[1], d1)
             | on(a[:, 0], a[:, 1], b[:, 0], b[:, 1], q[0], q[1], d2)
             | on(p[0], p[1], q[0], q[1], a[:, 0], a[:, 1], d3)
             | on(p[0], p[1], q[0], q[1], b[:, 0], b[:, 1], d4))
    return proper | touch


class Polygon:
    """Simple polygon with vertices in either orientation, first vertex not repeated."""

    def __init__(self, vertices: Iterable[PointLike], eps: EpsilonPolicy = DEFAULT_EPS,
                 validate: bool = True):
        pts = np.array([tuple(as_point2(v)) for v in vertices], dtype=float).reshape(-1, 2)
        pts.setflags(write=False)
        self._v = pts
        self.eps = eps
        if validate:
            self._validate()

    def _validate(self) -> None:
        v = self._v
        n = len(v)
        if n < 3:
            raise TooFewVertices(f"a polygon needs at least 3 vertices, got {n}")
        tol = self.eps.geometry(float(np.abs(v).max()))
        diff = v[:, None, :] - v[None, :, :]
        dist = np.hypot(diff[..., 0], diff[..., 1])
        np.fill_diagonal(dist, np.inf)
        if (dist <= tol).any():
            i, j = np.argwhere(dist <= tol)[0]
            raise NotSimple(f"vertices {i} and {j} coincide")
        a, b = v, np.roll(v, -1, axis=0)
        for i in range(n):
            # edges sharing a vertex with edge i are skipped
            others = np.array([j for j in range(n) if j not in (i, (i + 1) % n, (i - 1) % n)],
                              dtype=int)
            if len(others) == 0:
                continue
            hit = _segments_intersect(a[i], b[i], a[others], b[others])
            if hit.any():
                raise NotSimple(f"edges {i} and {int(others[np.argmax(hit)])} intersect")
        # adjacent edges may only share their common vertex
        for i in range(n):
            p, q, r = v[i - 1], v[i], v[(i + 1) % n]
            if _orient(*p, *q, *r) == 0 and np.dot(p - q, r - q) > 0:
                raise NotSimple(f"edges meeting at vertex {i} overlap")

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    @property
    def n(self) -> int:
        return len(self._v)

    def __len__(self) -> int:
        return len(self._v)

    def __iter__(self):
        return (Point2(x, y) for x, y in self._v)

    def __repr__(self) -> str:
        return f"Polygon(n={self.n})"

    @cached_property
    def signed_area(self) -> float:
        x, y = self._v[:, 0], self._v[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    @property
    def area(self) -> float:
        return abs(self.signed_area)

    @property
    def perimeter(self) -> float:
        d = np.roll(self._v, -1, axis=0) - self._v
        return float(np.hypot(d[:, 0], d[:, 1]).sum())

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        return self._v, np.roll(self._v, -1, axis=0)


def polygon_area(s: Polygon) -> float:
    return s.area


# ---------------------------------------------------------------------------
# containment and distances


def crossing_numbers(points: np.ndarray, s: Polygon) -> np.ndarray:
    """Crossing counts of rightward horizontal rays from each row of ``points``.

    An edge counts when one endpoint is strictly above the ray and the other
    at or below it, and the crossing lies strictly right of the point.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    a, b = s.edges()
    px, py = pts[:, 0:1], pts[:, 1:2]
    y0, y1 = a[None, :, 1], b[None, :, 1]
    straddle = (y0 > py) != (y1 > py)
    with np.errstate(divide="ignore", invalid="ignore"):
        xc = a[None, :, 0] + (py - y0) * (b[None, :, 0] - a[None, :, 0]) / (y1 - y0)
    return np.count_nonzero(straddle & (xc > px), axis=1)


def crossing_number(p: PointLike, s: Polygon) -> int:
    p = as_point2(p)
    return int(crossing_numbers(np.array([[p.x, p.y]]), s)[0])


def segment_distances(points: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance from each point to the nearest of the segments ``a[i]``-``b[i]``."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    d = b - a
    len2 = (d * d).sum(axis=1)
    rel = pts[:, None, :] - a[None, :, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(len2 > 0, (rel * d[None]).sum(axis=2) / len2, 0.0)
    t = np.clip(t, 0.0, 1.0)
    foot = a[None] + t[..., None] * d[None]
    gap = pts[:, None, :] - foot
    return np.hypot(gap[..., 0], gap[..., 1]).min(axis=1)


def boundary_distance(p: PointLike, s: Polygon) -> float:
    p = as_point2(p)
    a, b = s.edges()
    return float(segment_distances(np.array([[p.x, p.y]]), a, b)[0])


def contains(p: PointLike, s: Polygon) -> bool:
    """Closed containment: on the boundary within tolerance, or odd crossing count."""
    p = as_point2(p)
    scale = max(float(np.abs(s.vertices).max()), abs(p.x), abs(p.y))
    if boundary_distance(p, s) <= s.eps.geometry(scale):
        return True
    return crossing_number(p, s) % 2 == 1


def boundary_distances(p: PointLike, s: Polygon) -> tuple[float, float]:
    """``(dmin, dmax)`` of the distance from ``p`` to points of ``s``.

    ``dmin`` is 0 when ``p`` is inside or on the boundary; ``dmax`` is the
    largest vertex distance.
    """
    p = as_point2(p)
    dmin = 0.0 if contains(p, s) else boundary_distance(p, s)
    dv = s.vertices - np.array([p.x, p.y])
    return dmin, float(np.hypot(dv[:, 0], dv[:, 1]).max())


# ---------------------------------------------------------------------------
# triangulation


@dataclass(frozen=True)
class Triangulation:
    polygon: Polygon
    indices: np.ndarray  # (n - 2, 3) vertex indices, counterclockwise

    @property
    def triangles(self) -> list[Triangle]:
        v = self.polygon.vertices
        return [Triangle(tuple(v[i]), tuple(v[j]), tuple(v[k])) for i, j, k in self.indices]

    def __len__(self) -> int:
        return len(self.indices)

    def flat(self) -> np.ndarray:
        """Triangles as one contiguous ``ax, ay, bx, by, cx, cy`` run each."""
        return np.ascontiguousarray(self.polygon.vertices[self.indices].reshape(-1))

    def areas(self) -> np.ndarray:
        t = self.polygon.vertices[self.indices]
        a, b, c = t[:, 0], t[:, 1], t[:, 2]
        return 0.5 * np.abs(_orient(a[:, 0], a[:, 1], b[:, 0], b[:, 1], c[:, 0], c[:, 1]))


def triangulate(s: Polygon) -> Triangulation:
    """Ear clipping in O(n^2); accepts either orientation.

    An ear at vertex ``i`` is accepted when ``prev(i)``-``next(i)`` is a
    diagonal: it lies locally inside the polygon at both ends and meets no
    edge that is not incident to either end.
    """
    n = s.n
    if n < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {n}")
    v = s.vertices if s.signed_area > 0 else s.vertices[::-1]
    order = np.arange(n) if s.signed_area > 0 else np.arange(n)[::-1]
    nxt = list(range(1, n)) + [0]
    prv = [n - 1] + list(range(n - 1))

    def left(a, b, c):
        return _orient(*v[a], *v[b], *v[c]) > 0

    def left_on(a, b, c):
        return _orient(*v[a], *v[b], *v[c]) >= 0

    def in_cone(a, b):
        a0, a1 = prv[a], nxt[a]
        if left_on(a, a1, a0):
            return left(a, b, a0) and left(b, a, a1)
        return not (left_on(a, b, a1) and left_on(b, a, a0))

    def diagonalie(a, b, alive):
        # alive edges (c, nxt[c]) not touching a or b
        cs = np.array([c for c in alive if c not in (a, b) and nxt[c] not in (a, b)], dtype=int)
        if len(cs) == 0:
            return True
        ends = np.array([nxt[c] for c in cs], dtype=int)
        return not _segments_intersect(v[a], v[b], v[cs], v[ends]).any()

    def diagonal(a, b, alive):
        return in_cone(a, b) and in_cone(b, a) and diagonalie(a, b, alive)

    alive = set(range(n))
    ear = {i: diagonal(prv[i], nxt[i], alive) for i in range(n)}
    tris = []
    remaining = n
    start = 0
    while remaining > 3:
        i = start
        for _ in range(remaining):
            if ear[i]:
                break
            i = nxt[i]
        else:
            raise NotSimple("no ear found; polygon is not simple within floating point")
        a, b = prv[i], nxt[i]
        tris.append((a, i, b))
        alive.discard(i)
        nxt[a], prv[b] = b, a
        remaining -= 1
        ear[a] = diagonal(prv[a], b, alive)
        ear[b] = diagonal(a, nxt[b], alive)
        start = b
    i = next(iter(alive))
    tris.append((prv[i], i, nxt[i]))
    idx = order[np.array(tris, dtype=int)]
    return Triangulation(s, np.ascontiguousarray(idx))


# ---------------------------------------------------------------------------
# generation and I/O


def generate_star_polygon(n: int, r0: float, seed: int) -> Polygon:
    """Random star-shaped polygon with ``4 n`` vertices about the origin.

    Each quadrant receives ``n`` points with uniform polar angle inside the
    quadrant and uniform radius in ``(0, r0]``; vertices are sorted by angle.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not r0 > 0:
        raise ValueError("r0 must be positive")
    rng = np.random.default_rng(seed)
    angles = []
    radii = []
    for q in range(4):
        lo = q * math.pi / 2
        got_a: list[float] = []
        got_r: list[float] = []
        while len(got_a) < n:
            a = lo + rng.uniform(0.0, math.pi / 2)
            r = rng.uniform(0.0, r0)
            if r <= 0.0 or any(abs(a - b) <= 1e-12 for b in got_a):
                continue
            got_a.append(a)
            got_r.append(r)
        angles.extend(got_a)
        radii.extend(got_r)
    angles = np.array(angles)
    radii = np.array(radii)
    k = np.argsort(angles)
    pts = np.column_stack([radii[k] * np.cos(angles[k]), radii[k] * np.sin(angles[k])])
    return Polygon(pts)


def parse_polygon_csv(text: str, eps: EpsilonPolicy = DEFAULT_EPS) -> Polygon:
    """Parse ``x,y`` lines whose last line repeats the first vertex."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise PolygonFormatError(f"line {lineno}: expected 'x,y', got {line!r}")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise PolygonFormatError(f"line {lineno}: {exc}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise PolygonFormatError(f"line {lineno}: non-finite coordinate")
        rows.append((x, y))
    if len(rows) < 2:
        raise PolygonFormatError("polygon file needs its first vertex repeated at the end")
    first, last = np.array(rows[0]), np.array(rows[-1])
    scale = max(abs(v) for r in rows for v in r)
    if np.hypot(*(first - last)) > eps.geometry(scale):
        raise PolygonFormatError("polygon is not closed: last line must repeat the first vertex")
    return Polygon(rows[:-1], eps)


def read_polygon_csv(path: str | os.PathLike, eps: EpsilonPolicy = DEFAULT_EPS) -> Polygon:
    with open(path, encoding="utf-8") as fh:
        return parse_polygon_csv(fh.read(), eps)


def format_polygon_csv(s: Polygon | Sequence[PointLike]) -> str:
    pts = s.vertices if isinstance(s, Polygon) else np.array([tuple(as_point2(p)) for p in s])
    buf = io.StringIO()
    for x, y in list(pts) + [pts[0]]:
        buf.write(f"{x:.17g},{y:.17g}\n")
    return buf.getvalue()


def write_polygon_csv(s: Polygon, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_polygon_csv(s))
