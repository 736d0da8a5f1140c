"""Disk/triangle configuration codes and exact intersection areas.

A configuration is encoded by the contact counts ``(n1, n2, n3)`` of sides
AB, BC and AC with the circle, ``code = 9*n3 + 3*n2 + n1``.  Contacts on AB
are ordered from A, on BC from B and on AC from C.  A vertex lying on the
circle is a contact of both of its sides.

The 27 codes collapse to ten families; each family is evaluated on a
relabelled triangle (see :func:`canonicalize_case`) by the scalar kernel.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from polydensity import _backend
from polydensity.geom_core import (DEFAULT_EPS, Circle, EpsilonPolicy, Point2, PointLike,
                                   Triangle, as_point2, distance)

REPRESENTATIVES = (0, 1, 5, 8, 12, 13, 14, 17, 18, 26)


class InternalCaseGap(RuntimeError):
    """A configuration matched none of the sub-cases of its family."""


class CaseGapWarning(RuntimeWarning):
    """Emitted when an area had to be recovered by the fallback path."""


@dataclass(frozen=True)
class IntersectionCode:
    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        if not all(n in (0, 1, 2) for n in (self.n1, self.n2, self.n3)):
            raise ValueError("contact counts must be 0, 1 or 2")

    @property
    def code(self) -> int:
        return 9 * self.n3 + 3 * self.n2 + self.n1

    @classmethod
    def from_code(cls, code: int) -> "IntersectionCode":
        if not 0 <= code <= 26:
            raise ValueError("code must lie in [0, 26]")
        return cls(code % 3, (code // 3) % 3, code // 9)


@dataclass(frozen=True)
class CaseContext:
    triangle: Triangle
    circle: Circle
    dA: float
    dB: float
    dC: float
    pts_ab: tuple[Point2, ...]
    pts_bc: tuple[Point2, ...]
    pts_ac: tuple[Point2, ...]
    on_circle_flags: tuple[bool, bool, bool]


class CaseDetail(NamedTuple):
    code: int
    representative: int
    branch: int
    area: float


def classify(t: Triangle, k: Circle,
             eps: EpsilonPolicy = DEFAULT_EPS) -> tuple[IntersectionCode, CaseContext]:
    kern = _backend.kernel()
    r = k.radius
    tol_on, tol = eps.on_circle(r), eps.geometry(r)
    px, py = k.center
    verts = (t.a, t.b, t.c)
    dists = tuple(distance(k.center, v) for v in verts)
    lists = []
    # stored sides run A->B, B->C and C->A
    for u, v in ((t.a, t.b), (t.b, t.c), (t.c, t.a)):
        if distance(u, v) <= tol:
            lists.append(())
            continue
        n, x1, y1, x2, y2 = kern.side_contacts(u.x, u.y, v.x, v.y, px, py, r, tol_on, tol)
        lists.append(tuple([Point2(x1, y1), Point2(x2, y2)][:n]))
    code = IntersectionCode(len(lists[0]), len(lists[1]), len(lists[2]))
    ctx = CaseContext(t, k, *dists, *lists,
                      on_circle_flags=tuple(abs(d - r) <= tol_on for d in dists))
    return code, ctx


def point_in_triangle(p: PointLike, t: Triangle, eps: EpsilonPolicy = DEFAULT_EPS) -> bool:
    p = as_point2(p)
    scale = max(abs(v) for q in (p, *t) for v in q)
    return bool(_backend.kernel().inside_triangle(p.x, p.y, *t.flat(), eps.geometry(scale)))


def _oriented(ctx: CaseContext, i: int, j: int) -> tuple[Point2, ...]:
    stored = {(0, 1): ctx.pts_ab, (1, 2): ctx.pts_bc, (2, 0): ctx.pts_ac}
    if (i, j) in stored:
        return stored[(i, j)]
    return tuple(reversed(stored[(j, i)]))


def canonicalize_case(code: IntersectionCode, ctx: CaseContext
                      ) -> tuple[int, Triangle, CaseContext]:
    """Relabel the triangle so its counts match the family representative.

    The relabelled context keeps the ordering conventions: new AB from the
    new A, new BC from the new B, new AC from the new C.
    """
    rep, i0, i1, i2 = _backend.kernel().family(code.n1, code.n2, code.n3)
    if rep < 0:
        raise InternalCaseGap(f"no family for counts {code}")
    verts = tuple(ctx.triangle)
    dists = (ctx.dA, ctx.dB, ctx.dC)
    t = Triangle(verts[i0], verts[i1], verts[i2])
    relabeled = CaseContext(
        t, ctx.circle, dists[i0], dists[i1], dists[i2],
        _oriented(ctx, i0, i1), _oriented(ctx, i1, i2), _oriented(ctx, i2, i0),
        (ctx.on_circle_flags[i0], ctx.on_circle_flags[i1], ctx.on_circle_flags[i2]))
    return rep, t, relabeled


def triangle_case(t: Triangle, k: Circle, eps: EpsilonPolicy = DEFAULT_EPS) -> CaseDetail:
    """Raw kernel result: code, family, sub-shape branch and area.

    ``code`` is -1 for a degenerate triangle and ``branch`` is -1 when no
    sub-case matched.
    """
    return CaseDetail(*_backend.kernel().triangle_case(
        *t.flat(), k.center.x, k.center.y, k.radius, eps.eps_on_circle, eps.eps_geometry))


def _fallback_area(t: Triangle, k: Circle) -> float:
    from polydensity.disk_polygon import grid_oracle
    from polydensity.polygon import Polygon

    return grid_oracle(Polygon(list(t), validate=False), k.center, k.radius, 4000).estimate


def disk_triangle_area(t: Triangle, k: Circle, eps: EpsilonPolicy = DEFAULT_EPS,
                       strict: bool = False) -> float:
    """Area of ``t`` intersected with the disk bounded by ``k``.

    If the configuration matches no sub-case (only possible at tolerance
    knife edges) the radius is nudged by two on-circle tolerances each way;
    if both retries fail the grid oracle supplies the value and a
    :class:`CaseGapWarning` is emitted. ``strict=True`` raises
    :class:`InternalCaseGap` instead.
    """
    detail = triangle_case(t, k, eps)
    if detail.code < 0 or detail.branch >= 0:
        return detail.area
    if strict:
        raise InternalCaseGap(f"unmatched configuration {detail} for {t}, {k}")
    nudge = 2.0 * eps.on_circle(k.radius)
    for r in (k.radius + nudge, k.radius - nudge):
        if r <= 0:
            continue
        retry = triangle_case(t, Circle(k.center, r), eps)
        if retry.branch >= 0:
            return retry.area
    warnings.warn(f"case gap for {t} and {k}; using grid quadrature", CaseGapWarning,
                  stacklevel=2)
    return min(_fallback_area(t, k), t.area, math.pi * k.radius ** 2)
