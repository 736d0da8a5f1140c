"""Areas of the two pieces of a disk cut by a chord."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from polydensity import _backend
from polydensity.geom_core import (DEFAULT_EPS, Circle, EpsilonPolicy, GeometryError, Point2,
                                   as_point2, distance)


class ChordEndpointsOffCircle(GeometryError):
    pass


class CoincidentChordEndpoints(GeometryError):
    pass


@dataclass(frozen=True)
class Lens:
    """Chord ``chord_a``-``chord_b`` of ``circle``; endpoints are validated on construction."""

    circle: Circle
    chord_a: Point2
    chord_b: Point2
    eps: EpsilonPolicy = field(default=DEFAULT_EPS, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "chord_a", as_point2(self.chord_a))
        object.__setattr__(self, "chord_b", as_point2(self.chord_b))
        r = self.circle.radius
        tol_on = self.eps.on_circle(r)
        for q in (self.chord_a, self.chord_b):
            if abs(distance(self.circle.center, q) - r) > tol_on:
                raise ChordEndpointsOffCircle(f"{q} is not on the circle")
        if distance(self.chord_a, self.chord_b) <= self.eps.geometry(r):
            raise CoincidentChordEndpoints("chord endpoints coincide")


def minor_lens_area(lens: Lens) -> float:
    k = lens.circle
    return _backend.kernel().minor_lens(
        lens.chord_a.x, lens.chord_a.y, lens.chord_b.x, lens.chord_b.y,
        k.center.x, k.center.y, k.radius, lens.eps.geometry(k.radius))


def major_lens_area(lens: Lens) -> float:
    return math.pi * lens.circle.radius ** 2 - minor_lens_area(lens)
