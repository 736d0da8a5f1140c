"""Harvest one disk/triangle configuration per reachable (code, branch) pair.

Random triangles cover the generic shapes; constructions with sides tangent
to the circle and vertices on it cover the tangential ones. Each kept
configuration records the exact area from the independent edge-wise
reference in tests/reference.py.

    python tools/make_case_fixtures.py tests/fixtures/case_fixtures.json
"""

import json
import math
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from reference import disk_polygon_area_exact  # noqa: E402

from polydensity import _kernel  # noqa: E402


def on_circle(rng, px, py, r):
    a = rng.uniform(0, 2 * math.pi)
    return (px + r * math.cos(a), py + r * math.sin(a))


def random_point(rng, px, py, r):
    mode = rng.random()
    if mode < 0.25:
        return on_circle(rng, px, py, r)
    if mode < 0.6:
        rr = r * rng.random()
        a = rng.uniform(0, 2 * math.pi)
        return (px + rr * math.cos(a), py + rr * math.sin(a))
    return (px + rng.uniform(-3, 3) * r, py + rng.uniform(-3, 3) * r)


def tangent(px, py, r, th):
    return (px + r * math.cos(th), py + r * math.sin(th)), (-math.sin(th), math.cos(th))


def meet(p1, d1, p2, d2):
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(den) < 1e-9:
        return None
    t = ((p2[0] - p1[0]) * d2[1] - (p2[1] - p1[1]) * d2[0]) / den
    return (p1[0] + t * d1[0], p1[1] + t * d1[1])


def along(line, s):
    (tx, ty), (dx, dy) = line
    return (tx + s * dx, ty + s * dy)


def tangential(rng, px, py, r):
    mode = rng.randrange(6)
    th = rng.uniform(0, 2 * math.pi)
    line = tangent(px, py, r, th)
    if mode == 0:
        lines = [tangent(px, py, r, t) for t in sorted(rng.uniform(0, 2 * math.pi) for _ in range(3))]
        pts = [meet(*lines[i], *lines[(i + 1) % 3]) for i in range(3)]
        return None if None in pts else pts
    if mode == 1:
        third = random_point(rng, px, py, r)
        return [along(line, rng.uniform(-3, 3) * r), along(line, rng.uniform(-3, 3) * r), third]
    if mode == 2:
        other = tangent(px, py, r, rng.uniform(0, 2 * math.pi))
        apex = meet(*line, *other)
        if apex is None:
            return None
        return [along(line, rng.uniform(-4, 4) * r), along(other, rng.uniform(-4, 4) * r), apex]
    if mode == 3:
        return [along(line, rng.uniform(0.1, 3) * r), along(line, -rng.uniform(0.1, 3) * r),
                on_circle(rng, px, py, r)]
    if mode == 4:
        return [line[0], along(line, rng.uniform(-3, 3) * r),
                (px + rng.uniform(-3, 3) * r, py + rng.uniform(-3, 3) * r)]
    return [on_circle(rng, px, py, r), along(line, rng.uniform(-4, 4) * r),
            along(line, rng.uniform(-4, 4) * r)]


def harvest(seed=2024, rounds=400_000):
    rng = random.Random(seed)
    found = {}
    for it in range(rounds):
        r = rng.uniform(0.2, 3)
        px, py = rng.uniform(-1, 1), rng.uniform(-1, 1)
        if it % 2:
            pts = tangential(rng, px, py, r)
            if pts is None:
                continue
            rng.shuffle(pts)
        else:
            pts = [random_point(rng, px, py, r) for _ in range(3)]
        code, rep, branch, area = _kernel.triangle_case(*pts[0], *pts[1], *pts[2], px, py, r,
                                                        1e-9, 1e-11)
        if code < 0 or branch < 0 or (code, branch) in found:
            continue
        exact = disk_polygon_area_exact(pts, (px, py), r)
        if abs(exact - area) > 1e-8 * max(1.0, r * r):
            raise SystemExit(f"kernel disagrees with reference at {pts}, {(px, py)}, {r}")
        found[(code, branch)] = {
            "code": code, "representative": rep, "branch": branch,
            "triangle": [list(p) for p in pts], "center": [px, py], "radius": r,
            "exact_area": exact,
        }
    return [found[k] for k in sorted(found)]


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/case_fixtures.json")
    fixtures = harvest()
    payload = {
        "note": "one configuration per reachable (code, branch) pair; eps_on=1e-9, eps_geom=1e-11",
        "fixtures": fixtures,
    }
    out.write_text(json.dumps(payload, indent=1) + "\n")
    print(f"{len(fixtures)} fixtures written to {out}")


if __name__ == "__main__":
    main()
