import itertools
import json
import math

import numpy as np
import pytest

from conftest import FIXTURES
from polydensity import disk_triangle as dt
from polydensity.disk_polygon import grid_oracle
from polydensity.disk_triangle import (CaseGapWarning, IntersectionCode, InternalCaseGap,
                                       canonicalize_case, classify, disk_triangle_area,
                                       point_in_triangle, triangle_case)
from polydensity.geom_core import Circle, Triangle
from polydensity.polygon import Polygon
from reference import disk_polygon_area_exact

CASES = json.loads((FIXTURES / "case_fixtures.json").read_text())["fixtures"]

FAMILY_COUNTS = {0: (0, 0, 0), 1: (1, 0, 0), 18: (0, 0, 2), 12: (0, 1, 1), 5: (2, 1, 0),
                 8: (2, 2, 0), 13: (1, 1, 1), 14: (2, 1, 1), 17: (2, 2, 1), 26: (2, 2, 2)}


def random_pair(rng, spread=2.0):
    r = rng.uniform(0.2, 3.0)
    center = rng.uniform(-1, 1, 2)
    verts = center + rng.uniform(-spread, spread, (3, 2)) * r
    return Triangle(*map(tuple, verts)), Circle(tuple(center), r)


def test_triangle_inside_disk():
    t = Triangle((0, 0), (1, 0), (0, 1))
    assert disk_triangle_area(t, Circle((0.25, 0.25), 10)) == pytest.approx(0.5)


def test_disk_inside_triangle():
    t = Triangle((-100, -100), (100, -100), (0, 100))
    c = ((-100 + 100 + 0) / 3, (-100 - 100 + 100) / 3)
    assert disk_triangle_area(t, Circle(c, 1)) == pytest.approx(math.pi)


def test_tangent_chord_and_circular_segment():
    t = Triangle((-10, 1), (10, 1), (0, 20))
    # the unit circle only touches the side y = 1
    assert disk_triangle_area(t, Circle((0, 0), 1)) == pytest.approx(0, abs=1e-12)
    # radius 2: circular segment above y = 1 with half-angle pi/3
    expected = 4 * (math.pi / 3 - math.sin(math.pi / 3) * math.cos(math.pi / 3))
    assert disk_triangle_area(t, Circle((0, 0), 2)) == pytest.approx(expected, rel=1e-12)
    assert disk_polygon_area_exact(list(t), (0, 0), 2) == pytest.approx(expected, rel=1e-12)


def test_degenerate_triangle_is_zero():
    t = Triangle((0, 0), (1, 1), (2, 2))
    assert disk_triangle_area(t, Circle((1, 1), 5)) == 0
    assert triangle_case(t, Circle((1, 1), 5)).code == -1


def test_classify_examples():
    code, ctx = classify(Triangle((100, 100), (100.1, 100), (100, 100.1)), Circle((0, 0), 1))
    assert code.code == 0
    code, ctx = classify(Triangle((-2, 0), (2, 0), (0, 5)), Circle((0, 0), 1))
    assert (code.n1, code.n2, code.n3) == (2, 0, 0) and code.code == 2
    assert ctx.pts_ab[0].x < ctx.pts_ab[1].x
    code, ctx = classify(Triangle((-3, -1.5), (3, -1.5), (0, 3)), Circle((0, 0), 2))
    assert code.code == 26
    assert ctx.dA == pytest.approx(math.hypot(3, 1.5))


def test_classify_orders_ac_from_c():
    code, ctx = classify(Triangle((-3, 0.5), (5, 9), (3, 0.5)), Circle((0, 0), 1))
    assert code.n3 == 2
    c = ctx.triangle.c
    assert math.dist(tuple(c), tuple(ctx.pts_ac[0])) < math.dist(tuple(c), tuple(ctx.pts_ac[1]))


def test_intersection_code_roundtrip():
    for code in range(27):
        assert IntersectionCode.from_code(code).code == code
    with pytest.raises(ValueError):
        IntersectionCode(3, 0, 0)


def test_canonicalize_examples():
    # code 4: AB once, BC once, B inside
    t = Triangle((3, 0), (0, 0), (0, 3))
    k = Circle((0, 0), 1.5)
    code, ctx = classify(t, k)
    assert code.code == 4
    rep, t2, ctx2 = canonicalize_case(code, ctx)
    assert rep == 12
    assert (len(ctx2.pts_ab), len(ctx2.pts_bc), len(ctx2.pts_ac)) == FAMILY_COUNTS[12]
    assert {tuple(v) for v in t2} == {tuple(v) for v in t}
    # code 20: AB twice, AC twice
    t = Triangle((0, -6), (-1.2, 6), (1.2, 6))
    code, ctx = classify(t, Circle((0, 0), 2))
    assert code.code == 20
    rep, t2, ctx2 = canonicalize_case(code, ctx)
    assert rep == 8
    assert (len(ctx2.pts_ab), len(ctx2.pts_bc), len(ctx2.pts_ac)) == FAMILY_COUNTS[8]


def test_canonicalize_keeps_representatives():
    for case in CASES:
        t, k = Triangle(*map(tuple, case["triangle"])), Circle(tuple(case["center"]), case["radius"])
        code, ctx = classify(t, k)
        assert code.code == case["code"]
        rep, t2, ctx2 = canonicalize_case(code, ctx)
        assert rep == case["representative"]
        assert (len(ctx2.pts_ab), len(ctx2.pts_bc), len(ctx2.pts_ac)) == FAMILY_COUNTS[rep]
        if code.code == rep:
            assert tuple(t2) == tuple(t)
        # relabelled sides keep their orientation conventions
        for start, pts in ((t2.a, ctx2.pts_ab), (t2.b, ctx2.pts_bc), (t2.c, ctx2.pts_ac)):
            if len(pts) == 2:
                assert math.dist(tuple(start), tuple(pts[0])) <= math.dist(tuple(start), tuple(pts[1]))


def test_point_in_triangle_examples():
    t = Triangle((0, 0), (1, 0), (0, 1))
    assert point_in_triangle((1 / 3, 1 / 3), t)
    assert not point_in_triangle((10, 10), t)
    assert point_in_triangle((0.5, 0.0), t)
    assert point_in_triangle((0.5, 0.5), t)


def test_fixtures_match_frozen_exact_areas(each_backend):
    for case in CASES:
        t, k = Triangle(*map(tuple, case["triangle"])), Circle(tuple(case["center"]), case["radius"])
        detail = triangle_case(t, k)
        assert (detail.code, detail.branch) == (case["code"], case["branch"])
        assert detail.area == pytest.approx(case["exact_area"], abs=1e-8 * max(1, k.radius ** 2))


def test_permutation_invariance():
    rng = np.random.default_rng(11)
    for _ in range(300):
        t, k = random_pair(rng)
        ref = disk_triangle_area(t, k)
        for perm in itertools.permutations(t):
            got = disk_triangle_area(Triangle(*perm), k)
            assert abs(got - ref) <= 1e-10 * max(ref, 1)


def test_bounds_and_monotone_in_radius():
    rng = np.random.default_rng(12)
    for _ in range(50):
        t, k = random_pair(rng)
        prev = 0.0
        for r in np.linspace(0.05, 8.0, 20):
            area = disk_triangle_area(t, Circle(k.center, r))
            assert 0 <= area <= min(t.area, math.pi * r * r) * (1 + 1e-12)
            assert area >= prev - 1e-10 * max(prev, 1)
            prev = area


def test_cevian_additivity():
    rng = np.random.default_rng(13)
    for _ in range(200):
        t, k = random_pair(rng)
        s = rng.uniform(0.05, 0.95)
        foot = (t.b.x + s * (t.c.x - t.b.x), t.b.y + s * (t.c.y - t.b.y))
        whole = disk_triangle_area(t, k)
        parts = disk_triangle_area(Triangle(t.a, t.b, foot), k) + disk_triangle_area(
            Triangle(t.a, foot, t.c), k)
        assert abs(parts - whole) <= 1e-9 * max(whole, 1)


def test_limits():
    rng = np.random.default_rng(14)
    for _ in range(50):
        t, k = random_pair(rng)
        assert disk_triangle_area(t, Circle(k.center, 1e6)) == pytest.approx(t.area, rel=1e-9)
        g = ((t.a.x + t.b.x + t.c.x) / 3, (t.a.y + t.b.y + t.c.y) / 3)
        r = 1e-3 * math.sqrt(t.area)
        assert disk_triangle_area(t, Circle(g, r)) == pytest.approx(math.pi * r * r, rel=1e-9)


def test_agrees_with_grid_oracle_on_random_pairs():
    rng = np.random.default_rng(15)
    failures = []
    for _ in range(1000):
        t, k = random_pair(rng)
        oracle = grid_oracle(Polygon(list(t), validate=False), k.center, k.radius, 1000)
        area = disk_triangle_area(t, k)
        if not oracle.agrees(area):
            failures.append((t, k, area, oracle))
    assert len(failures) <= 1, failures


def test_gap_fallback_warns_and_recovers(monkeypatch):
    t = Triangle((0, 0), (2, 0), (0, 2))
    k = Circle((0.5, 0.5), 1)
    exact = disk_triangle_area(t, k)
    monkeypatch.setattr(dt, "triangle_case",
                        lambda *a, **kw: dt.CaseDetail(5, 5, -1, -1.0))
    with pytest.raises(InternalCaseGap):
        disk_triangle_area(t, k, strict=True)
    with pytest.warns(CaseGapWarning):
        value = disk_triangle_area(t, k)
    oracle = grid_oracle(Polygon(list(t), validate=False), k.center, k.radius, 4000)
    assert value == pytest.approx(exact, abs=oracle.accuracy_bound)


def test_gap_retry_with_nudged_radius(monkeypatch):
    t = Triangle((0, 0), (2, 0), (0, 2))
    k = Circle((0.5, 0.5), 1)
    real = dt.triangle_case
    calls = []

    def flaky(t_, k_, eps=dt.DEFAULT_EPS):
        calls.append(k_.radius)
        if len(calls) == 1:
            return dt.CaseDetail(5, 5, -1, -1.0)
        return real(t_, k_, eps)

    monkeypatch.setattr(dt, "triangle_case", flaky)
    assert disk_triangle_area(t, k) == pytest.approx(real(t, k).area, rel=1e-8)
    assert calls[1] > k.radius
