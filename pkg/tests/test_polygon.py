import math

import numpy as np
import pytest

from polydensity.polygon import (NotSimple, Polygon, PolygonFormatError, TooFewVertices,
                                 boundary_distances, contains, crossing_number, crossing_numbers,
                                 format_polygon_csv, generate_star_polygon, parse_polygon_csv,
                                 polygon_area, read_polygon_csv, triangulate, write_polygon_csv)
from reference import disk_polygon_area_exact

TEN_GON = [(1, 1), (3, 1), (5, 2), (7, 1), (8, 3), (6, 3), (7, 6), (4, 5), (1, 3), (2, 2)]
UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def winding_number(p, verts):
    v = np.asarray(verts, float) - np.asarray(p, float)
    ang = np.arctan2(v[:, 1], v[:, 0])
    d = np.diff(np.append(ang, ang[0]))
    d = (d + math.pi) % (2 * math.pi) - math.pi
    return int(round(d.sum() / (2 * math.pi)))


def test_areas():
    assert polygon_area(Polygon(UNIT_SQUARE)) == pytest.approx(1)
    assert polygon_area(Polygon([(0, 0), (1, 0), (1, 0.8), (0, 0.8)])) == pytest.approx(0.8)
    # independent check: a disk covering the polygon recovers its area
    assert polygon_area(Polygon(TEN_GON)) == pytest.approx(19)
    assert disk_polygon_area_exact(TEN_GON, (4, 3), 100) == pytest.approx(19)


def test_validation():
    with pytest.raises(TooFewVertices):
        Polygon([(0, 0), (1, 0)])
    with pytest.raises(NotSimple):
        Polygon([(0, 0), (1, 1), (1, 0), (0, 1)])
    with pytest.raises(NotSimple):
        Polygon([(0, 0), (1, 0), (1, 0), (0, 1)])
    with pytest.raises(NotSimple):
        Polygon([(0, 0), (2, 0), (1, 0), (1, 1)])
    # touching a vertex against a non-adjacent edge
    with pytest.raises(NotSimple):
        Polygon([(0, 0), (4, 0), (4, 4), (2, 0), (0, 4)])


def test_crossing_number_examples():
    sq = Polygon(UNIT_SQUARE)
    assert crossing_number((0.5, 0.5), sq) == 1
    assert crossing_number((-5, 0.5), sq) % 2 == 0
    assert crossing_number((4, 3), Polygon(TEN_GON)) % 2 == 1


def test_crossing_parity_matches_winding():
    rng = np.random.default_rng(3)
    for seed in range(10):
        s = generate_star_polygon(5, 10, seed)
        pts = rng.uniform(-10, 10, (300, 2))
        parity = crossing_numbers(pts, s) % 2
        wind = np.array([winding_number(p, s.vertices) != 0 for p in pts])
        assert np.array_equal(parity.astype(bool), wind)


def test_boundary_distances_examples():
    rect = Polygon([(0, 0), (1, 0), (1, 0.8), (0, 0.8)])
    dmin, dmax = boundary_distances((0.5, 0.4), rect)
    assert dmin == 0 and dmax == pytest.approx(math.sqrt(0.25 + 0.16))
    tri = Polygon([(1, 1), (10, 1), (3, 4)])
    assert boundary_distances((5, 0), tri)[0] == pytest.approx(1)
    assert boundary_distances((0.5, 0), Polygon(UNIT_SQUARE))[0] == 0
    assert contains((0.5, 0), Polygon(UNIT_SQUARE))


def test_triangulate_examples():
    t = triangulate(Polygon([(0, 0), (1, 0), (0, 1)]))
    assert len(t) == 1
    t = triangulate(Polygon(UNIT_SQUARE))
    assert len(t) == 2 and t.areas().sum() == pytest.approx(1)
    t = triangulate(Polygon(TEN_GON))
    assert len(t) == 8 and t.areas().sum() == pytest.approx(19, rel=1e-12)


def test_triangulate_clockwise_input():
    t = triangulate(Polygon(TEN_GON[::-1]))
    assert len(t) == 8 and t.areas().sum() == pytest.approx(19, rel=1e-12)


def test_triangulate_collinear_vertices():
    s = Polygon([(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1)])
    t = triangulate(s)
    assert len(t) == 4 and t.areas().sum() == pytest.approx(2)


def test_triangulation_area_conservation():
    for seed in range(100):
        n = 1 + seed % 50
        s = generate_star_polygon(n, 1000, seed)
        t = triangulate(s)
        assert len(t) == s.n - 2
        assert abs(t.areas().sum() - s.area) <= 1e-9 * s.area


def _in_triangle(p, tri, tol):
    a, b, c = tri
    def cross(u, v, w):
        return (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])
    d = [cross(a, b, p), cross(b, c, p), cross(c, a, p)]
    return min(d) >= -tol or max(d) <= tol


def test_triangulation_coverage():
    s = generate_star_polygon(10, 100, 5)
    tris = s.vertices[triangulate(s).indices]
    rng = np.random.default_rng(0)
    pts = rng.uniform(-100, 100, (6000, 2))
    pts = pts[crossing_numbers(pts, s) % 2 == 1][:1000]
    assert len(pts) == 1000
    for p in pts:
        hits = sum(_in_triangle(p, t, 1e-9) for t in tris)
        assert hits >= 1
        strict = sum(_in_triangle(p, t, -1e-7) for t in tris)
        assert strict <= 1


def test_generate_star_polygon():
    s = generate_star_polygon(1, 5, 0)
    assert s.n == 4
    angles = np.arctan2(s.vertices[:, 1], s.vertices[:, 0]) % (2 * math.pi)
    assert sorted(np.floor(angles / (math.pi / 2)).astype(int)) == [0, 1, 2, 3]
    s = generate_star_polygon(10, 1000, 1)
    assert s.n == 40
    assert np.hypot(*s.vertices.T).max() <= 1000
    assert np.array_equal(s.vertices, generate_star_polygon(10, 1000, 1).vertices)
    assert not np.array_equal(s.vertices, generate_star_polygon(10, 1000, 2).vertices)


def test_star_polygons_are_simple():
    for seed in range(30):
        s = generate_star_polygon(1 + seed, 1000, seed)
        Polygon(s.vertices)  # revalidates
        assert contains((0, 0), s)


def test_csv_round_trip(tmp_path):
    s = generate_star_polygon(3, 1000, 9)
    path = tmp_path / "poly.csv"
    write_polygon_csv(s, path)
    lines = path.read_text().splitlines()
    assert lines[0] == lines[-1] and len(lines) == 13
    back = read_polygon_csv(path)
    assert np.array_equal(back.vertices, s.vertices)


def test_csv_rejects_bad_input():
    with pytest.raises(PolygonFormatError):
        parse_polygon_csv("0,0\n1,0\n0,1\n")
    with pytest.raises(PolygonFormatError):
        parse_polygon_csv("0,0\n1,zero\n0,1\n0,0\n")
    with pytest.raises(PolygonFormatError):
        parse_polygon_csv("0,0,1\n")
    assert parse_polygon_csv(format_polygon_csv(UNIT_SQUARE)).area == pytest.approx(1)
