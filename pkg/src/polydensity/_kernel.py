"""Scalar kernels for disk/triangle intersection areas.

This module is plain Python and is also compiled by Cython through
``_ckernel.pyx`` (which includes this file verbatim).  Everything called from
inside ``nogil`` blocks works on C doubles and ints only.

Vertex status convention: -1 inside the disk, 0 on the circle (within the
on-circle tolerance), +1 outside.

Branch identifiers returned by :func:`triangle_case` are
``100 * representative_code + k`` where ``k`` numbers the sub-shapes of the
representative's case ladder; ``-1`` marks an unmatched configuration.
"""

try:
    import cython
except ImportError:  # pragma: no cover - exercised only without Cython
    from polydensity import _cython_shim as cython

if cython.compiled:
    from cython.cimports.libc.math import acos, fabs, sqrt
else:
    from math import acos, fabs, sqrt

PI = cython.declare(cython.double, 3.141592653589793)
GAP = cython.declare(cython.double, -1.0)


@cython.cfunc
@cython.inline
@cython.nogil
@cython.exceptval(check=False)
def _tri(ax: cython.double, ay: cython.double, bx: cython.double, by: cython.double,
         cx: cython.double, cy: cython.double) -> cython.double:
    return 0.5 * fabs(ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _lens(x1: cython.double, y1: cython.double, x2: cython.double, y2: cython.double,
          px: cython.double, py: cython.double, r: cython.double,
          tol: cython.double) -> cython.double:
    # minor lens cut by chord (x1,y1)-(x2,y2); endpoints projected onto the circle
    u1: cython.double = x1 - px
    v1: cython.double = y1 - py
    u2: cython.double = x2 - px
    v2: cython.double = y2 - py
    n1: cython.double = sqrt(u1 * u1 + v1 * v1)
    n2: cython.double = sqrt(u2 * u2 + v2 * v2)
    if n1 > 0.0:
        u1 = u1 * r / n1
        v1 = v1 * r / n1
    if n2 > 0.0:
        u2 = u2 * r / n2
        v2 = v2 * r / n2
    if sqrt((u2 - u1) * (u2 - u1) + (v2 - v1) * (v2 - v1)) <= tol:
        return 0.0
    mx: cython.double = 0.5 * (u1 + u2)
    my: cython.double = 0.5 * (v1 + v2)
    m: cython.double = sqrt(mx * mx + my * my)
    if m <= tol:
        return 0.5 * PI * r * r
    c: cython.double = (mx * u2 + my * v2) / (r * m)
    if c > 1.0:
        c = 1.0
    elif c < -1.0:
        c = -1.0
    return r * r * acos(c) - r * r * c * sqrt(1.0 - c * c)


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _pside(qx: cython.double, qy: cython.double, ox: cython.double, oy: cython.double,
           x1: cython.double, y1: cython.double, x2: cython.double, y2: cython.double,
           px: cython.double, py: cython.double, r: cython.double,
           tol: cython.double) -> cython.int:
    # 1 when the center lies on q's side of chord (x1,y1)-(x2,y2), where o is
    # known to lie on the opposite side. Whichever of q, o is farther from the
    # chord line decides. The chord normal runs along the radius through the
    # chord midpoint, which stays well defined for very short chords.
    u1: cython.double = x1 - px
    v1: cython.double = y1 - py
    u2: cython.double = x2 - px
    v2: cython.double = y2 - py
    n1: cython.double = sqrt(u1 * u1 + v1 * v1)
    n2: cython.double = sqrt(u2 * u2 + v2 * v2)
    if n1 > 0.0:
        u1 = u1 * r / n1
        v1 = v1 * r / n1
    if n2 > 0.0:
        u2 = u2 * r / n2
        v2 = v2 * r / n2
    mx: cython.double = 0.5 * (u1 + u2)
    my: cython.double = 0.5 * (v1 + v2)
    h: cython.double = sqrt(mx * mx + my * my)
    if h <= tol:
        return 1
    sq: cython.double = ((qx - px) * mx + (qy - py) * my) / h - h
    so: cython.double = ((ox - px) * mx + (oy - py) * my) / h - h
    if fabs(sq) >= fabs(so):
        return 1 if sq <= tol else 0
    return 1 if so >= -tol else 0


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _same(qx: cython.double, qy: cython.double, sx: cython.double, sy: cython.double,
          ax: cython.double, ay: cython.double, bx: cython.double, by: cython.double,
          tol: cython.double) -> cython.int:
    # 1 unless (qx,qy) and (sx,sy) lie strictly on opposite sides of line (a,b)
    dx: cython.double = bx - ax
    dy: cython.double = by - ay
    ln: cython.double = sqrt(dx * dx + dy * dy)
    if ln <= tol:
        return 1
    s1: cython.double = (dx * (qy - ay) - dy * (qx - ax)) / ln
    s2: cython.double = (dx * (sy - ay) - dy * (sx - ax)) / ln
    if fabs(s1) <= tol or fabs(s2) <= tol:
        return 1
    if s1 * s2 >= 0.0:
        return 1
    return 0


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _seg_dist(px: cython.double, py: cython.double, x0: cython.double, y0: cython.double,
              x1: cython.double, y1: cython.double) -> cython.double:
    dx: cython.double = x1 - x0
    dy: cython.double = y1 - y0
    a: cython.double = dx * dx + dy * dy
    t: cython.double = 0.0
    if a > 0.0:
        t = ((px - x0) * dx + (py - y0) * dy) / a
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    ex: cython.double = x0 + t * dx - px
    ey: cython.double = y0 + t * dy - py
    return sqrt(ex * ex + ey * ey)


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _crosses(px: cython.double, py: cython.double, x0: cython.double, y0: cython.double,
             x1: cython.double, y1: cython.double) -> cython.int:
    # rightward horizontal ray, half-open rule on the edge's y-range
    if (y0 > py) != (y1 > py):
        if x0 + (py - y0) * (x1 - x0) / (y1 - y0) > px:
            return 1
    return 0


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _inside(px: cython.double, py: cython.double, ax: cython.double, ay: cython.double,
            bx: cython.double, by: cython.double, cx: cython.double, cy: cython.double,
            tol: cython.double) -> cython.int:
    dmin: cython.double = _seg_dist(px, py, ax, ay, bx, by)
    d: cython.double = _seg_dist(px, py, bx, by, cx, cy)
    if d < dmin:
        dmin = d
    d = _seg_dist(px, py, cx, cy, ax, ay)
    if d < dmin:
        dmin = d
    if dmin <= tol:
        return 1
    n: cython.int = (_crosses(px, py, ax, ay, bx, by) + _crosses(px, py, bx, by, cx, cy)
                     + _crosses(px, py, cx, cy, ax, ay))
    return n % 2


@cython.cfunc
@cython.inline
@cython.nogil
@cython.exceptval(check=False)
def _status(d: cython.double, r: cython.double, tol_on: cython.double) -> cython.int:
    if d - r > tol_on:
        return 1
    if r - d > tol_on:
        return -1
    return 0


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _side(x0: cython.double, y0: cython.double, x1: cython.double, y1: cython.double,
          s0: cython.int, s1: cython.int, px: cython.double, py: cython.double,
          r: cython.double, tol_on: cython.double, tol_geom: cython.double
          ) -> tuple[cython.int, cython.double, cython.double, cython.double, cython.double]:
    # contacts of segment (x0,y0)->(x1,y1) with the circle, ordered from (x0,y0);
    # counts follow the endpoint statuses so that the three sides agree at vertices
    dx: cython.double = x1 - x0
    dy: cython.double = y1 - y0
    a: cython.double = dx * dx + dy * dy
    ln: cython.double = sqrt(a)
    fx: cython.double = x0 - px
    fy: cython.double = y0 - py
    t: cython.double
    u: cython.double
    qx: cython.double
    qy: cython.double
    nq: cython.double
    if ln <= tol_geom:
        return 0, x0, y0, x0, y0
    if s0 == 0 and s1 == 0:
        return 2, x0, y0, x1, y1
    if s0 == 0:
        if s1 < 0:
            return 1, x0, y0, x0, y0
        t = -2.0 * (fx * dx + fy * dy) / a
        if t * ln > tol_geom and t < 1.0:
            qx = fx + t * dx
            qy = fy + t * dy
            nq = sqrt(qx * qx + qy * qy)
            return 2, x0, y0, px + qx * r / nq, py + qy * r / nq
        return 1, x0, y0, x0, y0
    if s1 == 0:
        if s0 < 0:
            return 1, x1, y1, x1, y1
        u = 2.0 * ((x1 - px) * dx + (y1 - py) * dy) / a
        if u * ln > tol_geom and u < 1.0:
            qx = x1 - u * dx - px
            qy = y1 - u * dy - py
            nq = sqrt(qx * qx + qy * qy)
            return 2, px + qx * r / nq, py + qy * r / nq, x1, y1
        return 1, x1, y1, x1, y1
    if s0 < 0 and s1 < 0:
        return 0, x0, y0, x0, y0
    b: cython.double = fx * dx + fy * dy
    c: cython.double = fx * fx + fy * fy - r * r
    disc: cython.double
    sq: cython.double
    if (s0 < 0) != (s1 < 0):
        disc = b * b - a * c
        if disc < 0.0:
            disc = 0.0
        sq = sqrt(disc)
        if s0 < 0:
            # larger root; c < 0
            if b > 0.0:
                t = -c / (b + sq)
            else:
                t = (sq - b) / a
        else:
            # smaller root; c > 0
            if b < 0.0:
                t = c / (sq - b)
            else:
                t = -(b + sq) / a
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        qx = fx + t * dx
        qy = fy + t * dy
        nq = sqrt(qx * qx + qy * qy)
        qx = px + qx * r / nq
        qy = py + qy * r / nq
        return 1, qx, qy, qx, qy
    # both endpoints outside
    t = -b / a
    if t <= 0.0 or t >= 1.0:
        return 0, x0, y0, x0, y0
    h: cython.double = fabs(fx * dy - fy * dx) / ln
    if fabs(h - r) <= tol_on:
        qx = fx + t * dx
        qy = fy + t * dy
        nq = sqrt(qx * qx + qy * qy)
        qx = px + qx * r / nq
        qy = py + qy * r / nq
        return 1, qx, qy, qx, qy
    if h > r:
        return 0, x0, y0, x0, y0
    half: cython.double = sqrt(r * r - h * h) / ln
    t1: cython.double = t - half
    t2: cython.double = t + half
    if t1 < 0.0:
        t1 = 0.0
    if t2 > 1.0:
        t2 = 1.0
    if (t2 - t1) * ln <= tol_geom:
        qx = fx + t * dx
        qy = fy + t * dy
        nq = sqrt(qx * qx + qy * qy)
        qx = px + qx * r / nq
        qy = py + qy * r / nq
        return 1, qx, qy, qx, qy
    return 2, x0 + t1 * dx, y0 + t1 * dy, x0 + t2 * dx, y0 + t2 * dy


@cython.cfunc
@cython.inline
@cython.nogil
@cython.exceptval(check=False)
def _pair_count(i: cython.int, j: cython.int, n1: cython.int, n2: cython.int,
                n3: cython.int) -> cython.int:
    if i + j == 1:
        return n1
    if i + j == 3:
        return n2
    return n3


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _perm(k: cython.int) -> tuple[cython.int, cython.int, cython.int]:
    if k == 0:
        return 0, 1, 2
    if k == 1:
        return 1, 2, 0
    if k == 2:
        return 2, 0, 1
    if k == 3:
        return 0, 2, 1
    if k == 4:
        return 2, 1, 0
    return 1, 0, 2


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _family(n1: cython.int, n2: cython.int, n3: cython.int
            ) -> tuple[cython.int, cython.int, cython.int, cython.int]:
    # representative code and the relabelling (new A, B, C = old i0, i1, i2)
    lo: cython.int = n1
    hi: cython.int = n1
    if n2 < lo:
        lo = n2
    if n3 < lo:
        lo = n3
    if n2 > hi:
        hi = n2
    if n3 > hi:
        hi = n3
    mid: cython.int = n1 + n2 + n3 - lo - hi
    rep: cython.int
    t1: cython.int
    t2: cython.int
    t3: cython.int
    if hi == lo:
        return 13 * n1, 0, 1, 2
    if hi == 1 and mid == 0:
        rep, t1, t2, t3 = 1, 1, 0, 0
    elif hi == 2 and mid == 0 and lo == 0:
        rep, t1, t2, t3 = 18, 0, 0, 2
    elif hi == 1 and mid == 1:
        rep, t1, t2, t3 = 12, 0, 1, 1
    elif hi == 2 and mid == 1 and lo == 0:
        rep, t1, t2, t3 = 5, 2, 1, 0
    elif hi == 2 and mid == 2 and lo == 0:
        rep, t1, t2, t3 = 8, 2, 2, 0
    elif hi == 2 and mid == 1 and lo == 1:
        rep, t1, t2, t3 = 14, 2, 1, 1
    else:
        rep, t1, t2, t3 = 17, 2, 2, 1
    k: cython.int
    i0: cython.int
    i1: cython.int
    i2: cython.int
    for k in range(6):
        i0, i1, i2 = _perm(k)
        if (_pair_count(i0, i1, n1, n2, n3) == t1 and _pair_count(i1, i2, n1, n2, n3) == t2
                and _pair_count(i0, i2, n1, n2, n3) == t3):
            return rep, i0, i1, i2
    return -1, 0, 1, 2


@cython.cfunc
@cython.inline
@cython.nogil
@cython.exceptval(check=False)
def _pick(i: cython.int, a: cython.double, b: cython.double, c: cython.double) -> cython.double:
    if i == 0:
        return a
    if i == 1:
        return b
    return c


@cython.cfunc
@cython.inline
@cython.nogil
@cython.exceptval(check=False)
def _picki(i: cython.int, a: cython.int, b: cython.int, c: cython.int) -> cython.int:
    if i == 0:
        return a
    if i == 1:
        return b
    return c


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _oriented(i: cython.int, j: cython.int,
              n1: cython.int, a1x: cython.double, a1y: cython.double, a2x: cython.double, a2y: cython.double,
              n2: cython.int, b1x: cython.double, b1y: cython.double, b2x: cython.double, b2y: cython.double,
              n3: cython.int, c1x: cython.double, c1y: cython.double, c2x: cython.double, c2y: cython.double
              ) -> tuple[cython.int, cython.double, cython.double, cython.double, cython.double]:
    # contacts of side (i, j) ordered from vertex i; stored sides run 0->1, 1->2, 2->0
    if i == 0 and j == 1:
        return n1, a1x, a1y, a2x, a2y
    if i == 1 and j == 0:
        return n1, a2x, a2y, a1x, a1y
    if i == 1 and j == 2:
        return n2, b1x, b1y, b2x, b2y
    if i == 2 and j == 1:
        return n2, b2x, b2y, b1x, b1y
    if i == 2 and j == 0:
        return n3, c1x, c1y, c2x, c2y
    return n3, c2x, c2y, c1x, c1y


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _dispatch(rep: cython.int,
              ax: cython.double, ay: cython.double, bx: cython.double, by: cython.double,
              cx: cython.double, cy: cython.double,
              sa: cython.int, sb: cython.int, sc: cython.int,
              a1x: cython.double, a1y: cython.double, a2x: cython.double, a2y: cython.double,
              b1x: cython.double, b1y: cython.double, b2x: cython.double, b2y: cython.double,
              c1x: cython.double, c1y: cython.double, c2x: cython.double, c2y: cython.double,
              px: cython.double, py: cython.double, r: cython.double, tol: cython.double
              ) -> tuple[cython.int, cython.double]:
    # case ladders of the family representatives; points A1..C2 follow the
    # side ordering conventions (AB from A, BC from B, AC from C)
    disk: cython.double = PI * r * r
    lens: cython.double
    out: cython.int

    if rep == 0:
        if sa < 0 and sb < 0 and sc < 0:
            return 1, _tri(ax, ay, bx, by, cx, cy)
        if sa > 0 and sb > 0 and sc > 0:
            if _inside(px, py, ax, ay, bx, by, cx, cy, tol):
                return 2, disk
            return 3, 0.0
        return -1, GAP

    if rep == 1:
        if sa > 0 and sb > 0 and sc > 0:
            if _inside(px, py, ax, ay, bx, by, cx, cy, tol):
                return 102, disk
            return 101, 0.0
        return -1, GAP

    if rep == 18:
        if sa > 0 and sb > 0 and sc > 0:
            lens = _lens(c1x, c1y, c2x, c2y, px, py, r, tol)
            if _pside(bx, by, bx, by, c1x, c1y, c2x, c2y, px, py, r, tol):
                return 1802, disk - lens
            return 1801, lens
        return -1, GAP

    if rep == 12:
        if sa < 0 and sb < 0 and sc == 0:
            return 1201, _tri(ax, ay, bx, by, cx, cy)
        if sa < 0 and sb < 0 and sc > 0:
            return 1202, (_lens(c1x, c1y, b1x, b1y, px, py, r, tol) + _tri(ax, ay, bx, by, b1x, b1y)
                          + _tri(ax, ay, b1x, b1y, c1x, c1y))
        if sa > 0 and sb > 0 and sc > 0:
            return 1203, disk
        if sa > 0 and sb > 0 and sc < 0:
            lens = _lens(b1x, b1y, c1x, c1y, px, py, r, tol)
            if _pside(cx, cy, 0.5 * (ax + bx), 0.5 * (ay + by), b1x, b1y, c1x, c1y, px, py, r, tol):
                return 1204, _tri(cx, cy, b1x, b1y, c1x, c1y) + lens
            return 1205, _tri(cx, cy, b1x, b1y, c1x, c1y) + disk - lens
        if sa > 0 and sb > 0 and sc == 0:
            return 1206, 0.0
        return -1, GAP

    if rep == 5:
        if sa > 0 and sc > 0 and sb >= 0:
            lens = _lens(a1x, a1y, a2x, a2y, px, py, r, tol)
            if _inside(px, py, ax, ay, bx, by, cx, cy, tol):
                if sb > 0:
                    return 502, disk - lens
                return 504, disk - lens
            if sb > 0:
                return 501, lens
            return 503, lens
        return -1, GAP

    if rep == 8:
        if sa > 0 and sc > 0 and sb >= 0:
            lens = _lens(a1x, a1y, b2x, b2y, px, py, r, tol)
            out = _pside(bx, by, 0.5 * (ax + cx), 0.5 * (ay + cy), a1x, a1y, b2x, b2y, px, py, r, tol)
            if sb > 0:
                if out:
                    return 801, (lens + _tri(b1x, b1y, a1x, a1y, b2x, b2y) + _tri(a2x, a2y, a1x, a1y, b1x, b1y)
                                 + _lens(a2x, a2y, b1x, b1y, px, py, r, tol))
                return 802, (disk - lens + _tri(b1x, b1y, a1x, a1y, b2x, b2y)
                             + _tri(a2x, a2y, a1x, a1y, b1x, b1y) + _lens(a2x, a2y, b1x, b1y, px, py, r, tol))
            if out:
                return 803, lens + _tri(bx, by, a1x, a1y, b2x, b2y)
            return 804, disk - lens + _tri(bx, by, a1x, a1y, b2x, b2y)
        return -1, GAP

    if rep == 13:
        if sa > 0 and sb > 0 and sc > 0:
            return 1301, disk
        if sa == 0 and sb > 0 and sc < 0:
            return 1302, _lens(ax, ay, b1x, b1y, px, py, r, tol) + _tri(ax, ay, cx, cy, b1x, b1y)
        if sa == 0 and sc > 0 and sb < 0:
            return 1303, _lens(ax, ay, b1x, b1y, px, py, r, tol) + _tri(ax, ay, bx, by, b1x, b1y)
        if sb == 0 and sa > 0 and sc < 0:
            return 1304, _lens(bx, by, c1x, c1y, px, py, r, tol) + _tri(cx, cy, bx, by, c1x, c1y)
        if sb == 0 and sc > 0 and sa < 0:
            return 1305, _lens(bx, by, c1x, c1y, px, py, r, tol) + _tri(ax, ay, bx, by, c1x, c1y)
        if sc == 0 and sb > 0 and sa < 0:
            return 1306, _lens(cx, cy, a1x, a1y, px, py, r, tol) + _tri(cx, cy, ax, ay, a1x, a1y)
        if sc == 0 and sb < 0 and sa > 0:
            return 1307, _lens(cx, cy, a1x, a1y, px, py, r, tol) + _tri(cx, cy, bx, by, a1x, a1y)
        if sa < 0 and sb > 0 and sc > 0:
            lens = _lens(a1x, a1y, c1x, c1y, px, py, r, tol)
            if _pside(ax, ay, 0.5 * (bx + cx), 0.5 * (by + cy), a1x, a1y, c1x, c1y, px, py, r, tol):
                return 1308, lens + _tri(ax, ay, a1x, a1y, c1x, c1y)
            return 1309, disk - lens + _tri(ax, ay, a1x, a1y, c1x, c1y)
        if sb < 0 and sa > 0 and sc > 0:
            lens = _lens(a1x, a1y, b1x, b1y, px, py, r, tol)
            if _pside(bx, by, 0.5 * (ax + cx), 0.5 * (ay + cy), a1x, a1y, b1x, b1y, px, py, r, tol):
                return 1310, lens + _tri(bx, by, a1x, a1y, b1x, b1y)
            return 1311, disk - lens + _tri(bx, by, a1x, a1y, b1x, b1y)
        if sc < 0 and sa > 0 and sb > 0:
            lens = _lens(c1x, c1y, b1x, b1y, px, py, r, tol)
            if _pside(cx, cy, 0.5 * (ax + bx), 0.5 * (ay + by), c1x, c1y, b1x, b1y, px, py, r, tol):
                return 1312, lens + _tri(cx, cy, c1x, c1y, b1x, b1y)
            return 1313, disk - lens + _tri(cx, cy, c1x, c1y, b1x, b1y)
        if (sa == 0 and sb > 0 and sc > 0) or (sb == 0 and sa > 0 and sc > 0) or (
                sc == 0 and sa > 0 and sb > 0):
            return 1314, 0.0
        return -1, GAP

    if rep == 14:
        if sa > 0 and sb > 0 and sc > 0:
            lens = _lens(a1x, a1y, a2x, a2y, px, py, r, tol)
            if _pside(cx, cy, cx, cy, a1x, a1y, a2x, a2y, px, py, r, tol):
                return 1401, disk - lens
            return 1402, lens
        if sa > 0 and sc < 0 and sb > 0:
            return 1403, (_lens(a1x, a1y, c1x, c1y, px, py, r, tol) + _lens(b1x, b1y, a2x, a2y, px, py, r, tol)
                          + _tri(cx, cy, c1x, c1y, a1x, a1y) + _tri(cx, cy, a1x, a1y, a2x, a2y)
                          + _tri(cx, cy, b1x, b1y, a2x, a2y))
        if sb == 0 and sa == 0 and sc < 0:
            return 1404, _tri(ax, ay, bx, by, cx, cy)
        if sb == 0 and sa == 0 and sc > 0:
            return 1405, _lens(ax, ay, bx, by, px, py, r, tol)
        if sb == 0 and sa > 0:
            if sc < 0:
                return 1406, (_lens(a1x, a1y, c1x, c1y, px, py, r, tol) + _tri(bx, by, cx, cy, a1x, a1y)
                              + _tri(cx, cy, a1x, a1y, c1x, c1y))
            if sc > 0:
                lens = _lens(a1x, a1y, bx, by, px, py, r, tol)
                if _same(px, py, cx, cy, bx, by, ax, ay, tol):
                    return 1407, disk - lens
                return 1408, lens
        if sa == 0 and sb > 0:
            if sc < 0:
                return 1409, (_lens(b1x, b1y, a2x, a2y, px, py, r, tol) + _tri(ax, ay, cx, cy, a2x, a2y)
                              + _tri(cx, cy, b1x, b1y, a2x, a2y))
            if sc > 0:
                lens = _lens(ax, ay, a2x, a2y, px, py, r, tol)
                if _same(px, py, cx, cy, bx, by, ax, ay, tol):
                    return 1410, disk - lens
                return 1411, lens
        return -1, GAP

    if rep == 17:
        if sa > 0 and sb > 0 and sc > 0:
            lens = _lens(a1x, a1y, b2x, b2y, px, py, r, tol)
            if _pside(bx, by, 0.5 * (ax + cx), 0.5 * (ay + cy), b2x, b2y, a1x, a1y, px, py, r, tol):
                return 1701, (_lens(b1x, b1y, a2x, a2y, px, py, r, tol) + lens
                              + _tri(b1x, b1y, a2x, a2y, b2x, b2y) + _tri(a1x, a1y, a2x, a2y, b2x, b2y))
            return 1702, (_lens(b1x, b1y, a2x, a2y, px, py, r, tol) + disk - lens
                          + _tri(b1x, b1y, a2x, a2y, b2x, b2y) + _tri(a1x, a1y, a2x, a2y, b2x, b2y))
        if sa == 0 and sb == 0 and sc > 0:
            return 1703, _lens(ax, ay, b2x, b2y, px, py, r, tol) + _tri(ax, ay, bx, by, b2x, b2y)
        if sc == 0 and sb == 0 and sa > 0:
            return 1704, _lens(cx, cy, a1x, a1y, px, py, r, tol) + _tri(bx, by, cx, cy, a1x, a1y)
        if sb == 0 and sa > 0 and sc > 0:
            lens = _lens(a1x, a1y, b2x, b2y, px, py, r, tol)
            if _pside(bx, by, 0.5 * (ax + cx), 0.5 * (ay + cy), b2x, b2y, a1x, a1y, px, py, r, tol):
                return 1705, lens + _tri(a1x, a1y, bx, by, b2x, b2y)
            return 1706, disk - lens + _tri(a1x, a1y, bx, by, b2x, b2y)
        if sa == 0 and sb > 0 and sc > 0:
            return 1707, (_lens(a1x, a1y, b2x, b2y, px, py, r, tol) + _lens(a2x, a2y, b1x, b1y, px, py, r, tol)
                          + _tri(ax, ay, b2x, b2y, b1x, b1y) + _tri(ax, ay, b1x, b1y, a2x, a2y))
        if sc == 0 and sa > 0 and sb > 0:
            return 1708, (_lens(a1x, a1y, cx, cy, px, py, r, tol) + _lens(a2x, a2y, b1x, b1y, px, py, r, tol)
                          + _tri(cx, cy, a2x, a2y, a1x, a1y) + _tri(cx, cy, b1x, b1y, a2x, a2y))
        return -1, GAP

    if rep == 26:
        if sa > 0 and sb > 0 and sc > 0:
            return 2601, (_lens(a2x, a2y, b1x, b1y, px, py, r, tol) + _lens(b2x, b2y, c1x, c1y, px, py, r, tol)
                          + _lens(a1x, a1y, c2x, c2y, px, py, r, tol)
                          + _tri(a2x, a2y, b1x, b1y, a1x, a1y) + _tri(a1x, a1y, c2x, c2y, b1x, b1y)
                          + _tri(c2x, c2y, b1x, b1y, b2x, b2y) + _tri(b2x, b2y, c1x, c1y, c2x, c2y))
        if sa == 0 and sb == 0 and sc == 0:
            return 2602, _tri(ax, ay, bx, by, cx, cy)
        if sa == 0 and sb == 0 and sc > 0:
            return 2603, (_lens(c1x, c1y, b2x, b2y, px, py, r, tol) + _tri(ax, ay, bx, by, c1x, c1y)
                          + _tri(bx, by, c1x, c1y, b2x, b2y))
        if sa == 0 and sc == 0 and sb > 0:
            return 2604, (_lens(a2x, a2y, b1x, b1y, px, py, r, tol) + _tri(ax, ay, cx, cy, a2x, a2y)
                          + _tri(cx, cy, a2x, a2y, b1x, b1y))
        if sb == 0 and sc == 0 and sa > 0:
            return 2605, (_lens(a1x, a1y, c2x, c2y, px, py, r, tol) + _tri(cx, cy, bx, by, a1x, a1y)
                          + _tri(cx, cy, a1x, a1y, c2x, c2y))
        if sa == 0 and sb > 0 and sc > 0:
            return 2606, (_lens(a2x, a2y, b1x, b1y, px, py, r, tol) + _lens(b2x, b2y, c1x, c1y, px, py, r, tol)
                          + _tri(ax, ay, a2x, a2y, b1x, b1y) + _tri(ax, ay, b1x, b1y, b2x, b2y)
                          + _tri(ax, ay, c1x, c1y, b2x, b2y))
        if sb == 0 and sa > 0 and sc > 0:
            return 2607, (_lens(a1x, a1y, c2x, c2y, px, py, r, tol) + _lens(c1x, c1y, b2x, b2y, px, py, r, tol)
                          + _tri(a1x, a1y, bx, by, c2x, c2y) + _tri(bx, by, c1x, c1y, c2x, c2y)
                          + _tri(bx, by, b2x, b2y, c1x, c1y))
        if sc == 0 and sa > 0 and sb > 0:
            return 2608, (_lens(a1x, a1y, c2x, c2y, px, py, r, tol) + _lens(a2x, a2y, b1x, b1y, px, py, r, tol)
                          + _tri(cx, cy, c2x, c2y, a1x, a1y) + _tri(cx, cy, a1x, a1y, a2x, a2y)
                          + _tri(cx, cy, b1x, b1y, a2x, a2y))
        return -1, GAP

    return -1, GAP


@cython.cfunc
@cython.nogil
@cython.exceptval(check=False)
def _case(ax: cython.double, ay: cython.double, bx: cython.double, by: cython.double,
          cx: cython.double, cy: cython.double, px: cython.double, py: cython.double,
          r: cython.double, eps_on: cython.double, eps_geom: cython.double
          ) -> tuple[cython.int, cython.int, cython.int, cython.double]:
    scale: cython.double = r if r > 1.0 else 1.0
    tol_on: cython.double = eps_on * scale
    tol: cython.double = eps_geom * scale
    lab: cython.double = sqrt((bx - ax) * (bx - ax) + (by - ay) * (by - ay))
    lbc: cython.double = sqrt((cx - bx) * (cx - bx) + (cy - by) * (cy - by))
    lca: cython.double = sqrt((ax - cx) * (ax - cx) + (ay - cy) * (ay - cy))
    longest: cython.double = lab
    if lbc > longest:
        longest = lbc
    if lca > longest:
        longest = lca
    area: cython.double = _tri(ax, ay, bx, by, cx, cy)
    if longest <= tol or 2.0 * area <= tol * longest:
        return -1, -1, 0, 0.0

    sa: cython.int = _status(sqrt((ax - px) * (ax - px) + (ay - py) * (ay - py)), r, tol_on)
    sb: cython.int = _status(sqrt((bx - px) * (bx - px) + (by - py) * (by - py)), r, tol_on)
    sc: cython.int = _status(sqrt((cx - px) * (cx - px) + (cy - py) * (cy - py)), r, tol_on)

    n1: cython.int
    n2: cython.int
    n3: cython.int
    a1x: cython.double
    a1y: cython.double
    a2x: cython.double
    a2y: cython.double
    b1x: cython.double
    b1y: cython.double
    b2x: cython.double
    b2y: cython.double
    c1x: cython.double
    c1y: cython.double
    c2x: cython.double
    c2y: cython.double
    n1, a1x, a1y, a2x, a2y = _side(ax, ay, bx, by, sa, sb, px, py, r, tol_on, tol)
    n2, b1x, b1y, b2x, b2y = _side(bx, by, cx, cy, sb, sc, px, py, r, tol_on, tol)
    n3, c1x, c1y, c2x, c2y = _side(cx, cy, ax, ay, sc, sa, px, py, r, tol_on, tol)
    code: cython.int = 9 * n3 + 3 * n2 + n1

    rep: cython.int
    i0: cython.int
    i1: cython.int
    i2: cython.int
    rep, i0, i1, i2 = _family(n1, n2, n3)
    if rep < 0:
        return code, rep, -1, GAP

    m1: cython.int
    m2: cython.int
    m3: cython.int
    e1x: cython.double
    e1y: cython.double
    e2x: cython.double
    e2y: cython.double
    f1x: cython.double
    f1y: cython.double
    f2x: cython.double
    f2y: cython.double
    g1x: cython.double
    g1y: cython.double
    g2x: cython.double
    g2y: cython.double
    m1, e1x, e1y, e2x, e2y = _oriented(i0, i1, n1, a1x, a1y, a2x, a2y, n2, b1x, b1y, b2x, b2y,
                                       n3, c1x, c1y, c2x, c2y)
    m2, f1x, f1y, f2x, f2y = _oriented(i1, i2, n1, a1x, a1y, a2x, a2y, n2, b1x, b1y, b2x, b2y,
                                       n3, c1x, c1y, c2x, c2y)
    m3, g1x, g1y, g2x, g2y = _oriented(i2, i0, n1, a1x, a1y, a2x, a2y, n2, b1x, b1y, b2x, b2y,
                                       n3, c1x, c1y, c2x, c2y)

    branch: cython.int
    value: cython.double
    branch, value = _dispatch(
        rep,
        _pick(i0, ax, bx, cx), _pick(i0, ay, by, cy),
        _pick(i1, ax, bx, cx), _pick(i1, ay, by, cy),
        _pick(i2, ax, bx, cx), _pick(i2, ay, by, cy),
        _picki(i0, sa, sb, sc), _picki(i1, sa, sb, sc), _picki(i2, sa, sb, sc),
        e1x, e1y, e2x, e2y, f1x, f1y, f2x, f2y, g1x, g1y, g2x, g2y,
        px, py, r, tol)
    if branch < 0:
        return code, rep, -1, GAP
    if value < 0.0:
        value = 0.0
    if value > area:
        value = area
    if value > PI * r * r:
        value = PI * r * r
    return code, rep, branch, value


# ---------------------------------------------------------------------------
# Python-visible entry points


@cython.ccall
def triangle_case(ax: cython.double, ay: cython.double, bx: cython.double, by: cython.double,
                  cx: cython.double, cy: cython.double, px: cython.double, py: cython.double,
                  r: cython.double, eps_on: cython.double, eps_geom: cython.double
                  ) -> tuple[cython.int, cython.int, cython.int, cython.double]:
    """Return ``(code, representative, branch, area)`` for one disk/triangle pair.

    ``code`` is -1 for a degenerate triangle; ``branch`` is -1 and ``area`` is
    :data:`GAP` when no sub-case matched.
    """
    return _case(ax, ay, bx, by, cx, cy, px, py, r, eps_on, eps_geom)


@cython.ccall
def side_contacts(x0: cython.double, y0: cython.double, x1: cython.double, y1: cython.double,
                  px: cython.double, py: cython.double, r: cython.double,
                  tol_on: cython.double, tol_geom: cython.double
                  ) -> tuple[cython.int, cython.double, cython.double, cython.double, cython.double]:
    s0: cython.int = _status(sqrt((x0 - px) * (x0 - px) + (y0 - py) * (y0 - py)), r, tol_on)
    s1: cython.int = _status(sqrt((x1 - px) * (x1 - px) + (y1 - py) * (y1 - py)), r, tol_on)
    return _side(x0, y0, x1, y1, s0, s1, px, py, r, tol_on, tol_geom)


@cython.ccall
def family(n1: cython.int, n2: cython.int, n3: cython.int
           ) -> tuple[cython.int, cython.int, cython.int, cython.int]:
    return _family(n1, n2, n3)


@cython.ccall
def minor_lens(x1: cython.double, y1: cython.double, x2: cython.double, y2: cython.double,
               px: cython.double, py: cython.double, r: cython.double,
               tol: cython.double) -> cython.double:
    return _lens(x1, y1, x2, y2, px, py, r, tol)


@cython.ccall
def inside_triangle(px: cython.double, py: cython.double, ax: cython.double, ay: cython.double,
                    bx: cython.double, by: cython.double, cx: cython.double, cy: cython.double,
                    tol: cython.double) -> cython.bint:
    return _inside(px, py, ax, ay, bx, by, cx, cy, tol) != 0


@cython.ccall
def same_side(qx: cython.double, qy: cython.double, sx: cython.double, sy: cython.double,
              ax: cython.double, ay: cython.double, bx: cython.double, by: cython.double,
              tol: cython.double) -> cython.int:
    return _same(qx, qy, sx, sy, ax, ay, bx, by, tol)


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def sweep(tri: cython.double[:], px: cython.double, py: cython.double,
          radii: cython.double[:], out: cython.double[:],
          eps_on: cython.double, eps_geom: cython.double) -> cython.int:
    """Fill ``out[k]`` with the disk/polygon area at ``radii[k]``.

    ``tri`` holds triangles as flat ``ax, ay, bx, by, cx, cy`` runs.  An entry
    of ``out`` is set to :data:`GAP` when any triangle failed to classify; the
    return value counts such entries.
    """
    m: cython.Py_ssize_t = tri.shape[0] // 6
    nr: cython.Py_ssize_t = radii.shape[0]
    k: cython.Py_ssize_t
    i: cython.Py_ssize_t
    gaps: cython.int = 0
    r: cython.double
    total: cython.double
    value: cython.double
    lo: cython.double
    hi: cython.double
    gx: cython.double
    gy: cython.double
    code: cython.int
    rep: cython.int
    branch: cython.int
    with cython.nogil:
        for k in range(nr):
            r = radii[k]
            total = 0.0
            if r > 0.0:
                for i in range(m):
                    # reject triangles whose bounding box misses the disk
                    lo = tri[6 * i]
                    hi = lo
                    if tri[6 * i + 2] < lo:
                        lo = tri[6 * i + 2]
                    if tri[6 * i + 2] > hi:
                        hi = tri[6 * i + 2]
                    if tri[6 * i + 4] < lo:
                        lo = tri[6 * i + 4]
                    if tri[6 * i + 4] > hi:
                        hi = tri[6 * i + 4]
                    gx = 0.0
                    if px < lo:
                        gx = lo - px
                    elif px > hi:
                        gx = px - hi
                    lo = tri[6 * i + 1]
                    hi = lo
                    if tri[6 * i + 3] < lo:
                        lo = tri[6 * i + 3]
                    if tri[6 * i + 3] > hi:
                        hi = tri[6 * i + 3]
                    if tri[6 * i + 5] < lo:
                        lo = tri[6 * i + 5]
                    if tri[6 * i + 5] > hi:
                        hi = tri[6 * i + 5]
                    gy = 0.0
                    if py < lo:
                        gy = lo - py
                    elif py > hi:
                        gy = py - hi
                    if gx * gx + gy * gy > 1.0000001 * r * r:
                        continue
                    code, rep, branch, value = _case(
                        tri[6 * i], tri[6 * i + 1], tri[6 * i + 2], tri[6 * i + 3],
                        tri[6 * i + 4], tri[6 * i + 5], px, py, r, eps_on, eps_geom)
                    if branch < 0 and code >= 0:
                        total = GAP
                        gaps += 1
                        break
                    total += value
            out[k] = total
    return gaps


def compiled() -> bool:
    return bool(cython.compiled)
