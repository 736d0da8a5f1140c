"""Command-line front end.

Exit codes: 0 success, 1 validation failures, 2 malformed input, 3 invariant
violation (for example a non-simple polygon), 4 a disk/triangle case gap was
recovered by the fallback path.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from typing import Sequence

import numpy as np

from polydensity import _backend
from polydensity.bench import records_csv, run_random_area_bench
from polydensity.disk_polygon import disk_polygon_area, grid_oracle
from polydensity.disk_triangle import CaseGapWarning, triangle_case
from polydensity.distance_distribution import (BallSource, DiskSource, PolygonSource, SegmentSource,
                                               density_of)
from polydensity.geom_core import Circle, EpsilonPolicy, GeometryError, Triangle
from polydensity.polygon import (NotSimple, Polygon, PolygonFormatError, TooFewVertices,
                                 boundary_distances, crossing_number, format_polygon_csv,
                                 generate_star_polygon, read_polygon_csv, triangulate)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT, EXIT_GAP = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _floats(text: str, count: int | None = None) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated numbers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise InputError(f"expected {count} numbers, got {text!r}")
    if not all(math.isfinite(v) for v in vals):
        raise InputError(f"non-finite value in {text!r}")
    return vals


def _g(x: float) -> str:
    return f"{x:.17g}"


def _eps(args) -> EpsilonPolicy:
    return EpsilonPolicy(args.eps_on, args.eps_geom)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_density(args) -> int:
    eps = _eps(args)
    given = [x for x in (args.polygon, args.disk, args.ball, args.segment) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of a polygon file, --disk, --ball or --segment")
    if args.np < 2:
        raise InputError("--np must be at least 2")
    if args.ball is not None:
        vals = _floats(args.ball, 4)
        source = BallSource(vals[:3], vals[3])
        point = _floats(args.point, 3)
    else:
        point = _floats(args.point, 2)
        if args.disk is not None:
            vals = _floats(args.disk, 3)
            source = DiskSource(vals[:2], vals[2])
        elif args.segment is not None:
            vals = _floats(args.segment, 4)
            source = SegmentSource(vals[:2], vals[2:])
        else:
            source = PolygonSource(read_polygon_csv(args.polygon, eps))
    grid = density_of(source, point, args.np, eps, args.threads)
    _emit(grid.to_csv(), args.out)
    print(f"dmin={_g(grid.dmin)} dmax={_g(grid.dmax)} elapsed_s={_g(grid.elapsed)}",
          file=sys.stderr)
    return EXIT_OK


def cmd_area(args) -> int:
    eps = _eps(args)
    s = read_polygon_csv(args.polygon, eps)
    point = _floats(args.point, 2)
    if not args.radius > 0:
        raise InputError("--radius must be positive")
    area = disk_polygon_area(s, point, args.radius, triangulate(s), eps)
    dmin, dmax = boundary_distances(point, s)
    print(f"area={_g(area)}")
    print(f"crossing_number={crossing_number(point, s)} polygon_area={_g(s.area)} "
          f"dmin={_g(dmin)} dmax={_g(dmax)}")
    return EXIT_OK


def cmd_gen_polygon(args) -> int:
    s = generate_star_polygon(args.n, args.r0, args.seed)
    _emit(format_polygon_csv(s), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    n_list = [int(v) for v in _floats(args.n_list)]
    records, summary = run_random_area_bench(args.m, n_list, args.seed, args.cells)
    _emit(summary.to_csv(), args.out)
    if args.records:
        _emit(records_csv(records), args.records)
    failed = [r for r in records if not r.within_bound]
    print(f"backend={_backend.name()} instances={len(records)} outside_bound={len(failed)}",
          file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _random_pairs(k: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(k):
        r = float(rng.uniform(0.2, 3.0))
        center = rng.uniform(-1.0, 1.0, size=2)
        verts = center + rng.uniform(-2.0, 2.0, size=(3, 2)) * r
        yield [tuple(v) for v in verts], tuple(center), r


def _fixture_pairs(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        items = data["fixtures"] if isinstance(data, dict) else data
        for item in items:
            yield [tuple(v) for v in item["triangle"]], tuple(item["center"]), float(item["radius"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read fixtures {path}: {exc}") from None


def cmd_validate(args) -> int:
    eps = _eps(args)
    if (args.fixtures is None) == (args.random is None):
        raise InputError("give exactly one of --fixtures or --random")
    pairs = _fixture_pairs(args.fixtures) if args.fixtures else _random_pairs(args.random, args.seed)
    total = passed = gaps = 0
    for verts, center, r in pairs:
        total += 1
        t = Triangle(*verts)
        detail = triangle_case(t, Circle(center, r), eps)
        if detail.code >= 0 and detail.branch < 0:
            gaps += 1
            print(f"GAP triangle={verts} center={center} radius={_g(r)}")
            continue
        s = Polygon(verts, validate=False)
        oracle = grid_oracle(s, center, r, args.cells)
        ok = t.area == 0 or oracle.agrees(detail.area)
        passed += ok
        if not ok or args.verbose:
            print(f"{'ok' if ok else 'FAIL'} code={detail.code} branch={detail.branch} "
                  f"area={_g(detail.area)} oracle={_g(oracle.estimate)} "
                  f"bound={_g(oracle.accuracy_bound)}")
    print(f"validated={total} passed={passed} gaps={gaps}")
    if gaps:
        return EXIT_GAP
    return EXIT_OK if passed == total else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polydensity", description=__doc__.splitlines()[0])
    parser.add_argument("--eps-on", type=float, default=1e-9,
                        help="relative on-circle tolerance (default 1e-9)")
    parser.add_argument("--eps-geom", type=float, default=1e-11,
                        help="relative geometric tolerance (default 1e-11)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="density grid of the distance to a uniform point")
    p.add_argument("polygon", nargs="?", help="polygon CSV (first vertex repeated last)")
    p.add_argument("--disk", metavar="CX,CY,RHO")
    p.add_argument("--ball", metavar="CX,CY,CZ,RHO")
    p.add_argument("--segment", metavar="AX,AY,BX,BY")
    p.add_argument("--point", required=True, metavar="X,Y[,Z]")
    p.add_argument("--np", type=int, default=1000)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("area", help="area of a polygon intersected with a disk")
    p.add_argument("polygon")
    p.add_argument("--point", required=True, metavar="X,Y")
    p.add_argument("--radius", required=True, type=float)
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("gen-polygon", help="random star-shaped polygon with 4n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r0", type=float, default=1000.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_polygon)

    p = sub.add_parser("bench", help="random polygon/disk area benchmark against the grid oracle")
    p.add_argument("--m", type=int, default=50)
    p.add_argument("--n-list", default="10,25,50,80,100,150,200")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cells", type=int, default=2000)
    p.add_argument("--out")
    p.add_argument("--records", help="also write per-instance records here")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("validate", help="compare exact disk/triangle areas with the grid oracle")
    p.add_argument("--fixtures")
    p.add_argument("--random", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cells", type=int, default=4000)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", CaseGapWarning)
            code = args.func(args)
        if any(issubclass(w.category, CaseGapWarning) for w in caught):
            print("case gap recovered by fallback", file=sys.stderr)
            return EXIT_GAP
        return code
    except (InputError, PolygonFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotSimple, TooFewVertices, GeometryError, ValueError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
