"""Experimental protocols: rectangle density error study and random-polygon area benchmark.

Errors are measured against the grid oracle, so reported tolerances reflect
the oracle's accuracy rather than agreement between two exact algorithms.
"""

from __future__ import annotations

import io
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from polydensity import _backend
from polydensity.disk_polygon import disk_polygon_area, disk_polygon_areas, grid_oracle
from polydensity.distance_distribution import density_polygon, rectangle_center_reference
from polydensity.polygon import Polygon, generate_star_polygon, triangulate

REPORT_HEADER = ("# errors are measured against the grid quadrature oracle; "
                 "they bound the oracle's discretization, not the exact algorithm")
R0 = 1000.0


@dataclass(frozen=True)
class BenchRecord:
    n_vertices: int
    instance: int
    elapsed_s: float
    area: float
    oracle_area: float
    abs_err: float
    accuracy_bound: float
    parallel: bool = False

    @property
    def within_bound(self) -> bool:
        return self.abs_err <= self.accuracy_bound


@dataclass(frozen=True)
class BenchRow:
    n_vertices: int
    mean_time_s: float
    max_time_s: float
    err_mean: float
    err_max: float
    instances: int


@dataclass(frozen=True)
class BenchSummary:
    rows: tuple[BenchRow, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(REPORT_HEADER + "\n")
        buf.write("n_vertices,mean_time_s,max_time_s,err_mean,err_max\n")
        for r in self.rows:
            buf.write(f"{r.n_vertices},{r.mean_time_s:.17g},{r.max_time_s:.17g},"
                      f"{r.err_mean:.17g},{r.err_max:.17g}\n")
        return buf.getvalue()

    def write_csv(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_csv())


def run_rectangle_error_study(np_list: Sequence[int], L: float = 1.0,
                              alpha: float = 0.8) -> list[tuple[int, float]]:
    """Max density error against the exact rectangle reference, for P at the center."""
    s = Polygon([(0.0, 0.0), (L, 0.0), (L, alpha * L), (0.0, alpha * L)])
    center = (L / 2.0, alpha * L / 2.0)
    out = []
    for np_ in np_list:
        if np_ < 100:
            raise ValueError("np values must be at least 100")
        grid = density_polygon(s, center, np_)
        ref = rectangle_center_reference(L, alpha, grid.points)
        out.append((np_, float(np.max(np.abs(grid.values - ref)))))
    return out


def instance_seeds(seed: int, n: int, k: int) -> tuple[int, np.random.Generator]:
    """Polygon seed and disk generator of instance ``k`` for ``n`` vertices per quadrant.

    Both derive from ``SeedSequence([seed, n, k])`` so a row can be rerun alone.
    """
    poly_ss, disk_ss = np.random.SeedSequence([seed, n, k]).spawn(2)
    return int(poly_ss.generate_state(1)[0]), np.random.default_rng(disk_ss)


def bench_instance(n: int, k: int, seed: int, cells_per_axis: int = 2000,
                   parallel: bool = False) -> BenchRecord:
    poly_seed, rng = instance_seeds(seed, n, k)
    s = generate_star_polygon(n, R0, poly_seed)
    center = rng.uniform(-100.0, 100.0, size=2)
    radius = float(rng.uniform(50.0, 250.0))
    start = time.perf_counter()
    area = disk_polygon_area(s, center, radius, triangulate(s))
    elapsed = time.perf_counter() - start
    oracle = grid_oracle(s, center, radius, cells_per_axis)
    return BenchRecord(4 * n, k, elapsed, area, float(oracle.estimate),
                       abs(area - oracle.estimate), oracle.accuracy_bound, parallel)


def summarize(records: Sequence[BenchRecord]) -> BenchSummary:
    rows = []
    for nv in sorted({r.n_vertices for r in records}):
        group = [r for r in records if r.n_vertices == nv]
        times = np.array([r.elapsed_s for r in group])
        errs = np.array([r.abs_err for r in group])
        rows.append(BenchRow(nv, float(times.mean()), float(times.max()),
                             float(errs.mean()), float(errs.max()), len(group)))
    return BenchSummary(tuple(rows))


def run_random_area_bench(m: int, n_list: Sequence[int], seed: int, cells_per_axis: int = 2000,
                          workers: int = 1) -> tuple[list[BenchRecord], BenchSummary]:
    """Random star polygons (radius 1000) against random disks, timed and checked.

    Disk centers are uniform on ``[-100, 100]^2`` and radii uniform on
    ``[50, 250]``. Timing covers triangulation and the area call only.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    jobs = [(n, k) for n in n_list for k in range(m)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            records = list(pool.map(
                lambda job: bench_instance(job[0], job[1], seed, cells_per_axis, True), jobs))
    else:
        records = [bench_instance(n, k, seed, cells_per_axis) for n, k in jobs]
    return records, summarize(records)


def records_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    names = list(asdict(records[0]).keys()) if records else []
    buf.write(",".join(names) + "\n")
    for r in records:
        buf.write(",".join(f"{v:.17g}" if isinstance(v, float) else str(v)
                           for v in asdict(r).values()) + "\n")
    return buf.getvalue()


def compare_backends(n: int = 50, radii: int = 2000, seed: int = 0,
                     repeat: int = 3) -> dict[str, float]:
    """Best-of-``repeat`` seconds for one CDF sweep under each available kernel."""
    s = generate_star_polygon(n, R0, seed)
    tri = triangulate(s)
    rs = np.linspace(1.0, 1500.0, radii)
    timings = {}
    previous = _backend.name()
    try:
        for which in _backend.available():
            _backend.use_backend(which)
            best = math.inf
            for _ in range(repeat):
                start = time.perf_counter()
                disk_polygon_areas(s, (0.0, 0.0), rs, tri)
                best = min(best, time.perf_counter() - start)
            timings[which] = best
    finally:
        _backend.use_backend(previous)
    return timings
