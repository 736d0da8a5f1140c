"""Time one CDF sweep under the compiled and the pure-Python kernel.

    python benchmarks/bench_backends.py --n 50 --radii 2000
"""

import argparse

from polydensity.bench import compare_backends


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=50, help="vertices per quadrant of the star polygon")
    parser.add_argument("--radii", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    timings = compare_backends(args.n, args.radii, args.seed, args.repeat)
    for name, seconds in timings.items():
        print(f"{name:9s} {seconds:.4f} s")
    if len(timings) == 2:
        print(f"speedup   {timings['pure'] / timings['compiled']:.1f}x")


if __name__ == "__main__":
    main()
