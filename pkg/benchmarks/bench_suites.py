"""Wall-clock timings of the verification suites.

    python3 benchmarks/bench_suites.py [--repeat N] [suite ...]
"""

import argparse
import statistics
import time

from yangbraid import suites


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("names", nargs="*", default=list(suites.SUITES))
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'suite':<24}{'cases':>8}{'best s':>10}{'median s':>10}")
    for name in args.names:
        times = []
        for _ in range(args.repeat):
            start = time.perf_counter()
            (result,) = suites.run(name, seed=args.seed)
            times.append(time.perf_counter() - start)
            if not result.passed:
                raise SystemExit(f"{name} failed: {result.failures[:3]}")
        print(f"{name:<24}{result.cases:>8}{min(times):>10.2f}{statistics.median(times):>10.2f}")


if __name__ == "__main__":
    main()
