"""Compare the compiled term kernel against the pure-Python twin.

Runs the same verification workload in two child interpreters, one with the
default backend and one forced to the pure kernel via COMPDET_PURE=1, and
reports the best wall time of each along with the speedup ratio.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workload():
    from compdet.characters import GL, character, verify_denominators
    from compdet.compound import verify_main

    assert verify_main(3, 2).equal
    assert verify_main(2, 3).equal
    assert verify_main(2, 2).equal
    assert verify_denominators(4).equal
    # a large dense product to stress the term kernel itself
    a = character(GL, (4, 3, 2, 1), num_vars=6)
    b = character(GL, (3, 3, 2, 2), num_vars=6)
    big = a * b * a
    assert sum(1 for _ in big.terms()) == 114973


def run_child():
    import compdet

    start = time.perf_counter()
    workload()
    seconds = time.perf_counter() - start
    print(json.dumps({"backend": compdet.BACKEND, "seconds": seconds}))


def time_backend(pure, repeats):
    env = dict(os.environ)
    env.pop("COMPDET_PURE", None)
    if pure:
        env["COMPDET_PURE"] = "1"
    best = None
    backend = None
    for _ in range(repeats):
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--child"],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        row = json.loads(out.stdout)
        backend = row["backend"]
        if best is None or row["seconds"] < best:
            best = row["seconds"]
    return backend, best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3,
                        help="runs per backend, best time wins (default 3)")
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)
    if args.child:
        run_child()
        return
    default_backend, default_best = time_backend(False, args.repeats)
    pure_backend, pure_best = time_backend(True, args.repeats)
    print(f"{default_backend:>8}: {default_best:8.3f} s")
    print(f"{pure_backend:>8}: {pure_best:8.3f} s")
    if default_backend == pure_backend:
        print("compiled kernel unavailable; both runs used the pure kernel")
    else:
        print(f" speedup: {pure_best / default_best:8.2f}x")


if __name__ == "__main__":
    main()
